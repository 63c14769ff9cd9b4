#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zeta/arith.hpp"
#include "zeta/errors.hpp"

namespace zeta {

// Dense univariate polynomial with exact coefficients; coefficient i
// belongs to u^i. Canonical form: no trailing zeros, zero is empty.
template <typename Scalar>
class UPolynomial {
 public:
  UPolynomial() = default;
  UPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPolynomial constant(Scalar c) { return UPolynomial(std::vector<Scalar>{std::move(c)}); }

  // c * u^k
  static UPolynomial monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return UPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  friend bool operator==(const UPolynomial&, const UPolynomial&) = default;

  UPolynomial operator-() const {
    UPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend UPolynomial operator+(const UPolynomial& a, const UPolynomial& b) {
    std::vector<Scalar> v(std::max(a.size(), b.size()), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] += b.coeffs_[i];
    return UPolynomial(std::move(v));
  }

  friend UPolynomial operator-(const UPolynomial& a, const UPolynomial& b) { return a + (-b); }

  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPolynomial(std::move(v));
  }

  friend UPolynomial operator*(const Scalar& s, const UPolynomial& a) {
    std::vector<Scalar> v = a.coeffs_;
    for (auto& c : v) c *= s;
    return UPolynomial(std::move(v));
  }

  UPolynomial pow(unsigned k) const {
    UPolynomial r = constant(Scalar(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // Coefficients c_0..c_K of the product, dropping everything above u^K.
  std::vector<Scalar> truncated(std::size_t K) const {
    std::vector<Scalar> v(K + 1, Scalar(0));
    for (std::size_t i = 0; i < std::min(K + 1, coeffs_.size()); ++i) v[i] = coeffs_[i];
    return v;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly = UPolynomial<BigInt>;

// gcd of all coefficients, nonnegative; zero for the zero polynomial.
BigInt content(const Poly& f);

// Divide every coefficient by d, which must divide each of them.
Poly divide_exact(const Poly& f, const BigInt& d);

// Exact quotient f / g over Z; throws InvariantError if g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

// Primitive gcd over Z, normalised to a positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// Human-readable form in the variable `var`, e.g. "1 - u + 2u^2".
std::string to_string(const Poly& f, const std::string& var = "u");

}  // namespace zeta
