#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zeta/arith.hpp"
#include "zeta/polynomial.hpp"

namespace zeta {

// A rational function numerator(u) / denominator(u) attached to a rational
// prime p, in the variable u = p^{-s}. The denominator has constant term
// +-1 so the value is a power series in u.
//
// Values are kept fully reduced: numerator and denominator share no common
// polynomial factor and the denominator has constant term +1. Two terms are
// therefore equal iff they represent the same power series.
class LocalTerm {
 public:
  // Throws InvariantError if the denominator's constant term is not +-1.
  LocalTerm(std::int64_t prime, Poly numerator, Poly denominator);

  static LocalTerm zero(std::int64_t prime) { return LocalTerm(prime, Poly{}, Poly{1}); }

  std::int64_t prime() const { return prime_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  // Power-series coefficients c_0..c_K, by recurrence against the denominator.
  std::vector<BigInt> expand(std::size_t K) const;

  std::string to_string() const;

  friend bool operator==(const LocalTerm&, const LocalTerm&) = default;

 private:
  std::int64_t prime_;
  Poly num_;
  Poly den_;
};

LocalTerm operator+(const LocalTerm& a, const LocalTerm& b);
LocalTerm operator*(const LocalTerm& a, const LocalTerm& b);

// A local zeta factor: a LocalTerm whose series starts with a nonzero
// constant (a_{p^0} != 0).
class LocalFactor : public LocalTerm {
 public:
  // Throws InvariantError if the numerator's constant term vanishes.
  LocalFactor(std::int64_t prime, Poly numerator, Poly denominator);
  explicit LocalFactor(const LocalTerm& term);

  static LocalFactor one(std::int64_t prime) { return LocalFactor(prime, Poly{1}, Poly{1}); }
};

// Both require equal primes (PreconditionError otherwise).
LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b);
// The sum of two terms; throws InvariantError when the result is not a
// valid zeta factor.
LocalFactor lf_add(const LocalTerm& a, const LocalTerm& b);
LocalFactor lf_pow(const LocalFactor& a, unsigned k);
inline std::vector<BigInt> lf_expand(const LocalTerm& f, std::size_t K) { return f.expand(K); }

// 1 / (1 - c u^k) at prime p.
LocalFactor geometric_factor(std::int64_t p, const BigInt& c, std::size_t k);

// Truncated Dirichlet series a_1..a_N.
class DirichletCoefficients {
 public:
  explicit DirichletCoefficients(std::vector<BigInt> values);

  // The series 1 (a_1 = 1, all others zero).
  static DirichletCoefficients unit(std::int64_t bound);

  std::int64_t bound() const { return static_cast<std::int64_t>(values_.size()); }
  // 1-based access.
  const BigInt& operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n - 1)]; }
  const std::vector<BigInt>& values() const { return values_; }

  friend bool operator==(const DirichletCoefficients&, const DirichletCoefficients&) = default;

 private:
  std::vector<BigInt> values_;
};

using LocalFactorMap = std::map<std::int64_t, LocalFactor>;

// Multiplicative assembly of a_n from the local factors at every prime <= N.
DirichletCoefficients euler_expand(const LocalFactorMap& factors, std::int64_t N);

// Dirichlet convolution.
DirichletCoefficients ds_mul(const DirichletCoefficients& a, const DirichletCoefficients& b);

// True iff a_{mn} = a_m a_n for every coprime pair with mn <= bound.
bool is_multiplicative(const DirichletCoefficients& a);

}  // namespace zeta
