#include "zeta/orders.hpp"

#include <limits>
#include <string>

#include "zeta/errors.hpp"

namespace zeta {

IntegralOrder::IntegralOrder(std::size_t rank, std::vector<std::int64_t> table, IntVector identity)
    : rank_(rank), table_(std::move(table)), identity_(std::move(identity)) {
  const std::size_t r = rank_;
  if (r == 0 || table_.size() != r * r * r || static_cast<std::size_t>(identity_.size()) != r)
    throw PreconditionError("integral order: table and identity must match the rank");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < r; ++l) {
            lhs += c(i, j, l) * c(l, k, m);
            rhs += c(j, k, l) * c(i, l, m);
          }
          if (lhs != rhs)
            throw PreconditionError("integral order: multiplication is not associative on (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }

  left_.assign(r, IntMatrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) left_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = c(i, j, k);

  for (std::size_t i = 0; i < r; ++i) {
    const IntVector bi = IntVector::Unit(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i));
    if (multiply(identity_, bi) != bi || multiply(bi, identity_) != bi)
      throw PreconditionError("integral order: identity does not act trivially on b_" + std::to_string(i));
  }
}

IntMatrix IntegralOrder::right_multiplication(std::size_t i) const {
  const auto r = static_cast<Eigen::Index>(rank_);
  IntMatrix m(r, r);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index k = 0; k < r; ++k) m(k, j) = c(static_cast<std::size_t>(j), i, static_cast<std::size_t>(k));
  return m;
}

IntVector IntegralOrder::multiply(const IntVector& x, const IntVector& y) const {
  IntVector out = IntVector::Zero(static_cast<Eigen::Index>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    if (x(static_cast<Eigen::Index>(i)) != 0) out += x(static_cast<Eigen::Index>(i)) * (left_[i] * y);
  return out;
}

bool IntegralOrder::is_commutative() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

IntegralOrder order_from_scheme(const AssociationScheme& S) {
  const std::size_t r = S.rank();
  std::vector<std::int64_t> table(r * r * r);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t u = 0; u < r; ++u) table[(s * r + t) * r + u] = S.structure_constant(s, t, u);
  return IntegralOrder(r, std::move(table), IntVector::Unit(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(S.identity_index())));
}

IntegralOrder tensor_order(const IntegralOrder& A, const IntegralOrder& B) {
  const std::size_t ra = A.rank(), rb = B.rank(), r = ra * rb;
  std::vector<std::int64_t> table(r * r * r);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      for (std::size_t i2 = 0; i2 < ra; ++i2)
        for (std::size_t j2 = 0; j2 < rb; ++j2)
          for (std::size_t k = 0; k < ra; ++k)
            for (std::size_t k2 = 0; k2 < rb; ++k2)
              table[((i * rb + j) * r + (i2 * rb + j2)) * r + (k * rb + k2)] = A.c(i, i2, k) * B.c(j, j2, k2);
  IntVector id(static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      id(static_cast<Eigen::Index>(i * rb + j)) = A.identity()(static_cast<Eigen::Index>(i)) * B.identity()(static_cast<Eigen::Index>(j));
  return IntegralOrder(r, std::move(table), std::move(id));
}

IntegralOrder trivial_order() { return IntegralOrder(1, {1}, IntVector::Ones(1)); }

IntegralOrder quadratic_order(std::int64_t n) {
  // basis {1, x}: 1*1 = 1, 1*x = x*1 = x, x*x = n x
  std::vector<std::int64_t> table{1, 0, 0, 1, 0, 1, 0, n};
  return IntegralOrder(2, std::move(table), IntVector::Unit(2, 0));
}

IntegralOrder cyclotomic_integers(std::int64_t ell) {
  if (!is_prime(ell)) throw PreconditionError("cyclotomic_integers: " + std::to_string(ell) + " is not prime");
  const auto r = static_cast<std::size_t>(ell - 1);
  std::vector<std::int64_t> table(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t s = i + j;
      auto* out = &table[(i * r + j) * r];
      if (s < r) {
        out[s] = 1;
      } else if (s == r) {
        // e^{l-1} = -(1 + e + ... + e^{l-2})
        for (std::size_t k = 0; k < r; ++k) out[k] = -1;
      } else {
        out[s - r - 1] = 1;
      }
    }
  return IntegralOrder(r, std::move(table), IntVector::Unit(static_cast<Eigen::Index>(r), 0));
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt discriminant(const IntegralOrder& A) {
  const std::size_t r = A.rank();
  std::vector<BigInt> trace(r, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) trace[k] += A.c(k, l, l);
  std::vector<std::vector<BigInt>> form(r, std::vector<BigInt>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) form[i][j] += A.c(i, j, k) * trace[k];
  return determinant(std::move(form));
}

BadPrimeSet bad_primes(const IntegralOrder& A) {
  BigInt d = boost::multiprecision::abs(discriminant(A));
  if (d == 0) throw PreconditionError("bad_primes: discriminant is zero (algebra is not separable)");
  BadPrimeSet out;
  for (std::int64_t p = 2; BigInt(p) * p <= d; ++p) {
    if (d % p != 0) continue;
    out.insert(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) {
    if (d > std::numeric_limits<std::int64_t>::max()) throw Error("bad_primes: prime factor out of range");
    out.insert(static_cast<std::int64_t>(d));
  }
  return out;
}

bool locally_coprime(const IntegralOrder& A, const IntegralOrder& B) {
  const BadPrimeSet a = bad_primes(A);
  for (const std::int64_t p : bad_primes(B))
    if (a.count(p)) return false;
  return true;
}

}  // namespace zeta
