#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "zeta/arith.hpp"
#include "zeta/schemes.hpp"

namespace zeta {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// A ring that is free of rank r over Z, given by its multiplication table
// b_i b_j = sum_k c_ijk b_k.
class IntegralOrder {
 public:
  // Checks associativity on all basis triples and the identity element;
  // throws PreconditionError otherwise.
  IntegralOrder(std::size_t rank, std::vector<std::int64_t> table, IntVector identity);

  std::size_t rank() const { return rank_; }
  std::int64_t c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * rank_ + j) * rank_ + k]; }
  const std::vector<std::int64_t>& table() const { return table_; }
  const IntVector& identity() const { return identity_; }

  // Matrix of v -> b_i v in basis coordinates (column j is b_i b_j).
  const IntMatrix& left_multiplication(std::size_t i) const { return left_[i]; }
  // Matrix of v -> v b_i.
  IntMatrix right_multiplication(std::size_t i) const;

  IntVector multiply(const IntVector& x, const IntVector& y) const;
  bool is_commutative() const;

 private:
  std::size_t rank_;
  std::vector<std::int64_t> table_;
  IntVector identity_;
  std::vector<IntMatrix> left_;
};

using BadPrimeSet = std::set<std::int64_t>;

IntegralOrder order_from_scheme(const AssociationScheme& S);

// Basis b_i (x) b'_j, index i * rank(B) + j.
IntegralOrder tensor_order(const IntegralOrder& A, const IntegralOrder& B);

// Z itself.
IntegralOrder trivial_order();
// Z[x]/(x^2 - n x) on the basis {1, x}; n = 0 gives the dual numbers.
IntegralOrder quadratic_order(std::int64_t n);
// Z[e_l] on the power basis 1, e, ..., e^{l-2}. l prime; l = 2 gives Z.
IntegralOrder cyclotomic_integers(std::int64_t ell);

// det of the trace form (tr(L_{b_i b_j}))_ij.
BigInt discriminant(const IntegralOrder& A);

// Primes dividing the discriminant. Throws PreconditionError when the
// discriminant vanishes.
BadPrimeSet bad_primes(const IntegralOrder& A);

// Disjoint bad-prime sets. Conservative: may answer false for a pair that is
// locally coprime at a prime dividing both discriminants.
bool locally_coprime(const IntegralOrder& A, const IntegralOrder& B);

// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(std::vector<std::vector<BigInt>> m);

}  // namespace zeta
