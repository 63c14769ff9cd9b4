#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeta/series.hpp"

namespace zeta {

// Q or Q(e_l) for a prime l. Q(e_2) = Q is folded into Rational.
class FieldDescriptor {
 public:
  enum class Kind { Rational, CyclotomicPrime };

  static FieldDescriptor rational() { return FieldDescriptor(Kind::Rational, 1); }
  // Throws PreconditionError if ell is not prime.
  static FieldDescriptor cyclotomic(std::int64_t ell);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  // The prime l of Q(e_l); 1 for Q.
  std::int64_t conductor() const { return ell_; }
  int degree() const { return static_cast<int>(ell_ == 1 ? 1 : ell_ - 1); }
  std::string name() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::int64_t ell) : kind_(kind), ell_(ell) {}

  Kind kind_;
  std::int64_t ell_;
};

struct PrimeAbove {
  int ramification;  // e
  int residue_degree;  // f
  friend bool operator==(const PrimeAbove&, const PrimeAbove&) = default;
};

struct SplittingData {
  std::int64_t prime;
  std::vector<PrimeAbove> primes_above;
};

SplittingData splitting(const FieldDescriptor& field, std::int64_t p);

// prod over primes P | p of (1 - u^{f(P)})^{-1}
LocalFactor dedekind_local(const FieldDescriptor& field, std::int64_t p);

using FieldComponents = std::vector<std::pair<FieldDescriptor, int>>;

// Local factor of the product of Dedekind zetas, with multiplicities.
LocalFactor dedekind_product_local(const FieldComponents& components, std::int64_t p);

DirichletCoefficients dedekind_series(const FieldComponents& components, std::int64_t N);

}  // namespace zeta
