#include "zeta/number_fields.hpp"

namespace zeta {

FieldDescriptor FieldDescriptor::cyclotomic(std::int64_t ell) {
  if (!is_prime(ell)) throw PreconditionError("cyclotomic field needs a prime conductor, got " + std::to_string(ell));
  if (ell == 2) return rational();
  return FieldDescriptor(Kind::CyclotomicPrime, ell);
}

std::string FieldDescriptor::name() const {
  return is_rational() ? std::string("Q") : "Q(e" + std::to_string(ell_) + ")";
}

SplittingData splitting(const FieldDescriptor& field, std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("splitting: " + std::to_string(p) + " is not prime");
  SplittingData out{p, {}};
  if (field.is_rational()) {
    out.primes_above.push_back({1, 1});
    return out;
  }
  const std::int64_t ell = field.conductor();
  if (p == ell) {
    out.primes_above.push_back({static_cast<int>(ell - 1), 1});
    return out;
  }
  const int f = multiplicative_order(p, ell);
  const int g = static_cast<int>(ell - 1) / f;
  out.primes_above.assign(static_cast<std::size_t>(g), PrimeAbove{1, f});
  return out;
}

LocalFactor dedekind_local(const FieldDescriptor& field, std::int64_t p) {
  LocalFactor out = LocalFactor::one(p);
  for (const auto& P : splitting(field, p).primes_above)
    out = lf_mul(out, geometric_factor(p, 1, static_cast<std::size_t>(P.residue_degree)));
  return out;
}

LocalFactor dedekind_product_local(const FieldComponents& components, std::int64_t p) {
  LocalFactor out = LocalFactor::one(p);
  for (const auto& [field, mult] : components) {
    if (mult < 1) throw PreconditionError("component multiplicity must be >= 1");
    out = lf_mul(out, lf_pow(dedekind_local(field, p), static_cast<unsigned>(mult)));
  }
  return out;
}

DirichletCoefficients dedekind_series(const FieldComponents& components, std::int64_t N) {
  LocalFactorMap factors;
  for (const std::int64_t p : primes_up_to(N)) factors.emplace(p, dedekind_product_local(components, p));
  return euler_expand(factors, N);
}

}  // namespace zeta
