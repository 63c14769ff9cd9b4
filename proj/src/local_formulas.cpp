#include "zeta/local_formulas.hpp"

#include <string>

namespace zeta {

void PadicRingData::check() const {
  if (!is_prime(p)) throw PreconditionError("p-adic ring over non-prime " + std::to_string(p));
  if (e < 1 || f < 1) throw PreconditionError("p-adic ring needs e >= 1 and f >= 1");
}

ValuationOfN ValuationOfN::finite(int v) {
  if (v < 0) throw PreconditionError("valuation must be nonnegative");
  return ValuationOfN(v);
}

ValuationOfN ValuationOfN::of(std::int64_t n, std::int64_t p) {
  return n == 0 ? infinite() : finite(valuation(n, p));
}

LocalFactor rank2_local(const PadicRingData& ring, const ValuationOfN& val) {
  ring.check();
  const auto f = static_cast<std::size_t>(ring.f);
  const BigInt q = big_pow(ring.p, static_cast<unsigned>(ring.f));
  const Poly one_minus = Poly{1} - Poly::monomial(1, f);  // 1 - u^f

  if (val.is_infinite()) return LocalFactor(ring.p, Poly{1}, (Poly{1} - Poly::monomial(q, 2 * f)) * one_minus);

  const int v = ring.e * val.value();
  // Common denominator (1 - u^f)^2.
  Poly num;
  BigInt qr = 1;
  for (int r = 0; r < v; ++r, qr *= q) num = num + Poly::monomial(qr, 2 * f * static_cast<std::size_t>(r)) * one_minus;
  num = num + Poly::monomial(qr, 2 * f * static_cast<std::size_t>(v));
  return LocalFactor(ring.p, num, one_minus * one_minus);
}

BigInt rank2_ideal_count(const PadicRingData& ring, const ValuationOfN& val, int r1, int r2) {
  ring.check();
  if (r1 < 0 || r2 < 0) throw PreconditionError("rank2_ideal_count: exponents must be nonnegative");
  const auto pf = [&](int k) { return big_pow(ring.p, static_cast<unsigned>(ring.f * k)); };
  if (val.is_infinite()) return r1 >= r2 ? pf(r2) : BigInt(0);
  const int v = ring.e * val.value();
  if (r2 < v) return r1 >= r2 ? pf(r2) : BigInt(0);
  return r1 >= v ? pf(v) : BigInt(0);
}

LocalFactor rank2_scheme_local(const PadicRingData& ring, std::int64_t n) {
  if (n < 1) throw PreconditionError("rank-2 scheme order must be positive");
  return rank2_local(ring, ValuationOfN::finite(valuation(n, ring.p)));
}

LocalFactor solomon_cp_local(std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("solomon_cp_local: " + std::to_string(p) + " is not prime");
  const Poly one_minus{1, -1};
  return LocalFactor(p, Poly{1, -1, BigInt(p)}, one_minus * one_minus);
}

LocalFactor hey_local(const HeyComponent& c) {
  c.center.check();
  if (c.r < 1 || c.m < 1 || c.k < 1) throw PreconditionError("Hey component parameters must be >= 1");
  const std::int64_t p = c.center.p;
  const BigInt q = big_pow(p, static_cast<unsigned>(c.center.f));
  const auto power = static_cast<std::size_t>(c.center.f * c.r * c.m);
  LocalFactor out = LocalFactor::one(p);
  for (int j = 0; j < c.k; ++j)
    out = lf_mul(out, geometric_factor(p, boost::multiprecision::pow(q, static_cast<unsigned>(j * c.m)), power));
  return out;
}

}  // namespace zeta
