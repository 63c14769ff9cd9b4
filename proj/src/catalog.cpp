#include "zeta/catalog.hpp"

#include <algorithm>

namespace zeta {

namespace {

BadPrimeSet prime_divisors(std::int64_t n) {
  BadPrimeSet out;
  for (const auto& [p, e] : factorize(n)) out.insert(p);
  return out;
}

[[noreturn]] void unsupported_ring(const std::string& name, const PadicRingData& ring) {
  throw PreconditionError("no local formula for " + name + " over the p-adic ring with p=" + std::to_string(ring.p) +
                          ", e=" + std::to_string(ring.e) + ", f=" + std::to_string(ring.f) +
                          " (only Z_p is supported)");
}

std::string set_to_string(const BadPrimeSet& s) {
  std::string out = "{";
  for (const auto p : s) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

// Local factor of a (x) b at a prime p where a is bad and b is maximal: one
// copy of a's local rule per prime of each component of b above p.
LocalFactor exceptional_factor(const OrderCatalogEntry& bad, const OrderCatalogEntry& maximal, std::int64_t p) {
  LocalFactor out = LocalFactor::one(p);
  for (const auto& field : maximal.wedderburn)
    for (const auto& P : splitting(field, p).primes_above)
      out = lf_mul(out, bad.local_rule(PadicRingData{p, P.ramification, P.residue_degree}));
  return out;
}

std::vector<FieldDescriptor> composita(const OrderCatalogEntry& a, const OrderCatalogEntry& b) {
  std::vector<FieldDescriptor> out;
  for (const auto& fa : a.wedderburn)
    for (const auto& fb : b.wedderburn) {
      if (!fa.is_rational() && !fb.is_rational())
        throw PreconditionError("compositum " + fa.name() + " x " + fb.name() + " of two nontrivial fields is not supported");
      out.push_back(fa.is_rational() ? fb : fa);
    }
  return out;
}

}  // namespace

LocalFactor GlobalZeta::local_factor(std::int64_t p) const {
  const auto it = exceptional.find(p);
  return it != exceptional.end() ? it->second : dedekind_product_local(components, p);
}

FieldComponents group_components(const std::vector<FieldDescriptor>& fields) {
  FieldComponents out;
  for (const auto& f : fields) {
    const auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) { return c.first == f; });
    if (it == out.end())
      out.emplace_back(f, 1);
    else
      ++it->second;
  }
  return out;
}

OrderCatalogEntry trivial_catalog() {
  return {"Z", {FieldDescriptor::rational()}, {}, [](const PadicRingData& ring) { return geometric_factor(ring.p, 1, static_cast<std::size_t>(ring.f)); }, trivial_order()};
}

OrderCatalogEntry rank2_catalog(std::int64_t n) {
  if (n < 2) throw PreconditionError("rank-2 scheme needs order n >= 2, got " + std::to_string(n));
  return {"K_" + std::to_string(n),
          {FieldDescriptor::rational(), FieldDescriptor::rational()},
          prime_divisors(n),
          [n](const PadicRingData& ring) { return rank2_scheme_local(ring, n); },
          order_from_scheme(complete_graph_scheme(static_cast<int>(n)))};
}

OrderCatalogEntry cp_catalog(std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("C_p needs a prime p, got " + std::to_string(p));
  if (p == 2) {
    OrderCatalogEntry e = rank2_catalog(2);
    e.name = "C_2";
    return e;
  }
  const std::string name = "C_" + std::to_string(p);
  return {name,
          {FieldDescriptor::rational(), FieldDescriptor::cyclotomic(p)},
          {p},
          [p, name](const PadicRingData& ring) {
            if (ring != PadicRingData{p, 1, 1}) unsupported_ring(name, ring);
            return solomon_cp_local(p);
          },
          order_from_scheme(cyclic_group_scheme(static_cast<int>(p)))};
}

OrderCatalogEntry rank2_over_catalog(std::int64_t n, const FieldDescriptor& field) {
  OrderCatalogEntry base = rank2_catalog(n);
  const std::string name = base.name + " over " + field.name();
  return {name,
          {field, field},
          base.bad_primes,
          [n, field, name](const PadicRingData& ring) {
            if (ring.e != 1 || ring.f != 1) unsupported_ring(name, ring);
            LocalFactor out = LocalFactor::one(ring.p);
            for (const auto& P : splitting(field, ring.p).primes_above)
              out = lf_mul(out, rank2_scheme_local(PadicRingData{ring.p, P.ramification, P.residue_degree}, n));
            return out;
          },
          tensor_order(cyclotomic_integers(field.is_rational() ? 2 : field.conductor()), base.order)};
}

GlobalZeta global_zeta(const OrderCatalogEntry& entry) {
  GlobalZeta z{group_components(entry.wedderburn), {}};
  for (const std::int64_t p : entry.bad_primes) z.exceptional.emplace(p, entry.local_rule(PadicRingData{p, 1, 1}));
  return z;
}

GlobalZeta tensor_global_zeta(const OrderCatalogEntry& a, const OrderCatalogEntry& b) {
  for (const std::int64_t p : a.bad_primes)
    if (b.bad_primes.count(p))
      throw PreconditionError("tensor formula requires locally coprime orders (at every prime one factor must be "
                              "maximal), but " + a.name + " " + set_to_string(a.bad_primes) + " and " + b.name + " " +
                              set_to_string(b.bad_primes) + " are both non-maximal at p=" + std::to_string(p));
  GlobalZeta z{group_components(composita(a, b)), {}};
  for (const std::int64_t p : a.bad_primes) z.exceptional.emplace(p, exceptional_factor(a, b, p));
  for (const std::int64_t p : b.bad_primes) z.exceptional.emplace(p, exceptional_factor(b, a, p));
  return z;
}

OrderCatalogEntry tensor_catalog(const OrderCatalogEntry& a, const OrderCatalogEntry& b) {
  const GlobalZeta z = tensor_global_zeta(a, b);
  BadPrimeSet bad = a.bad_primes;
  bad.insert(b.bad_primes.begin(), b.bad_primes.end());
  const std::string name = a.name + " x " + b.name;
  return {name, composita(a, b), bad,
          [z, name](const PadicRingData& ring) {
            if (ring.e != 1 || ring.f != 1) unsupported_ring(name, ring);
            return z.local_factor(ring.p);
          },
          tensor_order(a.order, b.order)};
}

DirichletCoefficients expand_global(const GlobalZeta& z, std::int64_t N) {
  LocalFactorMap factors;
  for (const std::int64_t p : primes_up_to(N)) factors.emplace(p, z.local_factor(p));
  return euler_expand(factors, N);
}

}  // namespace zeta

namespace zeta {

GlobalZeta zc6_swapped_variant() {
  GlobalZeta z{{{FieldDescriptor::rational(), 2}, {FieldDescriptor::cyclotomic(3), 2}}, {}};
  // The Dedekind part at each prime is kept; only the correction numerators move.
  const auto with_correction = [&](std::int64_t p, const Poly& correction) {
    const LocalFactor dedekind = dedekind_product_local(z.components, p);
    return LocalFactor(p, dedekind.numerator() * correction, dedekind.denominator());
  };
  const Poly deg1_at_2{1, -1, 2};
  const Poly deg1_at_3{1, -1, 3};
  const Poly deg2_at_3{1, 0, -1, 0, 9};
  z.exceptional.emplace(2, with_correction(2, deg1_at_2 * deg1_at_2));
  z.exceptional.emplace(3, with_correction(3, deg1_at_3 * deg2_at_3));
  return z;
}

}  // namespace zeta
