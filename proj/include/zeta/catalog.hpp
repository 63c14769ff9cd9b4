#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zeta/local_formulas.hpp"
#include "zeta/number_fields.hpp"
#include "zeta/orders.hpp"
#include "zeta/series.hpp"

namespace zeta {

// Local zeta of the order base-changed to a p-adic ring of integers.
using LocalRule = std::function<LocalFactor(const PadicRingData&)>;

// A Z-order in a commutative semisimple Q-algebra whose local zeta at each
// bad prime is known in closed form.
struct OrderCatalogEntry {
  std::string name;
  // One field per simple component of the rational algebra.
  std::vector<FieldDescriptor> wedderburn;
  BadPrimeSet bad_primes;
  LocalRule local_rule;
  // The order itself, for census cross-checks.
  IntegralOrder order;
};

// Dedekind components plus full replacement local factors at the
// exceptional primes.
struct GlobalZeta {
  FieldComponents components;
  std::map<std::int64_t, LocalFactor> exceptional;

  LocalFactor local_factor(std::int64_t p) const;
};

// Collects equal fields into (field, multiplicity) pairs, first-seen order.
FieldComponents group_components(const std::vector<FieldDescriptor>& fields);

// Z as an order in Q; no bad primes.
OrderCatalogEntry trivial_catalog();
// Adjacency algebra of a rank-2 scheme of order n (K_n). n >= 2.
OrderCatalogEntry rank2_catalog(std::int64_t n);
// Z C_p; p = 2 yields rank2_catalog(2).
OrderCatalogEntry cp_catalog(std::int64_t p);
// R T for R the ring of integers of `field` and T rank 2 of order n.
OrderCatalogEntry rank2_over_catalog(std::int64_t n, const FieldDescriptor& field);

GlobalZeta global_zeta(const OrderCatalogEntry& entry);

// Zeta of a (x) b for locally coprime a, b. Throws PreconditionError when
// the bad sets meet, when a compositum of two nontrivial fields would be
// needed, or when a local rule refuses the required coefficient ring.
GlobalZeta tensor_global_zeta(const OrderCatalogEntry& a, const OrderCatalogEntry& b);

// a (x) b packaged as a catalog entry; its local rule answers only over Z_p.
OrderCatalogEntry tensor_catalog(const OrderCatalogEntry& a, const OrderCatalogEntry& b);

DirichletCoefficients expand_global(const GlobalZeta& z, std::int64_t N);

}  // namespace zeta

namespace zeta {

// Z C_6 with the residue-degree-2 correction attached to the prime 3 and the
// squared degree-1 correction attached to 2, i.e. the two bad primes'
// corrections exchanged relative to tensor_global_zeta(C_3, C_2). Kept so the
// census can show that this reading is wrong.
GlobalZeta zc6_swapped_variant();

}  // namespace zeta
