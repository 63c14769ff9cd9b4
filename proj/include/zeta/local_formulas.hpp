#pragma once

#include <cstdint>
#include <optional>

#include "zeta/series.hpp"

namespace zeta {

// Ring of integers of a finite extension of Q_p, seen only through its
// ramification index e and residue degree f.
struct PadicRingData {
  std::int64_t p;
  int e = 1;
  int f = 1;

  // Throws PreconditionError unless p is prime and e, f >= 1.
  void check() const;
  friend bool operator==(const PadicRingData&, const PadicRingData&) = default;
};

// p-adic valuation of the parameter n of Z[x]/x(x-n); n = 0 has infinite
// valuation.
class ValuationOfN {
 public:
  static ValuationOfN infinite() { return ValuationOfN(std::nullopt); }
  static ValuationOfN finite(int v);
  // v_p(n), infinite for n = 0.
  static ValuationOfN of(std::int64_t n, std::int64_t p);

  bool is_infinite() const { return !val_.has_value(); }
  // Requires !is_infinite().
  int value() const { return *val_; }

 private:
  explicit ValuationOfN(std::optional<int> v) : val_(v) {}
  std::optional<int> val_;
};

// Maximal order of a simple component M_r(D) of a p-adic semisimple algebra,
// D of index m, acting on k copies of the irreducible module.
struct HeyComponent {
  int r = 1;
  int m = 1;
  int k = 1;
  PadicRingData center;
};

// Local zeta of R[x]/x(x-n)R[x] over the p-adic ring R, in u = p^{-s}.
//   n = 0:  (1 - q u^{2f})^{-1} (1 - u^f)^{-1}
//   n != 0: sum_{r<v} q^r u^{2fr} (1-u^f)^{-1} + q^v u^{2fv} (1-u^f)^{-2}
// with q = p^f and v = e * v_p(n).
LocalFactor rank2_local(const PadicRingData& ring, const ValuationOfN& val);

// Number of ideals of R[x]/x(x-n)R[x] with R-basis {pi^r1 + a x, pi^r2 x}.
BigInt rank2_ideal_count(const PadicRingData& ring, const ValuationOfN& val, int r1, int r2);

// Local zeta of R T for a rank-2 scheme T of order n (x -> x - 1 shift
// turns RT into R[x]/x(x-n)). n >= 1.
LocalFactor rank2_scheme_local(const PadicRingData& ring, std::int64_t n);

// Full local factor of Z_p C_p at p: (1 - u + p u^2) / (1 - u)^2.
LocalFactor solomon_cp_local(std::int64_t p);

// prod_{j<k} (1 - q^{jm} u^{frm})^{-1}, q = p^f of the center.
LocalFactor hey_local(const HeyComponent& component);

}  // namespace zeta
