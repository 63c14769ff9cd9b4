#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zeta/orders.hpp"
#include "zeta/series.hpp"

namespace zeta {

// Row-style Hermite normal form of a full sublattice of Z^r: row i is
// (0, ..., 0, d_i, h_{i,i+1}, ..., h_{i,r-1}) with 0 <= h_{ij} < d_j.
class HnfBasis {
 public:
  explicit HnfBasis(std::vector<std::int64_t> diagonal);

  std::size_t dimension() const { return static_cast<std::size_t>(rows_.rows()); }
  const IntMatrix& matrix() const { return rows_; }
  std::int64_t diagonal(std::size_t i) const { return rows_(idx(i), idx(i)); }
  std::int64_t index() const { return index_; }

  // Exact forward substitution against the rows. Coordinates may be
  // reduced modulo index() first since index() * Z^r lies in the lattice.
  bool contains(const IntVector& v) const;

  friend bool operator==(const HnfBasis& a, const HnfBasis& b) { return a.rows_ == b.rows_; }

 private:
  template <typename Visit>
  friend void for_each_filling(HnfBasis& h, Visit&& visit);

  static Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

  IntMatrix rows_;
  std::int64_t index_;
};

// Ordered factorisations d_1 ... d_r = n, lexicographic.
std::vector<std::vector<std::int64_t>> diagonal_shapes(std::size_t r, std::int64_t n);

// Visits every reduced off-diagonal filling of h's diagonal shape, in
// mixed-radix order (last entry fastest). h is updated in place.
template <typename Visit>
void for_each_filling(HnfBasis& h, Visit&& visit) {
  const auto r = static_cast<Eigen::Index>(h.dimension());
  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = i + 1; j < r; ++j) {
      h.rows_(i, j) = 0;
      if (h.rows_(j, j) > 1) cells.emplace_back(i, j);
    }
  while (true) {
    visit(static_cast<const HnfBasis&>(h));
    std::size_t c = cells.size();
    while (c > 0) {
      auto [i, j] = cells[c - 1];
      if (++h.rows_(i, j) < h.rows_(j, j)) break;
      h.rows_(i, j) = 0;
      --c;
    }
    if (c == 0) return;
  }
}

// Every index-n sublattice of Z^r exactly once: shapes in lexicographic
// order, then fillings in mixed-radix order.
template <typename Visit>
void for_each_sublattice(std::size_t r, std::int64_t n, Visit&& visit) {
  for (auto& shape : diagonal_shapes(r, n)) {
    HnfBasis h(std::move(shape));
    for_each_filling(h, visit);
  }
}

std::vector<HnfBasis> enumerate_sublattices(std::size_t r, std::int64_t n);

// Number of index-n sublattices of Z^r, by enumeration.
std::int64_t count_sublattices(std::size_t r, std::int64_t n);

// Whether the lattice is closed under left (and, if requested, right)
// multiplication by every basis element of A.
bool is_left_ideal(const IntegralOrder& A, const HnfBasis& h);
bool is_two_sided_ideal(const IntegralOrder& A, const HnfBasis& h);

// Census of left ideals of index n. Diagonal shapes are counted
// independently on up to `threads` workers (0 = hardware concurrency).
std::int64_t count_left_ideals(const IntegralOrder& A, std::int64_t n, unsigned threads = 0);
std::int64_t count_two_sided_ideals(const IntegralOrder& A, std::int64_t n, unsigned threads = 0);

// a_1..a_N of the ideal zeta of A. With prime_powers_only, only prime-power
// indices are counted and the rest is filled in multiplicatively.
DirichletCoefficients ideal_series(const IntegralOrder& A, std::int64_t N, bool prime_powers_only,
                                   unsigned threads = 0);

}  // namespace zeta
