#include "zeta/oracle.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "zeta/errors.hpp"

namespace zeta {

HnfBasis::HnfBasis(std::vector<std::int64_t> diagonal) : index_(1) {
  const auto r = static_cast<Eigen::Index>(diagonal.size());
  if (r == 0) throw PreconditionError("HnfBasis: dimension must be >= 1");
  rows_ = IntMatrix::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (diagonal[static_cast<std::size_t>(i)] < 1) throw PreconditionError("HnfBasis: diagonal must be positive");
    rows_(i, i) = diagonal[static_cast<std::size_t>(i)];
    index_ *= rows_(i, i);
  }
}

bool HnfBasis::contains(const IntVector& v) const {
  const Eigen::Index r = rows_.rows();
  IntVector w(r);
  for (Eigen::Index k = 0; k < r; ++k) w(k) = v(k) % index_;
  for (Eigen::Index c = 0; c < r; ++c) {
    const std::int64_t d = rows_(c, c);
    if (w(c) % d != 0) return false;
    const std::int64_t x = w(c) / d;
    if (x == 0) continue;
    for (Eigen::Index k = c + 1; k < r; ++k) w(k) = (w(k) - x * rows_(c, k)) % index_;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> diagonal_shapes(std::size_t r, std::int64_t n) {
  if (r == 0 || n < 1) throw PreconditionError("diagonal_shapes: need r >= 1 and n >= 1");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t rest) {
    if (cur.size() + 1 == r) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (std::int64_t d = 1; d <= rest; ++d) {
      if (rest % d != 0) continue;
      cur.push_back(d);
      rec(rest / d);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<HnfBasis> enumerate_sublattices(std::size_t r, std::int64_t n) {
  std::vector<HnfBasis> out;
  for_each_sublattice(r, n, [&](const HnfBasis& h) { out.push_back(h); });
  return out;
}

std::int64_t count_sublattices(std::size_t r, std::int64_t n) {
  std::int64_t count = 0;
  for_each_sublattice(r, n, [&](const HnfBasis&) { ++count; });
  return count;
}

namespace {

// Multiplication operators worth checking: the identity acts trivially.
std::vector<IntMatrix> nontrivial(std::vector<IntMatrix> ops) {
  std::erase_if(ops, [](const IntMatrix& m) { return m.isIdentity(); });
  return ops;
}

bool closed_under(const std::vector<IntMatrix>& ops, const HnfBasis& h) {
  const IntMatrix& rows = h.matrix();
  const Eigen::Index r = rows.rows();
  IntVector v(r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (const auto& m : ops) {
      v.noalias() = m * rows.row(i).transpose();
      if (!h.contains(v)) return false;
    }
  return true;
}

std::vector<IntMatrix> left_ops(const IntegralOrder& A) {
  std::vector<IntMatrix> ops;
  for (std::size_t i = 0; i < A.rank(); ++i) ops.push_back(A.left_multiplication(i));
  return nontrivial(std::move(ops));
}

std::vector<IntMatrix> two_sided_ops(const IntegralOrder& A) {
  std::vector<IntMatrix> ops;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    ops.push_back(A.left_multiplication(i));
    ops.push_back(A.right_multiplication(i));
  }
  return nontrivial(std::move(ops));
}

std::int64_t census(const IntegralOrder& A, std::int64_t n, const std::vector<IntMatrix>& ops, unsigned threads) {
  const auto shapes = diagonal_shapes(A.rank(), n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(shapes.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<std::int64_t> total{0};
  auto worker = [&] {
    std::int64_t local = 0;
    for (std::size_t s = next++; s < shapes.size(); s = next++) {
      HnfBasis h(shapes[s]);
      for_each_filling(h, [&](const HnfBasis& b) {
        if (closed_under(ops, b)) ++local;
      });
    }
    total += local;
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return total.load();
}

}  // namespace

bool is_left_ideal(const IntegralOrder& A, const HnfBasis& h) { return closed_under(left_ops(A), h); }

bool is_two_sided_ideal(const IntegralOrder& A, const HnfBasis& h) { return closed_under(two_sided_ops(A), h); }

std::int64_t count_left_ideals(const IntegralOrder& A, std::int64_t n, unsigned threads) {
  return census(A, n, left_ops(A), threads);
}

std::int64_t count_two_sided_ideals(const IntegralOrder& A, std::int64_t n, unsigned threads) {
  return census(A, n, two_sided_ops(A), threads);
}

DirichletCoefficients ideal_series(const IntegralOrder& A, std::int64_t N, bool prime_powers_only, unsigned threads) {
  if (N < 1) throw PreconditionError("ideal_series: N must be >= 1");
  std::vector<BigInt> a(static_cast<std::size_t>(N), BigInt(0));
  a[0] = 1;
  if (!prime_powers_only) {
    for (std::int64_t n = 2; n <= N; ++n) a[n - 1] = count_left_ideals(A, n, threads);
    return DirichletCoefficients(std::move(a));
  }
  for (std::int64_t n = 2; n <= N; ++n) {
    const auto f = factorize(n);
    if (f.size() == 1) {
      a[n - 1] = count_left_ideals(A, n, threads);
    } else {
      // n = p^k * m with gcd(p^k, m) = 1; both parts are already known.
      std::int64_t pk = 1;
      for (int i = 0; i < f[0].second; ++i) pk *= f[0].first;
      a[n - 1] = a[pk - 1] * a[n / pk - 1];
    }
  }
  return DirichletCoefficients(std::move(a));
}

}  // namespace zeta
