#include "zeta/series.hpp"

#include <numeric>
#include <sstream>

namespace zeta {

namespace {

void require_same_prime(const LocalTerm& a, const LocalTerm& b, const char* op) {
  if (a.prime() != b.prime())
    throw PreconditionError(std::string(op) + ": local factors at different primes " + std::to_string(a.prime()) +
                            " and " + std::to_string(b.prime()));
}

}  // namespace

LocalTerm::LocalTerm(std::int64_t prime, Poly numerator, Poly denominator)
    : prime_(prime), num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!is_prime(prime_)) throw PreconditionError("local term attached to non-prime " + std::to_string(prime_));
  if (den_[0] != 1 && den_[0] != -1) throw InvariantError("local term denominator must have constant term +-1");
  if (num_.is_zero()) {
    den_ = Poly{1};
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_[0] == -1) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::vector<BigInt> LocalTerm::expand(std::size_t K) const {
  std::vector<BigInt> c(K + 1, BigInt(0));
  const std::size_t dd = den_.size();
  for (std::size_t k = 0; k <= K; ++k) {
    BigInt acc = num_[k];
    for (std::size_t j = 1; j < dd && j <= k; ++j) acc -= den_[j] * c[k - j];
    c[k] = std::move(acc);
  }
  return c;
}

std::string LocalTerm::to_string() const {
  std::ostringstream os;
  os << "p=" << prime_ << ": (" << zeta::to_string(num_) << ")";
  if (den_ != Poly{1}) os << " / (" << zeta::to_string(den_) << ")";
  return os.str();
}

LocalTerm operator+(const LocalTerm& a, const LocalTerm& b) {
  require_same_prime(a, b, "add");
  return LocalTerm(a.prime(), a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                   a.denominator() * b.denominator());
}

LocalTerm operator*(const LocalTerm& a, const LocalTerm& b) {
  require_same_prime(a, b, "mul");
  return LocalTerm(a.prime(), a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

LocalFactor::LocalFactor(std::int64_t prime, Poly numerator, Poly denominator)
    : LocalFactor(LocalTerm(prime, std::move(numerator), std::move(denominator))) {}

LocalFactor::LocalFactor(const LocalTerm& term) : LocalTerm(term) {
  if (numerator()[0] == 0)
    throw InvariantError("not a zeta factor: numerator has zero constant term (" + term.to_string() + ")");
}

LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b) {
  return LocalFactor(static_cast<const LocalTerm&>(a) * static_cast<const LocalTerm&>(b));
}

LocalFactor lf_add(const LocalTerm& a, const LocalTerm& b) { return LocalFactor(a + b); }

LocalFactor lf_pow(const LocalFactor& a, unsigned k) {
  return LocalFactor(a.prime(), a.numerator().pow(k), a.denominator().pow(k));
}

LocalFactor geometric_factor(std::int64_t p, const BigInt& c, std::size_t k) {
  return LocalFactor(p, Poly{1}, Poly{1} - Poly::monomial(c, k));
}

DirichletCoefficients::DirichletCoefficients(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("Dirichlet series bound must be >= 1");
}

DirichletCoefficients DirichletCoefficients::unit(std::int64_t bound) {
  if (bound < 1) throw PreconditionError("Dirichlet series bound must be >= 1");
  std::vector<BigInt> v(static_cast<std::size_t>(bound), BigInt(0));
  v[0] = 1;
  return DirichletCoefficients(std::move(v));
}

DirichletCoefficients euler_expand(const LocalFactorMap& factors, std::int64_t N) {
  if (N < 1) throw PreconditionError("euler_expand: N must be >= 1");
  std::vector<BigInt> a(static_cast<std::size_t>(N), BigInt(0));
  a[0] = 1;
  for (const std::int64_t p : primes_up_to(N)) {
    const auto it = factors.find(p);
    if (it == factors.end()) throw PreconditionError("euler_expand: no local factor for prime " + std::to_string(p));
    if (it->second.prime() != p) throw PreconditionError("euler_expand: factor keyed at wrong prime");
    std::size_t K = 0;
    for (std::int64_t q = p; q <= N / p; q *= p) ++K;
    const auto local = it->second.expand(K + 1);
    if (local[0] != 1) throw PreconditionError("euler_expand: local factor at " + std::to_string(p) + " has a_1 != 1");
    // Fold p^k into every n coprime to p that has already been assembled.
    std::vector<BigInt> next = a;
    for (std::int64_t m = 1; m <= N; ++m) {
      if (m % p == 0 || a[m - 1] == 0) continue;
      std::int64_t pk = p;
      for (std::size_t k = 1; pk <= N / m; ++k, pk *= p) next[m * pk - 1] = a[m - 1] * local[k];
    }
    a = std::move(next);
  }
  return DirichletCoefficients(std::move(a));
}

DirichletCoefficients ds_mul(const DirichletCoefficients& a, const DirichletCoefficients& b) {
  if (a.bound() != b.bound()) throw PreconditionError("ds_mul: bound mismatch");
  const std::int64_t N = a.bound();
  std::vector<BigInt> c(static_cast<std::size_t>(N), BigInt(0));
  for (std::int64_t d = 1; d <= N; ++d) {
    if (a[d] == 0) continue;
    for (std::int64_t e = 1; d * e <= N; ++e) c[d * e - 1] += a[d] * b[e];
  }
  return DirichletCoefficients(std::move(c));
}

bool is_multiplicative(const DirichletCoefficients& a) {
  const std::int64_t N = a.bound();
  for (std::int64_t m = 2; m <= N; ++m)
    for (std::int64_t n = m + 1; m * n <= N; ++n)
      if (std::gcd(m, n) == 1 && a[m * n] != a[m] * a[n]) return false;
  return true;
}

}  // namespace zeta
