#include "zeta/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "zeta/errors.hpp"

namespace zeta {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw PreconditionError("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw PreconditionError("valuation: n must be nonzero");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

int multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 2 || std::gcd(a, m) != 1) throw PreconditionError("multiplicative_order: need gcd(a, m) = 1, m >= 2");
  a %= m;
  if (a < 0) a += m;
  std::int64_t x = a % m;
  int k = 1;
  while (x != 1 % m) {
    x = (x * a) % m;
    ++k;
  }
  return k;
}

BigInt big_pow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace zeta
