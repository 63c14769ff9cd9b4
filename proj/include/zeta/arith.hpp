#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeta {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::int64_t n);

// Ascending list of primes <= bound.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Prime factorisation as (prime, exponent) pairs in ascending order. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Largest k with p^k | n. Requires n != 0.
int valuation(std::int64_t n, std::int64_t p);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
int multiplicative_order(std::int64_t a, std::int64_t m);

BigInt big_pow(std::int64_t base, unsigned exponent);

}  // namespace zeta
