#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gpd {

bool is_prime(uint64_t n);

// Prime factorisation as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);

uint64_t euler_phi(uint64_t n);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Inverse of a mod n; requires gcd(a, n) = 1.
uint64_t inv_mod(uint64_t a, uint64_t n);

// Multiplicative order of a mod n; requires gcd(a, n) = 1.  n = 1 gives 1.
uint64_t mul_order(uint64_t a, uint64_t n);

}  // namespace gpd
