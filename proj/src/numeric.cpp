#include "numeric.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace gpd {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t f : {2ull, 3ull}) {
    if (n % f == 0) return n == f;
  }
  for (uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f) continue;
    uint32_t e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out{1};
  for (auto [pr, e] : factorize(n)) {
    size_t len = out.size();
    uint64_t pk = 1;
    for (uint32_t k = 1; k <= e; ++k) {
      pk *= pr;
      for (size_t i = 0; i < len; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t phi = n;
  for (auto [pr, e] : factorize(n)) phi -= phi / pr;
  return phi;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t acc = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) acc = (unsigned __int128)acc * base % mod;
    base = (unsigned __int128)base * base % mod;
    exp >>= 1;
  }
  return acc;
}

uint64_t inv_mod(uint64_t a, uint64_t n) {
  if (n == 1) return 0;
  int64_t t = 0, nt = 1;
  int64_t r = (int64_t)n, nr = (int64_t)(a % n);
  while (nr != 0) {
    int64_t qd = r / nr;
    std::swap(t -= qd * nt, nt);
    std::swap(r -= qd * nr, nr);
  }
  if (r != 1) throw domain_error("inv_mod: arguments are not coprime");
  return (uint64_t)(t < 0 ? t + (int64_t)n : t);
}

uint64_t mul_order(uint64_t a, uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw domain_error("mul_order: gcd(a, n) != 1");
  uint64_t ord = euler_phi(n);
  for (auto [pr, e] : factorize(ord)) {
    for (uint32_t k = 0; k < e && pow_mod(a, ord / pr, n) == 1; ++k) ord /= pr;
  }
  return ord;
}

}  // namespace gpd
