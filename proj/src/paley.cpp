#include "paley.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "affine.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

namespace {

constexpr uint64_t kFormulaMaxQ = 1ull << 54;

// (d, q) for a valid (n, p); q capped so the closed-form arithmetic stays
// inside int64.
std::pair<uint64_t, uint64_t> dimension_of(uint64_t n, uint64_t p) {
  if (n < 1) throw domain_error("valency n must be >= 1");
  if (!is_prime(p)) throw domain_error("p must be prime");
  if (n > 1 && std::gcd(p, n) != 1) throw domain_error("gcd(p, n) must be 1");
  uint64_t d = n == 1 ? 1 : mul_order(p, n);
  uint64_t q = 1;
  for (uint64_t i = 0; i < d; ++i) {
    if (q > kFormulaMaxQ / p) throw size_limit_error("q = p^d exceeds the implementation bound");
    q *= p;
  }
  return {d, q};
}

}  // namespace

std::string to_string(const PaleyParams& P) {
  std::ostringstream os;
  os << "GP(n=" << P.n << ",p=" << P.p << ",c=" << P.c << ",j=" << P.j << ")";
  return os.str();
}

uint64_t order_mod(uint64_t p, uint64_t n) {
  if (n < 1) throw domain_error("order_mod: n must be >= 1");
  if (n == 1) return 1;
  if (std::gcd(p, n) != 1) throw domain_error("order_mod: gcd(p, n) must be 1");
  return mul_order(p, n);
}

uint64_t canonical_j(uint64_t n, uint64_t p, uint64_t j) {
  if (n == 1) return 0;
  uint64_t best = j % n;
  uint64_t cur = j % n;
  uint64_t d = mul_order(p, n);
  for (uint64_t i = 1; i < d; ++i) {
    cur = cur * (p % n) % n;
    best = std::min(best, cur);
  }
  return best;
}

PaleyParams make_params(uint64_t n, uint64_t p, uint64_t c, uint64_t j) {
  auto [d, q] = dimension_of(n, p);
  PaleyParams P;
  P.n = n;
  P.p = p;
  P.d = d;
  P.q = q;
  P.c = c % n;
  P.j = n == 1 ? 0 : j % n;
  if (n > 1 && std::gcd(P.j, n) != 1)
    throw domain_error("generator exponent j must be a unit mod n");
  P.canonical = P.j == canonical_j(n, p, P.j);
  return P;
}

PaleyParams canonicalize(const PaleyParams& P) {
  PaleyParams out = P;
  out.j = canonical_j(P.n, P.p, P.j);
  out.canonical = true;
  return out;
}

RegularDessin construct(const PaleyParams& P, uint64_t max_q) {
  FieldCtx ctx(P.p, P.d, max_q);
  AffineGroup g(ctx, P.n);
  uint64_t x_idx = g.power_index(P.j);
  uint64_t y_idx = g.index_of(P.j * P.c % P.n, ctx.one());
  RegularDessin dessin = from_triple(
      g.size(), [&g](uint64_t a, uint64_t b) { return g.mul(a, b); }, x_idx, y_idx,
      to_string(P));
  if (cycle_data(dessin.s0).count != P.q)
    throw internal_error("construct: black vertex count differs from q");
  return dessin;
}

std::vector<uint32_t> translation_edges(const PaleyParams& P) {
  std::vector<uint32_t> t(P.q);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

TypeGenus type_genus(uint64_t n, uint64_t p, uint64_t c) {
  auto [d, q] = dimension_of(n, p);
  c %= n;
  TypeGenus tg{};
  if (n == 1) {
    // star dessin St_p: x trivial, y and z of order p
    tg.type = {1, p, p};
    tg.chi = 2;
    tg.genus = 0;
    return tg;
  }
  if (c == 0 || c == n - 1) {
    tg.type = c == 0 ? std::array<uint64_t, 3>{n, p, n} : std::array<uint64_t, 3>{n, n, p};
    // chi = p^(d-1) (2p + n - np)
    int64_t qd1 = (int64_t)(q / p);
    tg.chi = qd1 * (2 * (int64_t)p + (int64_t)n - (int64_t)(n * p));
  } else {
    uint64_t g1 = std::gcd(n, c), g2 = std::gcd(n, c + 1);
    tg.type = {n, n / g1, n / g2};
    tg.chi = (int64_t)q * ((int64_t)(1 + g1 + g2) - (int64_t)n);
  }
  tg.genus = 1 - tg.chi / 2;
  return tg;
}

uint64_t count(uint64_t n, uint64_t p) {
  auto [d, q] = dimension_of(n, p);
  return n * euler_phi(n) / d;
}

uint64_t count_c(uint64_t n, uint64_t p, uint64_t c) {
  auto [d, q] = dimension_of(n, p);
  (void)c;
  return euler_phi(n) / d;
}

std::vector<PaleyParams> enumerate(uint64_t n, uint64_t p, uint64_t c) {
  auto [d, q] = dimension_of(n, p);
  c %= n;
  std::vector<PaleyParams> out;
  if (n == 1) {
    out.push_back(make_params(1, p, 0, 0));
    return out;
  }
  std::vector<bool> seen(n, false);
  for (uint64_t j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1 || seen[j]) continue;
    // mark the whole <p>-coset; j is its minimum
    uint64_t cur = j;
    for (uint64_t i = 0; i < d; ++i) {
      seen[cur] = true;
      cur = cur * (p % n) % n;
    }
    out.push_back(make_params(n, p, c, j));
  }
  return out;
}

std::vector<PaleyParams> enumerate(uint64_t n, uint64_t p) {
  std::vector<PaleyParams> out;
  for (uint64_t c = 0; c < n; ++c) {
    auto part = enumerate(n, p, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

PaleyParams mirror(const PaleyParams& P) {
  PaleyParams out = P;
  if (P.n > 1) out.j = canonical_j(P.n, P.p, (P.n - P.j % P.n) % P.n);
  out.canonical = true;
  return out;
}

bool is_real(uint64_t n, uint64_t p) {
  auto [d, q] = dimension_of(n, p);
  if (n <= 2) return true;
  uint64_t cur = 1;
  for (uint64_t i = 0; i < d; ++i) {
    if (cur == n - 1) return true;
    cur = cur * (p % n) % n;
  }
  return false;
}

std::optional<uint64_t> minus_one_exponent(uint64_t n, uint64_t p) {
  if (n < 2) throw domain_error("minus_one_exponent: n must be >= 2");
  if (!is_prime(p)) throw domain_error("minus_one_exponent: p must be prime");
  if (std::gcd(p, n) != 1) throw domain_error("minus_one_exponent: gcd(p, n) must be 1");

  uint64_t n2 = 1;
  std::vector<uint64_t> odd_half_orders;
  std::optional<uint64_t> two_part;  // common 2-part 2^k of the odd d_r
  for (auto [r, e] : factorize(n)) {
    uint64_t nr = 1;
    for (uint32_t i = 0; i < e; ++i) nr *= r;
    if (r == 2) {
      n2 = nr;
      continue;
    }
    uint64_t dr = mul_order(p % nr, nr);
    if (dr % 2 != 0) return std::nullopt;   // 2-part 2^k >= 2 fails
    uint64_t tp = dr & (~dr + 1);           // largest power of 2 dividing dr
    if (two_part && *two_part != tp) return std::nullopt;
    two_part = tp;
    odd_half_orders.push_back(dr / 2);
  }
  if (n2 >= 2) {
    if (p % n2 != n2 - 1) return std::nullopt;  // p = -1 mod n_2
    if (n2 >= 4 && two_part && *two_part != 2) return std::nullopt;  // k = 1
  }
  if (odd_half_orders.empty()) return 1;  // n is a power of 2
  uint64_t i = 1;
  for (uint64_t h : odd_half_orders) i = std::lcm(i, h);
  if (pow_mod(p, i, n) != n - 1)
    throw internal_error("minus_one_exponent: algorithm produced an invalid exponent");
  return i;
}

SubstructureReport substructure_predicates(uint64_t n, uint64_t p, uint64_t c) {
  auto [d, q] = dimension_of(n, p);
  c %= n;
  SubstructureReport r{};
  bool p_splits = d == 1;  // p = 1 mod n
  r.white_primitive = std::gcd(n, c) == 1 || (is_prime(n) && p_splits && c == 0);
  r.face_primitive = std::gcd(n, c + 1) == 1 || (is_prime(n) && p_splits && c == n - 1);
  r.is_map = (c == 0 && p == 2) || (n % 2 == 0 && c == n / 2);
  r.defined_over_q = euler_phi(n) / d == 1;
  return r;
}

int64_t quotient_genus(uint64_t n, uint64_t c) {
  if (n < 1) throw domain_error("quotient_genus: n must be >= 1");
  c %= n;
  if (n == 1 || c == 0 || c == n - 1) return 0;  // star duals St_n^01 / St_n^02
  return (1 - (int64_t)std::gcd(n, c) - (int64_t)std::gcd(n, c + 1) + (int64_t)n) / 2;
}

RegularDessin quotient_by_translations(const PaleyParams& P, uint64_t max_q) {
  RegularDessin dessin = construct(P, max_q);
  FieldCtx ctx(P.p, P.d, max_q);
  uint64_t q = P.q, e = dessin.edges;
  // right multiplication by (1, b0) maps (s, b) to (s, b + b0)
  std::vector<std::vector<uint32_t>> t_perms;
  t_perms.reserve(q);
  for (uint64_t b0 = 0; b0 < q; ++b0) {
    FieldElement t0 = ctx.from_lex_rank(b0);
    std::vector<uint32_t> add_rank(q);
    for (uint64_t r = 0; r < q; ++r)
      add_rank[r] = (uint32_t)ctx.lex_rank(ctx.add(ctx.from_lex_rank(r), t0));
    std::vector<uint32_t> perm(e);
    for (uint64_t i = 0; i < e; ++i) perm[i] = (uint32_t)(i - i % q + add_rank[i % q]);
    t_perms.push_back(std::move(perm));
  }
  return quotient_by_perms(dessin, t_perms);
}

GaloisData galois_data(uint64_t n, uint64_t p, uint64_t c) {
  auto [d, q] = dimension_of(n, p);
  GaloisData g;
  g.orbit = enumerate(n, p, c);
  g.field_degree = euler_phi(n) / d;
  if (g.field_degree != g.orbit.size())
    throw internal_error("galois_data: degree does not match orbit length");
  return g;
}

CurveModel curve_model(uint64_t n, uint64_t p, uint64_t j, CurveVariant variant) {
  auto [d, q] = dimension_of(n, p);
  if (d != 1) throw domain_error("curve_model: requires d = 1 (p = 1 mod n)");
  CurveModel m{n, p, 1, {}, variant};
  if (n == 1) {
    m.exponents = {1};
    return m;
  }
  if (std::gcd(j % n, n) != 1) throw domain_error("curve_model: j must be a unit mod n");
  // u = residue of x0^j, an element of order n mod p
  FieldCtx ctx(p, 1);
  FieldElement x0 = ctx.subgroup_generator(n);
  m.u = ctx.code(ctx.pow(x0, (int64_t)(j % n)));
  if (mul_order(m.u, p) != n) throw internal_error("curve_model: multiplier has wrong order");
  m.exponents.resize(n);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < n; ++i) {
    cur = cur * m.u % p;
    m.exponents[i] = cur;
  }
  return m;
}

CoverResult cyclic_cover(const PaleyParams& P, uint64_t k, uint64_t c_tilde, uint64_t max_q) {
  if (k < 1) throw domain_error("cyclic_cover: k must be >= 1");
  uint64_t kn = k * P.n;
  if (c_tilde >= kn || c_tilde % P.n != P.c)
    throw domain_error("cyclic_cover: c_tilde must satisfy c_tilde = c mod n in Z_kn");

  FieldCtx ctx(P.p, P.d, max_q);
  uint64_t q = P.q;
  uint64_t order = kn * q;
  if (order > (uint64_t)1 << 22) throw size_limit_error("cyclic_cover: group order exceeds bound");

  // y~ = (x~^c_tilde, 1) lies outside S~ since its translation part is nonzero
  FieldElement a = ctx.pow(ctx.subgroup_generator(P.n), (int64_t)P.j);
  // rank multiplication tables for b * a^m, m in [0, n)
  std::vector<std::vector<uint32_t>> mul_rank(P.n, std::vector<uint32_t>(q));
  FieldElement am = ctx.one();
  for (uint64_t msub = 0; msub < P.n; ++msub) {
    for (uint64_t r = 0; r < q; ++r)
      mul_rank[msub][r] = (uint32_t)ctx.lex_rank(ctx.mul(ctx.from_lex_rank(r), am));
    am = ctx.mul(am, a);
  }
  auto mul = [&](uint64_t i, uint64_t jdx) {
    uint64_t s1 = i / q, r1 = i % q, s2 = jdx / q, r2 = jdx % q;
    uint64_t rm = mul_rank[s2 % P.n][r1];
    FieldElement sum = ctx.add(ctx.from_lex_rank(rm), ctx.from_lex_rank(r2));
    return ((s1 + s2) % kn) * q + ctx.lex_rank(sum);
  };
  uint64_t x_idx = 1 * q;  // (s = 1, b = 0)
  uint64_t y_idx = (c_tilde % kn) * q + ctx.lex_rank(ctx.one());

  CoverResult out;
  std::ostringstream tag;
  tag << to_string(P) << "~k=" << k << ",c~=" << c_tilde;
  out.dessin = from_triple(order, mul, x_idx, y_idx, tag.str());
  out.k = k;
  for (uint64_t t = 0; t < k; ++t) out.kernel_edges.push_back((uint32_t)(t * P.n * q));

  if (std::gcd(k, P.n * q) == 1) {
    // complement H = T . <x~^k>: indices with s = 0 mod k
    std::vector<uint32_t> h;
    std::vector<bool> in_h(order, false);
    for (uint64_t s = 0; s < kn; s += k)
      for (uint64_t r = 0; r < q; ++r) {
        h.push_back((uint32_t)(s * q + r));
        in_h[s * q + r] = true;
      }
    for (uint32_t u : h)
      for (uint32_t v : h)
        if (!in_h[mul(u, v)]) throw internal_error("cyclic_cover: complement is not closed");
    for (uint32_t e : out.kernel_edges)
      if (e != 0 && in_h[e]) throw internal_error("cyclic_cover: complement meets the kernel");
    if (h.size() * k != order) throw internal_error("cyclic_cover: complement has wrong order");
    out.complement_edges = std::move(h);
  }
  return out;
}

}  // namespace gpd
