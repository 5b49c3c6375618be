#include "finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

namespace {

// Dense polynomials over Z_p, low coefficient first, used only while
// searching for the modulus.
using Poly = std::vector<uint64_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b reduced mod the monic polynomial x^d + sum f_i x^i.
Poly poly_mulmod(const Poly& a, const Poly& b, const std::vector<uint32_t>& f,
                 uint64_t p) {
  size_t d = f.size();
  Poly c(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  for (size_t i = c.size(); i-- > d;) {
    if (!c[i]) continue;
    uint64_t lead = c[i];
    c[i] = 0;
    for (size_t j = 0; j < d; ++j)
      c[i - d + j] = (c[i - d + j] + lead * (p - f[j])) % p;
  }
  c.resize(d);
  poly_trim(c);
  return c;
}

Poly poly_powmod(Poly base, uint64_t e, const std::vector<uint32_t>& f,
                 uint64_t p) {
  Poly acc{1};
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

Poly poly_mod(Poly a, Poly b, uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    uint64_t coef = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - coef * b[i] % p)) % p;
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic f of degree d >= 2, given by its free coefficients.  Root absence
// settles d <= 3; Rabin's test covers the rest.
bool poly_irreducible(const std::vector<uint32_t>& f, uint64_t p) {
  size_t d = f.size();
  if (d <= 3) {
    for (uint64_t t = 0; t < p; ++t) {
      uint64_t v = 1;  // leading coefficient
      for (size_t i = d; i-- > 0;) v = (v * t + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  Poly x{0, 1};
  // h_k = x^(p^k) mod f
  std::vector<Poly> frob(d + 1);
  frob[0] = x;
  for (size_t k = 1; k <= d; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  Poly diff = frob[d];
  // x^(p^d) - x must vanish mod f
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;
  Poly fful(f.begin(), f.end());
  fful.push_back(1);
  for (auto [r, e] : factorize(d)) {
    Poly g = frob[d / r];
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    poly_trim(g);
    Poly gc = poly_gcd(fful, g, p);
    if (gc.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(uint64_t p, uint64_t d, uint64_t max_q) : p_(p), d_(d) {
  if (!is_prime(p)) throw domain_error("make_field: p is not prime");
  if (d < 1) throw domain_error("make_field: d must be >= 1");
  q_ = 1;
  for (uint64_t i = 0; i < d; ++i) {
    if (q_ > max_q / p) throw size_limit_error("make_field: q = p^d exceeds the configured bound");
    q_ *= p;
  }
  if (q_ > max_q) throw size_limit_error("make_field: q = p^d exceeds the configured bound");

  if (d == 1) {
    modulus_ = {0};  // modulus x; elements are plain residues
  } else {
    // lexicographically smallest monic irreducible, free coefficients
    // compared low-degree-first
    for (uint64_t rank = 0; rank < q_; ++rank) {
      std::vector<uint32_t> cand(d);
      uint64_t r = rank;
      for (uint64_t i = d; i-- > 0;) {  // last coordinate varies fastest
        cand[i] = (uint32_t)(r % p);
        r /= p;
      }
      if (poly_irreducible(cand, p)) {
        modulus_ = std::move(cand);
        break;
      }
    }
    if (modulus_.empty()) throw internal_error("make_field: no irreducible modulus found");
  }

  unit_order_factors_ = factorize(q_ - 1);

  // lex-smallest element of order exactly q-1
  for (uint64_t rank = 0; rank < q_; ++rank) {
    FieldElement e = from_lex_rank(rank);
    if (is_zero(e)) continue;
    bool primitive = true;
    for (auto [f, mult] : unit_order_factors_) {
      if (pow(e, (int64_t)((q_ - 1) / f)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_ = std::move(e);
      break;
    }
  }
}

FieldElement FieldCtx::zero() const { return FieldElement{std::vector<uint32_t>(d_, 0)}; }

FieldElement FieldCtx::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement FieldCtx::from_residue(uint64_t r) const {
  FieldElement e = zero();
  e.coeffs[0] = (uint32_t)(r % p_);
  return e;
}

FieldElement FieldCtx::make(std::vector<uint32_t> coeffs) const {
  FieldElement e{std::move(coeffs)};
  check(e);
  return e;
}

void FieldCtx::check(const FieldElement& e) const {
  if (e.coeffs.size() != d_) throw domain_error("field element has wrong coefficient count");
  for (uint32_t c : e.coeffs)
    if (c >= p_) throw domain_error("field element coefficient out of range");
}

bool FieldCtx::is_zero(const FieldElement& e) const {
  for (uint32_t c : e.coeffs)
    if (c) return false;
  return true;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement c = zero();
  for (uint64_t i = 0; i < d_; ++i) c.coeffs[i] = (uint32_t)(((uint64_t)a.coeffs[i] + b.coeffs[i]) % p_);
  return c;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  check(a);
  FieldElement c = zero();
  for (uint64_t i = 0; i < d_; ++i) c.coeffs[i] = a.coeffs[i] ? (uint32_t)(p_ - a.coeffs[i]) : 0;
  return c;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<uint64_t> c(2 * d_ - 1, 0);
  for (uint64_t i = 0; i < d_; ++i) {
    if (!a.coeffs[i]) continue;
    for (uint64_t j = 0; j < d_; ++j)
      c[i + j] = (c[i + j] + (uint64_t)a.coeffs[i] * b.coeffs[j]) % p_;
  }
  for (size_t i = c.size(); i-- > d_;) {
    if (!c[i]) continue;
    uint64_t lead = c[i];
    c[i] = 0;
    for (uint64_t j = 0; j < d_; ++j)
      c[i - d_ + j] = (c[i - d_ + j] + lead * (p_ - modulus_[j])) % p_;
  }
  FieldElement out = zero();
  for (uint64_t i = 0; i < d_; ++i) out.coeffs[i] = (uint32_t)c[i];
  return out;
}

FieldElement FieldCtx::pow(const FieldElement& a, int64_t e) const {
  check(a);
  if (e < 0) {
    if (is_zero(a)) throw domain_error("pow: negative exponent of zero");
    uint64_t m = q_ - 1;
    uint64_t r = (uint64_t)(((e % (int64_t)m) + (int64_t)m) % (int64_t)m);
    return pow(a, (int64_t)r);
  }
  FieldElement acc = one();
  FieldElement base = a;
  uint64_t k = (uint64_t)e;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) throw domain_error("inv: inversion of zero");
  return pow(a, (int64_t)(q_ - 2));
}

FieldElement FieldCtx::frobenius(const FieldElement& e, uint64_t i) const {
  if (i >= d_) throw domain_error("frobenius: exponent must satisfy 0 <= i < d");
  uint64_t pe = 1;
  for (uint64_t k = 0; k < i; ++k) pe *= p_;
  return pow(e, (int64_t)pe);
}

uint64_t FieldCtx::element_order(const FieldElement& e) const {
  if (is_zero(e)) throw domain_error("element_order: zero input");
  uint64_t ord = q_ - 1;
  for (auto [f, mult] : unit_order_factors_) {
    for (uint32_t k = 0; k < mult; ++k) {
      if (pow(e, (int64_t)(ord / f)) == one())
        ord /= f;
      else
        break;
    }
  }
  return ord;
}

FieldElement FieldCtx::subgroup_generator(uint64_t n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    throw domain_error("subgroup_generator: n does not divide q-1");
  return pow(gen_, (int64_t)((q_ - 1) / n));
}

uint64_t FieldCtx::code(const FieldElement& e) const {
  check(e);
  uint64_t v = 0;
  for (uint64_t i = d_; i-- > 0;) v = v * p_ + e.coeffs[i];
  return v;
}

FieldElement FieldCtx::from_code(uint64_t code) const {
  FieldElement e = zero();
  for (uint64_t i = 0; i < d_; ++i) {
    e.coeffs[i] = (uint32_t)(code % p_);
    code /= p_;
  }
  return e;
}

uint64_t FieldCtx::lex_rank(const FieldElement& e) const {
  check(e);
  uint64_t v = 0;
  for (uint64_t i = 0; i < d_; ++i) v = v * p_ + e.coeffs[i];
  return v;
}

FieldElement FieldCtx::from_lex_rank(uint64_t rank) const {
  FieldElement e = zero();
  for (uint64_t i = d_; i-- > 0;) {
    e.coeffs[i] = (uint32_t)(rank % p_);
    rank /= p_;
  }
  return e;
}

std::string FieldCtx::to_string(const FieldElement& e) const {
  std::ostringstream os;
  for (uint64_t i = 0; i < d_; ++i) {
    if (i) os << ',';
    os << e.coeffs[i];
  }
  return os.str();
}

}  // namespace gpd
