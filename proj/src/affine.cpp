#include "affine.hpp"

#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

AffineMap affine_identity(const FieldCtx& ctx) { return AffineMap{ctx.one(), ctx.zero()}; }

AffineMap compose(const FieldCtx& ctx, const AffineMap& f, const AffineMap& g) {
  // t -> g(f(t)) = (a_f a_g) t + (b_f a_g + b_g)
  return AffineMap{ctx.mul(f.a, g.a), ctx.add(ctx.mul(f.b, g.a), g.b)};
}

AffineMap inverse(const FieldCtx& ctx, const AffineMap& f) {
  FieldElement ai = ctx.inv(f.a);
  return AffineMap{ai, ctx.neg(ctx.mul(f.b, ai))};
}

FieldElement apply(const FieldCtx& ctx, const AffineMap& f, const FieldElement& t) {
  return ctx.add(ctx.mul(f.a, t), f.b);
}

uint64_t affine_order(const FieldCtx& ctx, const AffineMap& f) {
  AffineMap id = affine_identity(ctx);
  AffineMap acc = f;
  uint64_t k = 1;
  while (!(acc == id)) {
    acc = compose(ctx, acc, f);
    ++k;
  }
  return k;
}

SemiaffineMap compose(const FieldCtx& ctx, const SemiaffineMap& f, const SemiaffineMap& g) {
  // t -> g(f(t)): a_g * (a_f t^(p^i) + b_f)^(p^j) + b_g
  uint64_t d = ctx.d();
  return SemiaffineMap{ctx.mul(ctx.frobenius(f.a, g.frob), g.a),
                       ctx.add(ctx.mul(ctx.frobenius(f.b, g.frob), g.a), g.b),
                       (f.frob + g.frob) % d};
}

SemiaffineMap inverse(const FieldCtx& ctx, const SemiaffineMap& f) {
  uint64_t d = ctx.d();
  uint64_t j = (d - f.frob) % d;
  FieldElement ai = ctx.inv(f.a);
  return SemiaffineMap{ctx.frobenius(ai, j),
                       ctx.neg(ctx.frobenius(ctx.mul(f.b, ai), j)), j};
}

FieldElement apply(const FieldCtx& ctx, const SemiaffineMap& f, const FieldElement& t) {
  return ctx.add(ctx.mul(f.a, ctx.frobenius(t, f.frob)), f.b);
}

AffineMap aut_conjugate(const FieldCtx& ctx, const SemiaffineMap& alpha, const AffineMap& f) {
  SemiaffineMap conj =
      compose(ctx, compose(ctx, inverse(ctx, alpha), SemiaffineMap{f.a, f.b, 0}), alpha);
  if (conj.frob != 0) throw internal_error("aut_conjugate: conjugate left AGL_1(q)");
  return AffineMap{conj.a, conj.b};
}

std::string to_string(const FieldCtx& ctx, const AffineMap& f) {
  return "a=" + ctx.to_string(f.a) + ";b=" + ctx.to_string(f.b);
}

std::string to_string(const FieldCtx& ctx, const SemiaffineMap& f) {
  std::ostringstream os;
  os << "a=" << ctx.to_string(f.a) << ";b=" << ctx.to_string(f.b) << ";i=" << f.frob;
  return os.str();
}

namespace {

// Incremental Z_p-span with row echelon rows keyed by pivot position.
class Span {
 public:
  Span(uint64_t p, uint64_t d) : p_(p), d_(d), rows_(d) {}

  uint64_t dimension() const { return dim_; }
  bool full() const { return dim_ == d_; }

  // Adds one vector; returns true if the dimension grew.
  bool add(std::vector<uint32_t> v) {
    for (size_t piv = 0; piv < d_; ++piv) {
      if (v[piv] == 0) continue;
      if (rows_[piv].empty()) {
        rows_[piv] = std::move(v);
        ++dim_;
        return true;
      }
      uint64_t factor = (uint64_t)v[piv] * inv_mod(rows_[piv][piv], p_) % p_;
      for (size_t i = piv; i < d_; ++i)
        v[i] = (uint32_t)((v[i] + (p_ - factor * rows_[piv][i] % p_)) % p_);
    }
    return false;
  }

 private:
  uint64_t p_, d_, dim_ = 0;
  std::vector<std::vector<uint32_t>> rows_;
};

}  // namespace

Lemma2Result lemma2_conditions(const FieldCtx& ctx, uint64_t n) {
  if (n <= 1) throw domain_error("lemma2_conditions: not applicable for n = 1");
  if ((ctx.q() - 1) % n != 0) throw domain_error("lemma2_conditions: n does not divide q-1");

  FieldElement x0 = ctx.subgroup_generator(n);

  // (b) the n elements of S span GF(q) additively
  Span s_span(ctx.p(), ctx.d());
  FieldElement cur = ctx.one();
  for (uint64_t k = 0; k < n && !s_span.full(); ++k) {
    s_span.add(cur.coeffs);
    cur = ctx.mul(cur, x0);
  }
  bool spans = s_span.full();

  // (c) ord_n(p) = d; p is coprime to n since n | q-1
  bool order_cond = mul_order(ctx.p(), n) == ctx.d();

  // (a) no proper nonzero S-invariant subspace: the span of every S-orbit
  // of a nonzero vector must be the full space
  bool irreducible = true;
  for (uint64_t code = 1; code < ctx.q() && irreducible; ++code) {
    FieldElement v = ctx.from_code(code);
    Span orbit_span(ctx.p(), ctx.d());
    FieldElement w = v;
    for (uint64_t k = 0; k < n && !orbit_span.full(); ++k) {
      orbit_span.add(w.coeffs);
      w = ctx.mul(w, x0);
    }
    if (!orbit_span.full()) irreducible = false;
  }

  return Lemma2Result{irreducible, spans, order_cond};
}

AffineGroup::AffineGroup(const FieldCtx& ctx, uint64_t n) : ctx_(&ctx), n_(n) {
  if (n == 0 || (ctx.q() - 1) % n != 0)
    throw domain_error("build_GS: n does not divide q-1");
  x0_ = ctx.subgroup_generator(n);

  uint64_t q = ctx.q();
  pow_code_.resize(n);
  dlog_.assign(q, (uint32_t)n);
  FieldElement cur = ctx.one();
  for (uint64_t s = 0; s < n; ++s) {
    pow_code_[s] = ctx.code(cur);
    dlog_[pow_code_[s]] = (uint32_t)s;
    cur = ctx.mul(cur, x0_);
  }

  mul_rank_.resize(n * q);
  for (uint64_t s = 0; s < n; ++s) {
    FieldElement as = ctx.from_code(pow_code_[s]);
    for (uint64_t r = 0; r < q; ++r) {
      FieldElement b = ctx.from_lex_rank(r);
      mul_rank_[s * q + r] = (uint32_t)ctx.lex_rank(ctx.mul(b, as));
    }
  }
}

AffineMap AffineGroup::at(uint64_t index) const {
  uint64_t q = ctx_->q();
  uint64_t s = index / q, r = index % q;
  return AffineMap{ctx_->from_code(pow_code_[s]), ctx_->from_lex_rank(r)};
}

uint64_t AffineGroup::index_of(const AffineMap& f) const {
  uint32_t s = dlog_[ctx_->code(f.a)];
  if (s == (uint32_t)n_) throw domain_error("affine map multiplier is not in S");
  return (uint64_t)s * ctx_->q() + ctx_->lex_rank(f.b);
}

uint64_t AffineGroup::index_of(uint64_t s, const FieldElement& b) const {
  return (s % n_) * ctx_->q() + ctx_->lex_rank(b);
}

uint64_t AffineGroup::mul(uint64_t i, uint64_t j) const {
  uint64_t q = ctx_->q();
  uint64_t s1 = i / q, r1 = i % q;
  uint64_t s2 = j / q, r2 = j % q;
  // (s1,b1)*(s2,b2) = (s1+s2, b1*x0^s2 + b2), applying left map first
  uint64_t rm = mul_rank_[s2 * q + r1];
  FieldElement sum = ctx_->add(ctx_->from_lex_rank(rm), ctx_->from_lex_rank(r2));
  return ((s1 + s2) % n_) * q + ctx_->lex_rank(sum);
}

uint64_t AffineGroup::inverse_index(uint64_t i) const {
  return index_of(inverse(*ctx_, at(i)));
}

}  // namespace gpd
