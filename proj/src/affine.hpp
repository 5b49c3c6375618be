#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finite_field.hpp"

namespace gpd {

// t -> a*t + b over GF(q), a != 0.
struct AffineMap {
  FieldElement a, b;
  bool operator==(const AffineMap&) const = default;
};

// t -> a * t^(p^i) + b; the ambient semilinear group AGammaL_1(q).
struct SemiaffineMap {
  FieldElement a, b;
  uint64_t frob = 0;
  bool operator==(const SemiaffineMap&) const = default;
};

AffineMap affine_identity(const FieldCtx& ctx);
// Product convention, used globally: f * g means "apply f first, then g".
AffineMap compose(const FieldCtx& ctx, const AffineMap& f, const AffineMap& g);
AffineMap inverse(const FieldCtx& ctx, const AffineMap& f);
FieldElement apply(const FieldCtx& ctx, const AffineMap& f, const FieldElement& t);
uint64_t affine_order(const FieldCtx& ctx, const AffineMap& f);

SemiaffineMap compose(const FieldCtx& ctx, const SemiaffineMap& f, const SemiaffineMap& g);
SemiaffineMap inverse(const FieldCtx& ctx, const SemiaffineMap& f);
FieldElement apply(const FieldCtx& ctx, const SemiaffineMap& f, const FieldElement& t);

// alpha^-1 * f * alpha; conjugation by semilinear maps preserves AGL_1(q).
AffineMap aut_conjugate(const FieldCtx& ctx, const SemiaffineMap& alpha, const AffineMap& f);

// Text forms "a=<elt>;b=<elt>" and "a=<elt>;b=<elt>;i=<int>".
std::string to_string(const FieldCtx& ctx, const AffineMap& f);
std::string to_string(const FieldCtx& ctx, const SemiaffineMap& f);

// Lemma 2's three equivalent conditions on the order-n subgroup S of the
// multiplicative group: (a) S acts irreducibly on the Z_p-space GF(q),
// (b) S spans GF(q) additively, (c) p has multiplicative order d mod n.
struct Lemma2Result {
  bool irreducible_action;
  bool spans_additively;
  bool order_condition;
};
Lemma2Result lemma2_conditions(const FieldCtx& ctx, uint64_t n);

// G_S = T x| S <= AGL_1(q): all maps t -> a*t + b with a in the order-n
// subgroup S.  Elements are indexed s*q + lex_rank(b) where the multiplier
// is x0^s; index 0 is the identity.
class AffineGroup {
 public:
  AffineGroup(const FieldCtx& ctx, uint64_t n);

  const FieldCtx& ctx() const { return *ctx_; }
  uint64_t n() const { return n_; }
  uint64_t size() const { return n_ * ctx_->q(); }
  const FieldElement& x0() const { return x0_; }

  AffineMap at(uint64_t index) const;
  uint64_t index_of(const AffineMap& f) const;
  uint64_t index_of(uint64_t s, const FieldElement& b) const;
  // index of (x0^s, 0); s = j gives the designated generator x of S
  uint64_t power_index(uint64_t s) const { return (s % n_) * ctx_->q(); }
  uint64_t mul(uint64_t i, uint64_t j) const;
  uint64_t inverse_index(uint64_t i) const;
  // Translation subgroup T = maps with a = 1: indices [0, q).
  bool is_translation(uint64_t i) const { return i < ctx_->q(); }

 private:
  const FieldCtx* ctx_;
  uint64_t n_;
  FieldElement x0_;
  std::vector<uint64_t> pow_code_;  // code of x0^s
  std::vector<uint32_t> mul_rank_;  // [s*q + r]: lex rank of b*x0^s
  std::vector<uint32_t> dlog_;      // code of a -> s (or n if not in S)
};

}  // namespace gpd
