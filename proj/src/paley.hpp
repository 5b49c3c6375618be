#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessin.hpp"
#include "finite_field.hpp"

namespace gpd {

// Names the generalised Paley dessin P(x0^j, c) over GF(p^d) with |S| = n.
struct PaleyParams {
  uint64_t n = 1;   // valency = |S|
  uint64_t p = 2;   // field characteristic
  uint64_t d = 1;   // dimension = ord_n(p)
  uint64_t q = 2;   // p^d
  uint64_t c = 0;   // colour constant: y in T x^c
  uint64_t j = 0;   // generator exponent in Z_n^* (0 when n = 1)
  bool canonical = false;  // j is minimal in its <p>-coset

  bool operator==(const PaleyParams&) const = default;
};

std::string to_string(const PaleyParams& params);

// Least d >= 1 with p^d = 1 mod n; requires gcd(p, n) = 1.
uint64_t order_mod(uint64_t p, uint64_t n);

// Validates and normalises (n, p, c, j); computes d and q.  Parameter
// arithmetic is not subject to the construction bound; only building the
// dessin itself is.
PaleyParams make_params(uint64_t n, uint64_t p, uint64_t c, uint64_t j = 1);

// Minimum of the <p>-coset {j p^i mod n}.
uint64_t canonical_j(uint64_t n, uint64_t p, uint64_t j);
PaleyParams canonicalize(const PaleyParams& params);

// The dessin itself: G_S over GF(p^d), x = mult by x0^j, y = (x0^(jc), 1).
// Edges are the nq group elements in the AffineGroup order; the q edges of
// the translation subgroup T come first.
RegularDessin construct(const PaleyParams& params, uint64_t max_q = FieldCtx::kDefaultMaxQ);
std::vector<uint32_t> translation_edges(const PaleyParams& params);

struct TypeGenus {
  std::array<uint64_t, 3> type;
  int64_t chi;
  int64_t genus;
};
// Closed forms: type (n,p,n) / (n,n,p) with chi = p^(d-1)(2p+n-np) for
// c = 0 / c = -1, otherwise (n, n/gcd(n,c), n/gcd(n,c+1)) with
// chi = q(1 + gcd(n,c) + gcd(n,c+1) - n).
TypeGenus type_genus(uint64_t n, uint64_t p, uint64_t c);

// |GP(n,p)| = n phi(n)/d and |GP(n,p,c)| = phi(n)/d.
uint64_t count(uint64_t n, uint64_t p);
uint64_t count_c(uint64_t n, uint64_t p, uint64_t c);

// Canonical parameters, one per <p>-coset of Z_n^*, ascending j; all c
// ascending when c is not fixed.
std::vector<PaleyParams> enumerate(uint64_t n, uint64_t p);
std::vector<PaleyParams> enumerate(uint64_t n, uint64_t p, uint64_t c);

// Mirror image P(x,c) -> P(x^-1,c).
PaleyParams mirror(const PaleyParams& params);

// True iff -1 is a power of p mod n: the dessins of GP(n,p) are all real;
// otherwise they form chiral pairs.
bool is_real(uint64_t n, uint64_t p);

// Exponent i with p^i = -1 mod n from the prime-power congruence
// algorithm; empty exactly when no such i exists.  Requires n >= 2.
std::optional<uint64_t> minus_one_exponent(uint64_t n, uint64_t p);

struct SubstructureReport {
  bool white_primitive;
  bool face_primitive;
  bool is_map;          // white vertices have valency 2
  bool defined_over_q;  // field of definition is Q itself
};
SubstructureReport substructure_predicates(uint64_t n, uint64_t p, uint64_t c);

// Genus of D/T: (1 - gcd(n,c) - gcd(n,c+1) + n)/2, or 0 for c = 0, -1.
int64_t quotient_genus(uint64_t n, uint64_t c);

// The generic quotient of the constructed dessin by its translation
// subgroup (cross-check target for quotient_genus).
RegularDessin quotient_by_translations(const PaleyParams& params,
                                       uint64_t max_q = FieldCtx::kDefaultMaxQ);

struct GaloisData {
  std::vector<PaleyParams> orbit;  // = enumerate(n, p, c)
  uint64_t field_degree;           // phi(n)/d, the degree of the field of definition
};
GaloisData galois_data(uint64_t n, uint64_t p, uint64_t c);

enum class CurveVariant { c0, cMinus1 };
// Exponent data of the affine model w^p = prod_j (z - zeta_n^j)^(u^j) for
// d = 1; the cMinus1 variant records the z -> z/(z-1) substitution.
struct CurveModel {
  uint64_t n, p, u;
  std::vector<uint64_t> exponents;  // u^1 .. u^n mod p
  CurveVariant variant;
};
CurveModel curve_model(uint64_t n, uint64_t p, uint64_t j, CurveVariant variant);

// Non-faithful primitive cover: G~ = T x| C_{kn} acting through S, kernel
// the central C_k.  The quotient by the kernel is the base dessin; when
// gcd(k, nq) = 1 a verified complement to the kernel is attached.
struct CoverResult {
  RegularDessin dessin;
  std::vector<uint32_t> kernel_edges;
  uint64_t k = 1;
  std::optional<std::vector<uint32_t>> complement_edges;
};
CoverResult cyclic_cover(const PaleyParams& params, uint64_t k, uint64_t c_tilde,
                         uint64_t max_q = FieldCtx::kDefaultMaxQ);

}  // namespace gpd
