#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dessin.hpp"
#include "paley.hpp"

namespace gpd {

bool is_transitive(const std::vector<std::vector<uint32_t>>& gens, uint32_t degree);

// Pairwise minimal-block closure; degree-1 actions count as imprimitive
// (a star dessin is primitive exactly when its degree is prime).
bool is_primitive(const std::vector<std::vector<uint32_t>>& gens, uint32_t degree);

// Closure of a permutation set under products; empty result when the group
// grows beyond cap elements.
std::optional<std::vector<std::vector<uint32_t>>> perm_closure(
    const std::vector<std::vector<uint32_t>>& gens, uint64_t cap);

enum class QuotientKind { regular_prime_degree, frobenius, other };
const char* to_string(QuotientKind k);

struct BlackActionReport {
  uint64_t black_count = 0;
  bool transitive = false;
  bool faithful = false;
  bool primitive = false;
  bool regular_on_black = false;  // the full group acts regularly (star dessins)
  uint64_t kernel_order = 1;
  bool kernel_cyclic = true;
  bool kernel_central = true;
  QuotientKind quotient_kind = QuotientKind::other;
};

// The automorphism action on the black vertices (sigma0-cycles), analysed:
// transitivity, faithfulness, primitivity by block closure, kernel
// structure and the induced-quotient dichotomy.
BlackActionReport analyze_black_action(const RegularDessin& d);

// Regularity gate for raw recognizer input: the closure of <s0, s1> must
// have exactly E elements.
RegularDessin regular_from_perm(const PermDessin& pd);

struct RecognitionResult {
  std::optional<PaleyParams> params;  // canonical, present iff recognized
  BlackActionReport report;
  std::string diagnosis;  // why recognition was refused, when it was
};

// Theorem 1 as a procedure: a primitive + faithful regular dessin is
// identified as a generalised Paley dessin (star dessins of prime degree
// map to GP(1,p,0)); anything else is returned unrecognized with the
// report attached.
RecognitionResult recognize_paley(const RegularDessin& d);
RecognitionResult recognize_paley(const PermDessin& pd);

// Census presentations: relators over x, X, y, Y, z, Z (capitals are
// inverses, z = (xy)^-1), one per line, evaluated left to right.
struct Presentation {
  std::vector<std::string> relators;
};
Presentation parse_relators(std::istream& is);

struct PresentationMatch {
  PaleyParams params;        // concrete candidate; j need not be canonical
  uint64_t multiplier_code;  // code of a = x0^j (the residue r when d = 1)
};
struct MatchResult {
  std::vector<PresentationMatch> matches;
  std::vector<uint64_t> abelian_c;  // c solving every abelianized relator
};

// Evaluates every relator in every concrete candidate dessin of GP(n,p)
// (all c, all j in Z_n^*) and returns the candidates where all relators
// are the identity.
MatchResult match_presentation(uint64_t n, uint64_t p, const Presentation& pres,
                               uint64_t max_q = FieldCtx::kDefaultMaxQ);

}  // namespace gpd
