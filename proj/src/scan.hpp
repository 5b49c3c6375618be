#pragma once

#include <cstdint>
#include <vector>

#include "paley.hpp"

namespace gpd {

// Grid kernels verifying the closed forms against brute-force dessin
// computations over every (n, p[, c]) with nq below a bound.  Each kernel
// has an OpenMP-parallel path and a plain serial reference path; both
// produce identical, deterministically ordered results.

struct NPFamily {
  uint64_t n, p, d, q;
};
// All (n, p) with p prime, gcd(p,n) = 1 and n * p^d <= max_nq, ordered by
// (n, p).
std::vector<NPFamily> np_families(uint64_t max_nq);

struct ChiralityCheck {
  PaleyParams params;
  bool formula_real;  // Prop. 2 closed form
  bool brute_real;    // is_isomorphic(D, mirror(D))
};
std::vector<ChiralityCheck> chirality_scan(uint64_t max_nq, bool parallel);

struct InvarianceCheck {
  uint64_t n, p, c;
  std::array<bool, 12> table;  // closed forms
  std::array<bool, 12> brute;  // is_isomorphic(D, op(D))
  bool kaleidoscopic;
};
std::vector<InvarianceCheck> invariance_scan(uint64_t max_nq, bool parallel);

struct RecognitionCheck {
  PaleyParams params;
  bool primitive, faithful, roundtrip;
};
std::vector<RecognitionCheck> recognition_scan(uint64_t max_nq, bool parallel);

struct QuotientCheck {
  uint64_t n, p, c;
  int64_t formula_genus;
  int64_t computed_genus;  // genus of quotient(D, T)
};
std::vector<QuotientCheck> quotient_scan(uint64_t max_nq, bool parallel);

struct TypeGenusCheck {
  uint64_t n, p, c;
  bool match;  // closed form vs cycle counting, type, chi and genus
};
std::vector<TypeGenusCheck> type_genus_scan(uint64_t max_nq, bool parallel);

// Brute-force census of Prop. 1: enumerate every generating pair (x, y)
// of G_S with x of full multiplier order, classify the dessins up to
// isomorphism, and count classes per colour constant.
struct PairCensus {
  uint64_t n, p;
  uint64_t classes;                        // total isomorphism classes found
  std::vector<uint64_t> classes_per_c;     // indexed by c
};
PairCensus pair_census(uint64_t n, uint64_t p);

}  // namespace gpd
