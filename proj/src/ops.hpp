#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessin.hpp"
#include "paley.hpp"

namespace gpd {

// Element of Omega* = S3 x C2: a renaming of (black, white, face) roles
// plus an optional mirror.  The new generating pair of op(D) is
// (sigma_{pi[0]}, sigma_{pi[1]}), inverted when mirrored.
struct OmegaStarOp {
  std::array<uint8_t, 3> pi{0, 1, 2};
  bool mirrored = false;
  bool operator==(const OmegaStarOp&) const = default;
};

// The twelve operations in fixed order:
// id d01 d02 d12 d012 d210 m md01 md02 md12 md012 md210
const std::array<OmegaStarOp, 12>& all_omega_ops();
const std::array<std::string, 12>& omega_op_names();
std::optional<OmegaStarOp> omega_op_from_name(const std::string& name);
uint32_t omega_op_index(const OmegaStarOp& op);

// Apply op1 first, then op2.
OmegaStarOp compose(const OmegaStarOp& op1, const OmegaStarOp& op2);

// Generator-level action on any regular dessin (same edge set, new pair):
// d01: (y,x), d12: (x,z), d02: (z,y), d012: (y,z), d210: (z,x); the mirror
// inverts the pair afterwards.
RegularDessin apply_omega(const OmegaStarOp& op, const RegularDessin& d);

// Parameter-level action on generalised Paley dessins; empty when the
// image leaves the family (multiplier of the new x does not generate S).
std::optional<PaleyParams> op_on_params(const OmegaStarOp& op, const PaleyParams& params);

// Hole operation H_j at the parameter level: P(x, c) -> P(x^j, c).
PaleyParams apply_hole(const PaleyParams& params, uint64_t j);

// Closed-form invariance of P(x,c) under each element of Omega*, derived
// from the isomorphism criterion c' = c and j'/j in <p>; plus invariance
// under all hole operations and the kaleidoscopic flag.
struct InvarianceTable {
  std::array<bool, 12> op_invariant{};
  bool hole_invariant = false;
  bool kaleidoscopic = false;
};
InvarianceTable invariance_table(uint64_t n, uint64_t p, uint64_t c);

struct OrbitMember {
  uint32_t op_index;                  // first op reaching this class
  std::array<uint64_t, 3> type;
  bool gp;                            // stays in the generalised Paley family
  std::optional<PaleyParams> params;  // canonical, when gp
};
struct OmegaOrbits {
  uint32_t k = 1;        // invariance subgroup order inside Omega
  uint32_t k_star = 1;   // inside Omega*
  uint64_t omega_length = 1;       // distinct classes among the 6 images
  uint64_t omega_star_length = 1;  // distinct classes among all 12
  std::vector<OrbitMember> members;
};
// Brute-force orbit: applies all twelve operations to the constructed
// dessin and groups the images by is_isomorphic.
OmegaOrbits omega_orbits(const PaleyParams& params, uint64_t max_edges = 20000);

}  // namespace gpd
