#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gpd {

// Raw recognizer input: two permutations of the edge set.
struct PermDessin {
  uint32_t edges = 0;
  std::vector<uint32_t> s0, s1;
};

// Regular dessin: a group with generating triple (x, y, z), xyz = 1,
// realized by the right actions of x, y, z on the edge set (= group
// elements in canonical order, identity at index 0).  s0*s1*s2 is the
// identity permutation under the global apply-left-first convention.
struct RegularDessin {
  uint32_t edges = 0;
  std::vector<uint32_t> s0, s1, s2;
  std::array<uint64_t, 3> type{};  // uniform cycle lengths of s0, s1, s2
  int64_t chi = 2;
  int64_t genus = 0;
  std::string group_tag;
};

struct CycleData {
  uint32_t count = 0;
  uint64_t length = 0;          // uniform cycle length, 0 if mixed
  std::vector<uint32_t> id;     // point -> cycle index, in order of least point
};
CycleData cycle_data(const std::vector<uint32_t>& perm);

bool is_permutation(const std::vector<uint32_t>& p);

// Builds a RegularDessin from the generator actions; validates bijections,
// connectivity and uniform cycle lengths, derives s2 = (s0 s1)^-1, and
// computes type, Euler characteristic and genus.
RegularDessin make_regular_dessin(std::vector<uint32_t> s0, std::vector<uint32_t> s1,
                                  std::string group_tag = {});

// Edges <-> elements of a concrete group of the given order with identity
// at index 0; rejects pairs that generate a proper subgroup.
RegularDessin from_triple(uint64_t order,
                          const std::function<uint64_t(uint64_t, uint64_t)>& mul,
                          uint64_t x, uint64_t y, std::string group_tag = {});

// Recount cycles; returns (chi, genus) and throws on odd chi.
std::pair<int64_t, int64_t> euler_and_genus(const RegularDessin& d);

// Edge bijection phi with phi s0 = s0' phi and phi s1 = s1' phi, found by
// seed-and-propagate from edge 0.
bool is_isomorphic(const RegularDessin& a, const RegularDessin& b);

// Monodromy element for each edge: perms[e] is the unique product of
// generators mapping edge 0 to e.  O(E^2) space; refuses E > max_edges.
std::vector<std::vector<uint32_t>> monodromy_elements(const RegularDessin& d,
                                                      uint32_t max_edges = 4096);

// Left-multiplication action: the permutation commuting with the monodromy
// that sends edge 0 to t0.
std::vector<uint32_t> left_action(const RegularDessin& d, uint32_t t0);

// Quotient by a normal subgroup given as an edge subset (via the edge 0 =
// identity correspondence); checks closure and normality.
RegularDessin quotient(const RegularDessin& d, const std::vector<uint32_t>& subgroup_edges);

// Same, with the subgroup given by its right-action permutations (callers
// that know the group structure can supply these cheaply).
RegularDessin quotient_by_perms(const RegularDessin& d,
                                const std::vector<std::vector<uint32_t>>& subgroup_perms);

// Fixture dessins.
RegularDessin build_star(uint64_t m);                       // type (1, m, m)
RegularDessin build_fermat(uint64_t n);                     // C_n x C_n, type (n, n, n)
RegularDessin build_quaternion();                           // Q_8, type (4, 4, 4)
RegularDessin build_p3(uint64_t p);                         // order p^3, type (p^2, p^2, p^2)
RegularDessin build_metacyclic(uint64_t n, uint64_t p, int64_t r);  // C_n x| C_p

// Text format shared by RegularDessin and PermDessin:
//   edges <E>
//   s0 <E integers>
//   s1 <E integers>
void write_dessin(std::ostream& os, uint32_t edges, const std::vector<uint32_t>& s0,
                  const std::vector<uint32_t>& s1);
PermDessin read_dessin(std::istream& is);

}  // namespace gpd
