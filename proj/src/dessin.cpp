#include "dessin.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

bool is_permutation(const std::vector<uint32_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CycleData cycle_data(const std::vector<uint32_t>& perm) {
  CycleData cd;
  cd.id.assign(perm.size(), UINT32_MAX);
  bool uniform = true;
  for (uint32_t start = 0; start < perm.size(); ++start) {
    if (cd.id[start] != UINT32_MAX) continue;
    uint64_t len = 0;
    uint32_t t = start;
    do {
      cd.id[t] = cd.count;
      t = perm[t];
      ++len;
    } while (t != start);
    if (cd.count == 0)
      cd.length = len;
    else if (cd.length != len)
      uniform = false;
    ++cd.count;
  }
  if (!uniform) cd.length = 0;
  return cd;
}

namespace {

// Connectivity of <s0, s1> acting on the edges.
bool transitive(uint32_t edges, const std::vector<uint32_t>& s0, const std::vector<uint32_t>& s1) {
  if (edges == 0) return false;
  std::vector<bool> seen(edges, false);
  std::vector<uint32_t> stack{0};
  seen[0] = true;
  uint32_t visited = 1;
  while (!stack.empty()) {
    uint32_t e = stack.back();
    stack.pop_back();
    for (uint32_t nb : {s0[e], s1[e]}) {
      if (!seen[nb]) {
        seen[nb] = true;
        ++visited;
        stack.push_back(nb);
      }
    }
  }
  return visited == edges;
}

}  // namespace

RegularDessin make_regular_dessin(std::vector<uint32_t> s0, std::vector<uint32_t> s1,
                                  std::string group_tag) {
  RegularDessin d;
  d.edges = (uint32_t)s0.size();
  if (s1.size() != s0.size()) throw domain_error("dessin: permutation sizes differ");
  if (d.edges == 0) throw domain_error("dessin: empty edge set");
  if (!is_permutation(s0) || !is_permutation(s1))
    throw domain_error("dessin: inputs are not permutations");
  if (!transitive(d.edges, s0, s1)) throw domain_error("dessin: <s0,s1> is not transitive");

  d.s0 = std::move(s0);
  d.s1 = std::move(s1);
  // s2 = (s0 s1)^-1 so that s0 s1 s2 = id
  d.s2.assign(d.edges, 0);
  for (uint32_t e = 0; e < d.edges; ++e) d.s2[d.s1[d.s0[e]]] = e;

  CycleData c0 = cycle_data(d.s0), c1 = cycle_data(d.s1), c2 = cycle_data(d.s2);
  if (c0.length == 0 || c1.length == 0 || c2.length == 0)
    throw domain_error("dessin: generator cycles are not uniform (not a regular dessin)");
  d.type = {c0.length, c1.length, c2.length};
  d.chi = (int64_t)c0.count + c1.count + c2.count - (int64_t)d.edges;
  if (d.chi % 2 != 0) throw domain_error("dessin: odd Euler characteristic");
  d.genus = 1 - d.chi / 2;
  d.group_tag = std::move(group_tag);
  return d;
}

RegularDessin from_triple(uint64_t order,
                          const std::function<uint64_t(uint64_t, uint64_t)>& mul,
                          uint64_t x, uint64_t y, std::string group_tag) {
  std::vector<uint32_t> s0(order), s1(order);
  for (uint64_t g = 0; g < order; ++g) {
    s0[g] = (uint32_t)mul(g, x);
    s1[g] = (uint32_t)mul(g, y);
  }
  if (!transitive((uint32_t)order, s0, s1))
    throw domain_error("from_triple: x and y generate a proper subgroup");
  return make_regular_dessin(std::move(s0), std::move(s1), std::move(group_tag));
}

std::pair<int64_t, int64_t> euler_and_genus(const RegularDessin& d) {
  CycleData c0 = cycle_data(d.s0), c1 = cycle_data(d.s1), c2 = cycle_data(d.s2);
  int64_t chi = (int64_t)c0.count + c1.count + c2.count - (int64_t)d.edges;
  if (chi % 2 != 0) throw domain_error("euler_and_genus: odd Euler characteristic");
  return {chi, 1 - chi / 2};
}

bool is_isomorphic(const RegularDessin& a, const RegularDessin& b) {
  if (a.edges != b.edges || a.type != b.type || a.chi != b.chi) return false;
  const uint32_t E = a.edges;
  std::vector<uint32_t> img(E), stamp(E, UINT32_MAX), used(E, UINT32_MAX);
  std::vector<uint32_t> queue(E);
  for (uint32_t seed = 0; seed < E; ++seed) {
    uint32_t head = 0, tail = 0;
    img[0] = seed;
    stamp[0] = seed;
    used[seed] = seed;
    queue[tail++] = 0;
    bool ok = true;
    uint32_t assigned = 1;
    while (ok && head < tail) {
      uint32_t t = queue[head++];
      const uint32_t u = img[t];
      const std::vector<uint32_t>* gens_a[2] = {&a.s0, &a.s1};
      const std::vector<uint32_t>* gens_b[2] = {&b.s0, &b.s1};
      for (int k = 0; k < 2; ++k) {
        uint32_t tn = (*gens_a[k])[t];
        uint32_t un = (*gens_b[k])[u];
        if (stamp[tn] == seed) {
          if (img[tn] != un) {
            ok = false;
            break;
          }
        } else {
          if (used[un] == seed) {
            ok = false;
            break;
          }
          img[tn] = un;
          stamp[tn] = seed;
          used[un] = seed;
          queue[tail++] = tn;
          ++assigned;
        }
      }
    }
    if (ok && assigned == E) return true;
  }
  return false;
}

std::vector<std::vector<uint32_t>> monodromy_elements(const RegularDessin& d,
                                                      uint32_t max_edges) {
  const uint32_t E = d.edges;
  if (E > max_edges) throw size_limit_error("monodromy_elements: edge count exceeds bound");
  std::vector<std::vector<uint32_t>> perms(E);
  perms[0].resize(E);
  std::iota(perms[0].begin(), perms[0].end(), 0);
  std::vector<bool> have(E, false);
  have[0] = true;
  std::vector<uint32_t> stack{0};
  while (!stack.empty()) {
    uint32_t e = stack.back();
    stack.pop_back();
    for (const auto* s : {&d.s0, &d.s1}) {
      uint32_t en = (*s)[e];
      if (have[en]) continue;
      have[en] = true;
      perms[en].resize(E);
      for (uint32_t t = 0; t < E; ++t) perms[en][t] = (*s)[perms[e][t]];
      stack.push_back(en);
    }
  }
  return perms;
}

std::vector<uint32_t> left_action(const RegularDessin& d, uint32_t t0) {
  const uint32_t E = d.edges;
  std::vector<uint32_t> vals(E, UINT32_MAX);
  vals[0] = t0;
  std::vector<uint32_t> stack{0};
  while (!stack.empty()) {
    uint32_t e = stack.back();
    stack.pop_back();
    for (const auto* s : {&d.s0, &d.s1}) {
      uint32_t en = (*s)[e];
      if (vals[en] == UINT32_MAX) {
        vals[en] = (*s)[vals[e]];
        stack.push_back(en);
      }
    }
  }
  return vals;
}

RegularDessin quotient_by_perms(const RegularDessin& d,
                                const std::vector<std::vector<uint32_t>>& subgroup_perms) {
  const uint32_t E = d.edges;
  // label of e = least edge in its coset {pi_n(e) : n in N}
  std::vector<uint32_t> label(E);
  std::iota(label.begin(), label.end(), 0);
  for (const auto& perm : subgroup_perms)
    for (uint32_t e = 0; e < E; ++e) label[e] = std::min(label[e], perm[e]);
  // normality makes the generator actions well defined on cosets; verify
  std::vector<uint32_t> index(E, UINT32_MAX);
  std::vector<uint32_t> reps;
  for (uint32_t e = 0; e < E; ++e) {
    if (label[e] == e) {
      index[e] = (uint32_t)reps.size();
      reps.push_back(e);
    }
  }
  uint32_t ne = (uint32_t)reps.size();
  std::vector<uint32_t> q0(ne, UINT32_MAX), q1(ne, UINT32_MAX);
  for (uint32_t e = 0; e < E; ++e) {
    uint32_t from = index[label[e]];
    uint32_t to0 = index[label[d.s0[e]]];
    uint32_t to1 = index[label[d.s1[e]]];
    if (q0[from] == UINT32_MAX)
      q0[from] = to0;
    else if (q0[from] != to0)
      throw domain_error("quotient: subgroup is not normal (coset action ill-defined)");
    if (q1[from] == UINT32_MAX)
      q1[from] = to1;
    else if (q1[from] != to1)
      throw domain_error("quotient: subgroup is not normal (coset action ill-defined)");
  }
  return make_regular_dessin(std::move(q0), std::move(q1),
                             d.group_tag.empty() ? std::string{} : d.group_tag + "/N");
}

RegularDessin quotient(const RegularDessin& d, const std::vector<uint32_t>& subgroup_edges) {
  auto perms = monodromy_elements(d);
  // subgroup closure check: product of pi_a and pi_b is pi at perms[b][a]
  std::vector<bool> in_n(d.edges, false);
  for (uint32_t e : subgroup_edges) {
    if (e >= d.edges) throw domain_error("quotient: edge index out of range");
    in_n[e] = true;
  }
  if (!in_n[0]) throw domain_error("quotient: subgroup must contain the identity edge 0");
  for (uint32_t a : subgroup_edges)
    for (uint32_t b : subgroup_edges)
      if (!in_n[perms[b][a]]) throw domain_error("quotient: edge set is not closed (not a subgroup)");
  // normality under the generators x, y
  for (uint32_t gen_edge : {d.s0[0], d.s1[0]}) {
    const auto& pg = perms[gen_edge];
    uint32_t inv = 0;
    while (pg[inv] != 0) ++inv;  // edge of the inverse element
    for (uint32_t nyb : subgroup_edges) {
      uint32_t conj = pg[perms[nyb][inv]];
      if (!in_n[conj]) throw domain_error("quotient: subgroup is not normal");
    }
  }
  std::vector<std::vector<uint32_t>> nperms;
  nperms.reserve(subgroup_edges.size());
  for (uint32_t e : subgroup_edges) nperms.push_back(perms[e]);
  return quotient_by_perms(d, nperms);
}

RegularDessin build_star(uint64_t m) {
  if (m < 1) throw domain_error("build_star: m must be >= 1");
  auto mul = [m](uint64_t a, uint64_t b) { return (a + b) % m; };
  RegularDessin d = from_triple(m, mul, 0, m == 1 ? 0 : 1, "star");
  return d;
}

RegularDessin build_fermat(uint64_t n) {
  if (n < 1) throw domain_error("build_fermat: n must be >= 1");
  auto mul = [n](uint64_t a, uint64_t b) {
    uint64_t a1 = a / n, a2 = a % n, b1 = b / n, b2 = b % n;
    return ((a1 + b1) % n) * n + (a2 + b2) % n;
  };
  return from_triple(n * n, mul, n /* (1,0) */, 1 /* (0,1) */, "fermat");
}

RegularDessin build_quaternion() {
  // elements 1, -1, i, -i, j, -j, k, -k as sign bit + basis index
  static const int basis_mul[4][4] = {
      {0, 1, 2, 3},  // 1 * .
      {1, 0, 3, 2},  // i*1=i, i*i=-1, i*j=k, i*k=-j  (values: basis index)
      {2, 3, 0, 1},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 1, 0},  // k*1=k, k*i=j,  k*j=-i, k*k=-1
  };
  static const int sign_mul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  };
  auto mul = [](uint64_t a, uint64_t b) {
    uint64_t sa = a & 1, ua = a >> 1, sb = b & 1, ub = b >> 1;
    uint64_t u = (uint64_t)basis_mul[ua][ub];
    uint64_t s = sa ^ sb ^ (uint64_t)sign_mul[ua][ub];
    return (u << 1) | s;
  };
  // x = i (index 2), y = j (index 4)
  return from_triple(8, mul, 2, 4, "quaternion");
}

RegularDessin build_p3(uint64_t p) {
  if (!is_prime(p) || p == 2) throw domain_error("build_p3: p must be an odd prime");
  uint64_t p2 = p * p;
  std::vector<uint64_t> pw(p);  // (p+1)^j mod p^2
  pw[0] = 1;
  for (uint64_t j = 1; j < p; ++j) pw[j] = pw[j - 1] * (p + 1) % p2;
  auto mul = [p, p2, pw](uint64_t a, uint64_t b) {
    uint64_t i1 = a / p, j1 = a % p, i2 = b / p, j2 = b % p;
    // a^i1 b^j1 a^i2 b^j2 = a^(i1 + i2 (p+1)^j1) b^(j1+j2)
    uint64_t i = (i1 + i2 * pw[j1]) % p2;
    return i * p + (j1 + j2) % p;
  };
  // x = a, y = ab
  return from_triple(p2 * p, mul, 1 * p + 0, 1 * p + 1, "p3");
}

RegularDessin build_metacyclic(uint64_t n, uint64_t p, int64_t r) {
  if (n < 2) throw domain_error("build_metacyclic: n must be >= 2");
  if (!is_prime(p)) throw domain_error("build_metacyclic: p must be prime");
  uint64_t rm = (uint64_t)(((r % (int64_t)n) + (int64_t)n) % (int64_t)n);
  if (std::gcd(rm, n) != 1 || mul_order(rm, n) != p)
    throw domain_error("build_metacyclic: r must have order p in Z_n^*");
  std::vector<uint64_t> pw(p);
  pw[0] = 1;
  for (uint64_t j = 1; j < p; ++j) pw[j] = pw[j - 1] * rm % n;
  auto mul = [n, p, pw](uint64_t a, uint64_t b) {
    uint64_t i1 = a / p, j1 = a % p, i2 = b / p, j2 = b % p;
    // x^i1 y^j1 x^i2 y^j2 = x^(i1 + i2 r^j1) y^(j1+j2)
    uint64_t i = (i1 + i2 * pw[j1]) % n;
    return i * p + (j1 + j2) % p;
  };
  return from_triple(n * p, mul, 1 * p + 0, 0 * p + 1, "metacyclic");
}

void write_dessin(std::ostream& os, uint32_t edges, const std::vector<uint32_t>& s0,
                  const std::vector<uint32_t>& s1) {
  os << "edges " << edges << '\n';
  for (const auto* s : {&s0, &s1}) {
    os << (s == &s0 ? "s0" : "s1");
    for (uint32_t v : *s) os << ' ' << v;
    os << '\n';
  }
}

PermDessin read_dessin(std::istream& is) {
  std::string kw;
  PermDessin d;
  if (!(is >> kw) || kw != "edges") throw domain_error("dessin file: expected 'edges <E>'");
  if (!(is >> d.edges) || d.edges == 0) throw domain_error("dessin file: bad edge count");
  for (auto* s : {&d.s0, &d.s1}) {
    if (!(is >> kw) || (kw != "s0" && kw != "s1"))
      throw domain_error("dessin file: expected 's0'/'s1' line");
    s->resize(d.edges);
    for (uint32_t i = 0; i < d.edges; ++i)
      if (!(is >> (*s)[i])) throw domain_error("dessin file: truncated permutation");
    if (!is_permutation(*s)) throw domain_error("dessin file: line is not a permutation of [0,E)");
  }
  return d;
}

}  // namespace gpd
