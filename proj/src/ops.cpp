#include "ops.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

const std::array<OmegaStarOp, 12>& all_omega_ops() {
  static const std::array<OmegaStarOp, 12> ops = {{
      {{0, 1, 2}, false},  // id
      {{1, 0, 2}, false},  // d01
      {{2, 1, 0}, false},  // d02
      {{0, 2, 1}, false},  // d12
      {{1, 2, 0}, false},  // d012
      {{2, 0, 1}, false},  // d210
      {{0, 1, 2}, true},   // m
      {{1, 0, 2}, true},   // md01
      {{2, 1, 0}, true},   // md02
      {{0, 2, 1}, true},   // md12
      {{1, 2, 0}, true},   // md012
      {{2, 0, 1}, true},   // md210
  }};
  return ops;
}

const std::array<std::string, 12>& omega_op_names() {
  static const std::array<std::string, 12> names = {
      "id", "d01", "d02", "d12", "d012", "d210",
      "m",  "md01", "md02", "md12", "md012", "md210"};
  return names;
}

std::optional<OmegaStarOp> omega_op_from_name(const std::string& name) {
  const auto& names = omega_op_names();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return all_omega_ops()[i];
  return std::nullopt;
}

uint32_t omega_op_index(const OmegaStarOp& op) {
  const auto& ops = all_omega_ops();
  for (uint32_t i = 0; i < ops.size(); ++i)
    if (ops[i] == op) return i;
  throw internal_error("omega_op_index: unknown operation");
}

OmegaStarOp compose(const OmegaStarOp& op1, const OmegaStarOp& op2) {
  OmegaStarOp out;
  for (int i = 0; i < 3; ++i) out.pi[i] = op1.pi[op2.pi[i]];
  out.mirrored = op1.mirrored != op2.mirrored;
  return out;
}

RegularDessin apply_omega(const OmegaStarOp& op, const RegularDessin& d) {
  const std::vector<uint32_t>* sigma[3] = {&d.s0, &d.s1, &d.s2};
  std::vector<uint32_t> a = *sigma[op.pi[0]];
  std::vector<uint32_t> b = *sigma[op.pi[1]];
  if (op.mirrored) {
    std::vector<uint32_t> ai(a.size()), bi(b.size());
    for (uint32_t e = 0; e < a.size(); ++e) ai[a[e]] = e;
    for (uint32_t e = 0; e < b.size(); ++e) bi[b[e]] = e;
    a = std::move(ai);
    b = std::move(bi);
  }
  return make_regular_dessin(std::move(a), std::move(b), d.group_tag);
}

namespace {

// Multiplier exponents (e1, e2) of the new pair relative to a = x0^j:
// pairs (x,y)->(a^e1, a^e2) per op, before mirroring.
void pair_exponents(const OmegaStarOp& op, int64_t c, int64_t& e1, int64_t& e2) {
  const std::array<uint8_t, 3>& pi = op.pi;
  auto expo = [c](uint8_t which) -> int64_t {
    switch (which) {
      case 0: return 1;       // x
      case 1: return c;       // y
      default: return -1 - c; // z
    }
  };
  e1 = expo(pi[0]);
  e2 = expo(pi[1]);
  if (op.mirrored) {
    e1 = -e1;
    e2 = -e2;
  }
}

uint64_t mod_n(int64_t v, uint64_t n) {
  int64_t m = v % (int64_t)n;
  return (uint64_t)(m < 0 ? m + (int64_t)n : m);
}

}  // namespace

std::optional<PaleyParams> op_on_params(const OmegaStarOp& op, const PaleyParams& P) {
  if (P.n == 1) {
    // the star dessin St_p: only id, d12 and their mirrors stay in the family
    uint32_t idx = omega_op_index(op);
    if (idx == 0 || idx == 3 || idx == 6 || idx == 9) return canonicalize(P);
    return std::nullopt;
  }
  int64_t e1, e2;
  pair_exponents(op, (int64_t)P.c, e1, e2);
  uint64_t m1 = mod_n(e1, P.n);
  if (std::gcd(m1, P.n) != 1) return std::nullopt;  // new x does not generate S
  uint64_t m2 = mod_n(e2, P.n);
  uint64_t c_new = m2 * inv_mod(m1, P.n) % P.n;
  uint64_t j_new = P.j * m1 % P.n;
  return canonicalize(make_params(P.n, P.p, c_new, j_new));
}

PaleyParams apply_hole(const PaleyParams& P, uint64_t j) {
  if (P.n == 1) return canonicalize(P);
  if (std::gcd(j % P.n, P.n) != 1) throw domain_error("apply_hole: j must be a unit mod n");
  return canonicalize(make_params(P.n, P.p, P.c, P.j * (j % P.n) % P.n));
}

InvarianceTable invariance_table(uint64_t n, uint64_t p, uint64_t c) {
  uint64_t d = order_mod(p, n);
  c %= n;
  InvarianceTable t;
  if (n == 1) {
    // St_p is fixed by exactly id, d12, m, md12
    t.op_invariant = {true, false, false, true, false, false,
                      true, false, false, true, false, false};
    t.hole_invariant = true;
    t.kaleidoscopic = false;
    return t;
  }
  std::vector<bool> in_pow(n, false);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < d; ++i) {
    in_pow[cur] = true;
    cur = cur * (p % n) % n;
  }
  auto in = [&](uint64_t v) { return in_pow[v % n]; };
  bool u2 = c * c % n == 1 % n;
  bool v2 = (c + 1) * (c + 1) % n == 1 % n;
  bool w3 = (c * c + c + 1) % n == 0;
  bool half = (2 * c + 1) % n == 0;
  uint64_t mc = (n - c) % n;        // -c
  uint64_t c1 = (c + 1) % n;        // c+1
  uint64_t mc1 = (n - c1) % n;      // -(c+1)
  t.op_invariant[0] = true;
  t.op_invariant[1] = u2 && in(c);
  t.op_invariant[2] = v2 && in(mc1);
  t.op_invariant[3] = half;
  t.op_invariant[4] = t.op_invariant[5] = w3 && in(c);
  t.op_invariant[6] = in(n - 1);
  t.op_invariant[7] = u2 && in(mc);
  t.op_invariant[8] = v2 && in(c1);
  t.op_invariant[9] = half && in(n - 1);
  t.op_invariant[10] = t.op_invariant[11] = w3 && in(mc);
  t.hole_invariant = d == euler_phi(n);
  bool all = t.hole_invariant;
  for (bool b : t.op_invariant) all = all && b;
  t.kaleidoscopic = all;
  return t;
}

OmegaOrbits omega_orbits(const PaleyParams& P, uint64_t max_edges) {
  if (P.n * P.q > max_edges) throw size_limit_error("omega_orbits: dessin exceeds the size bound");
  RegularDessin base = construct(P);
  OmegaOrbits out;
  out.k = out.k_star = 0;
  std::vector<RegularDessin> reps;
  std::vector<uint32_t> class_of(12);
  for (uint32_t i = 0; i < 12; ++i) {
    RegularDessin image = apply_omega(all_omega_ops()[i], base);
    bool inv = is_isomorphic(image, base);
    if (inv) {
      ++out.k_star;
      if (i < 6) ++out.k;
    }
    uint32_t cls = UINT32_MAX;
    for (uint32_t r = 0; r < reps.size(); ++r) {
      if (is_isomorphic(image, reps[r])) {
        cls = r;
        break;
      }
    }
    if (cls == UINT32_MAX) {
      cls = (uint32_t)reps.size();
      reps.push_back(image);
      OrbitMember m;
      m.op_index = i;
      m.type = image.type;
      auto op_params = op_on_params(all_omega_ops()[i], P);
      m.gp = op_params.has_value();
      m.params = op_params;
      out.members.push_back(std::move(m));
    }
    class_of[i] = cls;
  }
  std::vector<bool> seen_omega(reps.size(), false);
  out.omega_length = 0;
  for (uint32_t i = 0; i < 6; ++i) {
    if (!seen_omega[class_of[i]]) {
      seen_omega[class_of[i]] = true;
      ++out.omega_length;
    }
  }
  out.omega_star_length = reps.size();
  return out;
}

}  // namespace gpd
