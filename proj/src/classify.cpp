#include "classify.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "affine.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace gpd {

bool is_transitive(const std::vector<std::vector<uint32_t>>& gens, uint32_t degree) {
  if (degree == 0) return false;
  std::vector<bool> seen(degree, false);
  std::vector<uint32_t> stack{0};
  seen[0] = true;
  uint32_t visited = 1;
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      uint32_t w = g[v];
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == degree;
}

namespace {

// Size of the minimal block containing {0, v}: grow the partition by
// union-find, propagating merges through every generator.
uint32_t minimal_block_size(const std::vector<std::vector<uint32_t>>& gens, uint32_t degree,
                            uint32_t v) {
  std::vector<uint32_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::pair<uint32_t, uint32_t>> queue{{0, v}};
  parent[find(v)] = find(0);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      uint32_t ga = find(g[a]), gb = find(g[b]);
      if (ga != gb) {
        parent[ga] = gb;
        queue.emplace_back(g[a], g[b]);
      }
    }
  }
  uint32_t root = find(0), size = 0;
  for (uint32_t t = 0; t < degree; ++t)
    if (find(t) == root) ++size;
  return size;
}

}  // namespace

bool is_primitive(const std::vector<std::vector<uint32_t>>& gens, uint32_t degree) {
  if (degree < 2) return false;
  if (!is_transitive(gens, degree)) return false;
  for (uint32_t v = 1; v < degree; ++v)
    if (minimal_block_size(gens, degree, v) != degree) return false;
  return true;
}

namespace {

struct PermHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return (size_t)h;
  }
};

}  // namespace

std::optional<std::vector<std::vector<uint32_t>>> perm_closure(
    const std::vector<std::vector<uint32_t>>& gens, uint64_t cap) {
  if (gens.empty()) return std::nullopt;
  size_t degree = gens[0].size();
  std::vector<uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_map<std::vector<uint32_t>, uint32_t, PermHash> index;
  std::vector<std::vector<uint32_t>> elems{id};
  index.emplace(id, 0);
  std::vector<uint32_t> stack{0};
  while (!stack.empty()) {
    uint32_t i = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      std::vector<uint32_t> prod(degree);
      for (size_t t = 0; t < degree; ++t) prod[t] = g[elems[i][t]];
      if (index.emplace(prod, (uint32_t)elems.size()).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > cap) return std::nullopt;
        stack.push_back((uint32_t)(elems.size() - 1));
      }
    }
  }
  return elems;
}

const char* to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::regular_prime_degree: return "regular_prime_degree";
    case QuotientKind::frobenius: return "frobenius";
    default: return "other";
  }
}

namespace {

struct BlackData {
  CycleData cycles;
  std::vector<uint32_t> bx, by;  // induced action of x, y on the cycles
};

BlackData black_action(const RegularDessin& d) {
  BlackData out;
  out.cycles = cycle_data(d.s0);
  uint32_t nb = out.cycles.count;
  out.bx.assign(nb, UINT32_MAX);
  out.by.assign(nb, UINT32_MAX);
  std::vector<uint32_t> lx = left_action(d, d.s0[0]);
  std::vector<uint32_t> ly = left_action(d, d.s1[0]);
  for (uint32_t e = 0; e < d.edges; ++e) {
    uint32_t from = out.cycles.id[e];
    for (int k = 0; k < 2; ++k) {
      uint32_t to = out.cycles.id[k == 0 ? lx[e] : ly[e]];
      std::vector<uint32_t>& b = k == 0 ? out.bx : out.by;
      if (b[from] == UINT32_MAX)
        b[from] = to;
      else if (b[from] != to)
        throw internal_error("black_action: induced action ill-defined");
    }
  }
  return out;
}

bool fixes_all_cycles(const std::vector<uint32_t>& lam, const std::vector<uint32_t>& cycle_id) {
  for (uint32_t e = 0; e < lam.size(); ++e)
    if (cycle_id[lam[e]] != cycle_id[e]) return false;
  return true;
}

uint64_t perm_order(const std::vector<uint32_t>& p) {
  std::vector<bool> seen(p.size(), false);
  uint64_t ord = 1;
  for (uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    uint64_t len = 0;
    uint32_t t = s;
    do {
      seen[t] = true;
      t = p[t];
      ++len;
    } while (t != s);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool commute(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  for (uint32_t t = 0; t < a.size(); ++t)
    if (a[b[t]] != b[a[t]]) return false;
  return true;
}

uint32_t count_fixed(const std::vector<uint32_t>& p) {
  uint32_t f = 0;
  for (uint32_t t = 0; t < p.size(); ++t) f += (p[t] == t);
  return f;
}

}  // namespace

BlackActionReport analyze_black_action(const RegularDessin& d) {
  BlackData bd = black_action(d);
  uint32_t nb = bd.cycles.count;
  BlackActionReport rep;
  rep.black_count = nb;
  std::vector<std::vector<uint32_t>> gens{bd.bx, bd.by};
  rep.transitive = is_transitive(gens, nb);
  rep.primitive = is_primitive(gens, nb);

  auto image = perm_closure(gens, d.edges);
  if (!image) throw internal_error("analyze_black_action: image larger than the group");
  uint64_t image_order = image->size();
  rep.faithful = image_order == d.edges;
  rep.kernel_order = d.edges / image_order;
  rep.regular_on_black = rep.faithful && rep.transitive && d.edges == nb;

  if (!rep.faithful) {
    // kernel elements: left multiplications fixing every sigma0-cycle
    std::vector<std::vector<uint32_t>> kernel;
    for (uint32_t e = 0; e < d.edges; ++e) {
      std::vector<uint32_t> lam = left_action(d, e);
      if (fixes_all_cycles(lam, bd.cycles.id)) kernel.push_back(std::move(lam));
    }
    if (kernel.size() != rep.kernel_order)
      throw internal_error("analyze_black_action: kernel size mismatch");
    rep.kernel_cyclic = false;
    rep.kernel_central = true;
    std::vector<uint32_t> lx = left_action(d, d.s0[0]);
    std::vector<uint32_t> ly = left_action(d, d.s1[0]);
    for (const auto& lam : kernel) {
      if (perm_order(lam) == rep.kernel_order) rep.kernel_cyclic = true;
      if (!commute(lam, lx) || !commute(lam, ly)) rep.kernel_central = false;
    }
  } else {
    rep.kernel_cyclic = true;
    rep.kernel_central = true;
  }

  if (rep.transitive && image_order == nb) {
    rep.quotient_kind =
        is_prime(nb) ? QuotientKind::regular_prime_degree : QuotientKind::other;
  } else if (rep.transitive && image_order > nb) {
    bool frobenius = true;
    for (const auto& g : *image) {
      uint32_t fixed = count_fixed(g);
      if (fixed != nb && fixed > 1) {
        frobenius = false;
        break;
      }
    }
    rep.quotient_kind = frobenius ? QuotientKind::frobenius : QuotientKind::other;
  } else {
    rep.quotient_kind = QuotientKind::other;
  }
  return rep;
}

RegularDessin regular_from_perm(const PermDessin& pd) {
  if (pd.s0.size() != pd.edges || pd.s1.size() != pd.edges)
    throw domain_error("dessin: permutation sizes differ from edge count");
  if (!is_permutation(pd.s0) || !is_permutation(pd.s1))
    throw domain_error("dessin: inputs are not permutations");
  auto closure = perm_closure({pd.s0, pd.s1}, pd.edges);
  if (!closure || closure->size() != pd.edges)
    throw domain_error("dessin is not regular: |<s0,s1>| != E");
  return make_regular_dessin(pd.s0, pd.s1);
}

namespace {

// Colour constant of a faithful primitive image group: the k with
// y x^-k in the translation subgroup (identity or fixed-point-free).
uint64_t colour_constant(const std::vector<uint32_t>& bx, const std::vector<uint32_t>& by,
                         uint64_t n) {
  auto fpf_or_id = [](const std::vector<uint32_t>& g) {
    uint32_t fixed = count_fixed(g);
    return fixed == 0 || fixed == g.size();
  };
  uint32_t degree = (uint32_t)bx.size();
  std::vector<uint32_t> xinv(degree);
  for (uint32_t t = 0; t < degree; ++t) xinv[bx[t]] = t;
  std::vector<uint32_t> cand = by;  // y x^-k as k grows
  for (uint64_t k = 0; k < n; ++k) {
    if (fpf_or_id(cand)) return k;
    for (uint32_t t = 0; t < degree; ++t) cand[t] = xinv[cand[t]];
  }
  throw internal_error("colour constant not found in a primitive faithful dessin");
}

}  // namespace

RecognitionResult recognize_paley(const RegularDessin& d) {
  RecognitionResult res;
  res.report = analyze_black_action(d);
  if (!res.report.primitive || !res.report.faithful) {
    std::ostringstream os;
    if (!res.report.primitive) os << "not primitive";
    if (!res.report.faithful) os << (res.report.primitive ? "" : ", ") << "not faithful";
    res.diagnosis = os.str();
    return res;
  }
  uint64_t n = d.type[0];
  if (n == 1) {
    // Lemma 1: regular on black vertices, so a star dessin
    if (!is_prime(d.edges)) {
      res.diagnosis = "regular black action of non-prime degree";
      return res;
    }
    res.params = make_params(1, d.edges, 0, 0);
    return res;
  }
  uint64_t q = res.report.black_count;
  if ((uint64_t)d.edges != n * q)
    throw internal_error("recognize_paley: edge count is not n * q");
  auto fac = factorize(q);
  if (fac.size() != 1)
    throw internal_error("recognize_paley: primitive faithful dessin with non-prime-power degree");
  uint64_t p = fac[0].first, deg = fac[0].second;
  if (std::gcd(p, n) != 1 || order_mod(p, n) != deg)
    throw internal_error("recognize_paley: dimension does not match ord_n(p)");

  BlackData bd = black_action(d);
  uint64_t c = colour_constant(bd.bx, bd.by, n);
  for (const PaleyParams& cand : enumerate(n, p, c)) {
    if (type_genus(cand.n, cand.p, cand.c).type != d.type) continue;
    if (is_isomorphic(construct(cand), d)) {
      res.params = cand;
      return res;
    }
  }
  throw internal_error("recognize_paley: no candidate matched a primitive faithful dessin");
}

RecognitionResult recognize_paley(const PermDessin& pd) {
  return recognize_paley(regular_from_perm(pd));
}

Presentation parse_relators(std::istream& is) {
  Presentation pres;
  std::string line;
  while (std::getline(is, line)) {
    std::string word;
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (std::string("xXyYzZ").find(ch) == std::string::npos)
        throw domain_error(std::string("relator: invalid token '") + ch + "'");
      word += ch;
    }
    if (!word.empty()) pres.relators.push_back(std::move(word));
  }
  return pres;
}

namespace {

// Expand z = (xy)^-1 = y^-1 x^-1 and Z = xy before evaluation.
std::string expand_z(const std::string& relator) {
  std::string out;
  for (char ch : relator) {
    switch (ch) {
      case 'z': out += "YX"; break;
      case 'Z': out += "xy"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

MatchResult match_presentation(uint64_t n, uint64_t p, const Presentation& pres,
                               uint64_t max_q) {
  uint64_t d = order_mod(p, n);
  FieldCtx ctx(p, d, max_q);
  FieldElement x0 = ctx.subgroup_generator(n);

  std::vector<std::string> words;
  words.reserve(pres.relators.size());
  for (const auto& r : pres.relators) words.push_back(expand_z(r));

  // abelianized system: ex + ey * c = 0 mod n for each relator
  std::vector<std::pair<int64_t, int64_t>> exps;
  for (const auto& w : words) {
    int64_t ex = 0, ey = 0;
    for (char ch : w) {
      if (ch == 'x') ++ex;
      if (ch == 'X') --ex;
      if (ch == 'y') ++ey;
      if (ch == 'Y') --ey;
    }
    exps.emplace_back(ex, ey);
  }

  MatchResult out;
  for (uint64_t c = 0; c < n; ++c) {
    bool ab = true;
    for (auto [ex, ey] : exps) {
      int64_t v = (ex + ey * (int64_t)c) % (int64_t)n;
      if (v < 0) v += (int64_t)n;
      if (v != 0) ab = false;
    }
    if (ab) out.abelian_c.push_back(c);
  }

  std::vector<uint64_t> units;
  if (n == 1)
    units.push_back(0);
  else
    for (uint64_t j = 1; j < n; ++j)
      if (std::gcd(j, n) == 1) units.push_back(j);

  AffineMap id = affine_identity(ctx);
  for (uint64_t c = 0; c < n; ++c) {
    for (uint64_t j : units) {
      AffineMap x{ctx.pow(x0, (int64_t)j), ctx.zero()};
      AffineMap y{ctx.pow(x0, (int64_t)(j * c % n)), ctx.one()};
      bool all_id = true;
      for (const auto& w : words) {
        AffineMap acc = id;
        for (char ch : w) {
          switch (ch) {
            case 'x': acc = compose(ctx, acc, x); break;
            case 'X': acc = compose(ctx, acc, inverse(ctx, x)); break;
            case 'y': acc = compose(ctx, acc, y); break;
            case 'Y': acc = compose(ctx, acc, inverse(ctx, y)); break;
            default: throw internal_error("unexpanded relator token");
          }
        }
        if (!(acc == id)) {
          all_id = false;
          break;
        }
      }
      if (all_id) {
        PresentationMatch m{make_params(n, p, c, j), ctx.code(x.a)};
        out.matches.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace gpd
