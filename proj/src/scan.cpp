#include "scan.hpp"

#include <numeric>

#include "affine.hpp"
#include "classify.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "ops.hpp"

namespace gpd {

namespace {

// One parallel kernel and one serial reference loop; results land in
// pre-sized slots, so ordering is deterministic either way.
template <typename Fn>
void run_indexed(size_t count, bool parallel, const Fn& fn) {
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)count; ++i) fn((size_t)i);
  } else {
    for (size_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace

std::vector<NPFamily> np_families(uint64_t max_nq) {
  std::vector<NPFamily> out;
  for (uint64_t n = 1; n <= max_nq; ++n) {
    for (uint64_t p = 2; n * p <= max_nq; ++p) {
      if (!is_prime(p) || (n > 1 && std::gcd(p, n) != 1)) continue;
      uint64_t d = n == 1 ? 1 : mul_order(p, n);
      uint64_t q = 1;
      bool fits = true;
      for (uint64_t i = 0; i < d; ++i) {
        if (q > max_nq / p) {
          fits = false;
          break;
        }
        q *= p;
      }
      if (fits && n * q <= max_nq) out.push_back({n, p, d, q});
    }
  }
  return out;
}

std::vector<ChiralityCheck> chirality_scan(uint64_t max_nq, bool parallel) {
  std::vector<PaleyParams> all;
  for (const NPFamily& f : np_families(max_nq)) {
    auto classes = enumerate(f.n, f.p);
    all.insert(all.end(), classes.begin(), classes.end());
  }
  std::vector<ChiralityCheck> out(all.size());
  run_indexed(all.size(), parallel, [&](size_t i) {
    const PaleyParams& P = all[i];
    RegularDessin d = construct(P);
    RegularDessin md = construct(mirror(P));
    out[i] = {P, is_real(P.n, P.p), is_isomorphic(d, md)};
  });
  return out;
}

std::vector<InvarianceCheck> invariance_scan(uint64_t max_nq, bool parallel) {
  struct Task {
    uint64_t n, p, c;
  };
  std::vector<Task> tasks;
  for (const NPFamily& f : np_families(max_nq))
    for (uint64_t c = 0; c < f.n; ++c) tasks.push_back({f.n, f.p, c});
  std::vector<InvarianceCheck> out(tasks.size());
  run_indexed(tasks.size(), parallel, [&](size_t i) {
    auto [n, p, c] = tasks[i];
    InvarianceCheck chk;
    chk.n = n;
    chk.p = p;
    chk.c = c;
    InvarianceTable t = invariance_table(n, p, c);
    chk.table = t.op_invariant;
    chk.kaleidoscopic = t.kaleidoscopic;
    PaleyParams P = enumerate(n, p, c).front();
    RegularDessin base = construct(P);
    for (uint32_t k = 0; k < 12; ++k)
      chk.brute[k] = is_isomorphic(apply_omega(all_omega_ops()[k], base), base);
    out[i] = chk;
  });
  return out;
}

std::vector<RecognitionCheck> recognition_scan(uint64_t max_nq, bool parallel) {
  std::vector<PaleyParams> all;
  for (const NPFamily& f : np_families(max_nq)) {
    auto classes = enumerate(f.n, f.p);
    all.insert(all.end(), classes.begin(), classes.end());
  }
  std::vector<RecognitionCheck> out(all.size());
  run_indexed(all.size(), parallel, [&](size_t i) {
    const PaleyParams& P = all[i];
    RecognitionResult r = recognize_paley(construct(P));
    out[i] = {P, r.report.primitive, r.report.faithful,
              r.params.has_value() && *r.params == P};
  });
  return out;
}

std::vector<QuotientCheck> quotient_scan(uint64_t max_nq, bool parallel) {
  struct Task {
    uint64_t n, p, c;
  };
  std::vector<Task> tasks;
  for (const NPFamily& f : np_families(max_nq))
    for (uint64_t c = 0; c < f.n; ++c) tasks.push_back({f.n, f.p, c});
  std::vector<QuotientCheck> out(tasks.size());
  run_indexed(tasks.size(), parallel, [&](size_t i) {
    auto [n, p, c] = tasks[i];
    PaleyParams P = enumerate(n, p, c).front();
    RegularDessin qd = quotient_by_translations(P);
    out[i] = {n, p, c, quotient_genus(n, c), qd.genus};
  });
  return out;
}

std::vector<TypeGenusCheck> type_genus_scan(uint64_t max_nq, bool parallel) {
  struct Task {
    uint64_t n, p, c;
  };
  std::vector<Task> tasks;
  for (const NPFamily& f : np_families(max_nq))
    for (uint64_t c = 0; c < f.n; ++c) tasks.push_back({f.n, f.p, c});
  std::vector<TypeGenusCheck> out(tasks.size());
  run_indexed(tasks.size(), parallel, [&](size_t i) {
    auto [n, p, c] = tasks[i];
    TypeGenus tg = type_genus(n, p, c);
    PaleyParams P = enumerate(n, p, c).front();
    RegularDessin d = construct(P);
    auto [chi, genus] = euler_and_genus(d);
    out[i] = {n, p, c,
              tg.type == d.type && tg.chi == chi && tg.genus == genus && d.chi == chi};
  });
  return out;
}

PairCensus pair_census(uint64_t n, uint64_t p) {
  uint64_t d = order_mod(p, n);
  FieldCtx ctx(p, d);
  AffineGroup g(ctx, n);
  uint64_t q = ctx.q();
  if (n * q > 600) throw size_limit_error("pair_census: nq exceeds the oracle bound");

  PairCensus census{n, p, 0, std::vector<uint64_t>(n, 0)};
  std::vector<RegularDessin> reps;
  std::vector<uint64_t> rep_c;
  // x up to conjugacy: (x0^j, 0) for each unit j; conjugate pairs give
  // isomorphic dessins via edge relabeling
  for (uint64_t j = (n == 1 ? 0 : 1); j < std::max<uint64_t>(n, 1); ++j) {
    if (n > 1 && std::gcd(j, n) != 1) continue;
    uint64_t x_idx = g.power_index(j);
    for (uint64_t y_idx = 0; y_idx < g.size(); ++y_idx) {
      RegularDessin dessin;
      try {
        dessin = from_triple(
            g.size(), [&g](uint64_t a, uint64_t b) { return g.mul(a, b); }, x_idx, y_idx);
      } catch (const domain_error&) {
        continue;  // <x, y> proper
      }
      // colour constant: multiplier of y as a power of the multiplier of x
      uint64_t s_y = y_idx / q;
      uint64_t c = n == 1 ? 0 : s_y * inv_mod(j, n) % n;
      bool found = false;
      for (size_t r = 0; r < reps.size(); ++r) {
        if (rep_c[r] == c && is_isomorphic(reps[r], dessin)) {
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(std::move(dessin));
        rep_c.push_back(c);
        ++census.classes;
        ++census.classes_per_c[c];
      }
    }
    if (n <= 1) break;
  }
  return census;
}

}  // namespace gpd
