#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "classify.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "ops.hpp"

using namespace gpd;

TEST_CASE("primitivity by block closure") {
  // C_6 acting regularly on 6 points is imprimitive
  std::vector<uint32_t> rot6{1, 2, 3, 4, 5, 0};
  CHECK_FALSE(is_primitive({rot6}, 6));
  // C_5 regular is primitive
  std::vector<uint32_t> rot5{1, 2, 3, 4, 0};
  CHECK(is_primitive({rot5}, 5));
  // a point is not a primitive action here (Example 1: m prime needed)
  CHECK_FALSE(is_primitive({{0u}}, 1));
  // transposition on 2 points
  CHECK(is_primitive({{1u, 0u}}, 2));
  // intransitive
  CHECK_FALSE(is_primitive({{1u, 0u, 2u}}, 3));
}

TEST_CASE("Fermat dessins: transitive, not faithful, primitive iff n prime") {
  for (uint64_t n = 2; n <= 9; ++n) {
    BlackActionReport r = analyze_black_action(build_fermat(n));
    CAPTURE(n);
    CHECK(r.black_count == n);
    CHECK(r.transitive);
    CHECK_FALSE(r.faithful);
    CHECK(r.primitive == is_prime(n));
    CHECK(r.kernel_order == n);
    CHECK(r.kernel_cyclic);
    CHECK(r.kernel_central);  // G is abelian
    if (is_prime(n)) CHECK(r.quotient_kind == QuotientKind::regular_prime_degree);
  }
}

TEST_CASE("quaternion dessin: the black action has kernel <x> of order 4") {
  RegularDessin q = build_quaternion();
  BlackActionReport r = analyze_black_action(q);
  CHECK(r.black_count == 2);
  CHECK(r.primitive);
  CHECK_FALSE(r.faithful);
  CHECK(r.kernel_order == 4);
  CHECK(r.kernel_cyclic);
  CHECK_FALSE(r.kernel_central);  // <i> is not central in Q_8
  CHECK(r.quotient_kind == QuotientKind::regular_prime_degree);

  // the paper's order-2 kernel is the intersection of the black, white and
  // face kernels: the centre G' = {1,-1}, and Q/G' is the Fermat dessin F_2
  auto kernel_edges = [](const RegularDessin& d) {
    CycleData cyc = cycle_data(d.s0);
    std::set<uint32_t> k;
    for (uint32_t e = 0; e < d.edges; ++e) {
      std::vector<uint32_t> lam = left_action(d, e);
      bool fixes = true;
      for (uint32_t t = 0; t < d.edges && fixes; ++t)
        fixes = cyc.id[lam[t]] == cyc.id[t];
      if (fixes) k.insert(e);
    }
    return k;
  };
  std::set<uint32_t> black = kernel_edges(q);
  std::set<uint32_t> white = kernel_edges(apply_omega(*omega_op_from_name("d01"), q));
  std::set<uint32_t> face = kernel_edges(apply_omega(*omega_op_from_name("d02"), q));
  std::set<uint32_t> inter;
  for (uint32_t e : black)
    if (white.count(e) && face.count(e)) inter.insert(e);
  CHECK(inter == std::set<uint32_t>{0, 1});  // 1 and -1
  CHECK(is_isomorphic(quotient(q, {0, 1}), build_fermat(2)));
}

TEST_CASE("generalised Paley dessins are primitive and faithful") {
  for (const PaleyParams& P : {make_params(6, 13, 3, 1), make_params(7, 2, 4, 1),
                               make_params(3, 5, 1, 1), make_params(2, 11, 0, 1)}) {
    BlackActionReport r = analyze_black_action(construct(P));
    CHECK(r.primitive);
    CHECK(r.faithful);
    CHECK(r.kernel_order == 1);
    CHECK(r.black_count == P.q);
    if (P.n > 1) CHECK(r.quotient_kind == QuotientKind::frobenius);
  }
}

TEST_CASE("recognition round trips") {
  for (const PaleyParams& P : {make_params(6, 13, 3, 1), make_params(6, 13, 3, 5),
                               make_params(7, 29, 6, 2), make_params(8, 3, 4, 1),
                               make_params(3, 2, 1, 1), make_params(2, 7, 1, 1)}) {
    RecognitionResult res = recognize_paley(construct(P));
    REQUIRE(res.params.has_value());
    CHECK(*res.params == canonicalize(P));
  }
}

TEST_CASE("star dessins recognize as GP(1,p,0) exactly for prime p") {
  RecognitionResult st7 = recognize_paley(build_star(7));
  REQUIRE(st7.params.has_value());
  CHECK(st7.params->n == 1);
  CHECK(st7.params->p == 7);
  CHECK(st7.report.regular_on_black);

  RecognitionResult st6 = recognize_paley(build_star(6));
  CHECK_FALSE(st6.params.has_value());
  CHECK_FALSE(st6.report.primitive);
  CHECK(st6.diagnosis == "not primitive");
}

TEST_CASE("non-faithful and imprimitive dessins are refused with a report") {
  RecognitionResult f5 = recognize_paley(build_fermat(5));
  CHECK_FALSE(f5.params.has_value());
  CHECK(f5.report.primitive);
  CHECK(f5.diagnosis == "not faithful");

  RecognitionResult f6 = recognize_paley(build_fermat(6));
  CHECK_FALSE(f6.params.has_value());
  CHECK_FALSE(f6.report.primitive);

  // Example 14: regular prime degree with a non-central cyclic kernel
  for (auto [n, p, r] : std::vector<std::array<int64_t, 3>>{{5, 2, 4}, {7, 3, 2}, {9, 3, 4}}) {
    BlackActionReport rep = analyze_black_action(build_metacyclic(n, p, r));
    CAPTURE(n);
    CHECK(rep.primitive);
    CHECK_FALSE(rep.faithful);
    CHECK(rep.kernel_order == (uint64_t)n);
    CHECK(rep.kernel_cyclic);
    CHECK_FALSE(rep.kernel_central);
    CHECK(rep.quotient_kind == QuotientKind::regular_prime_degree);
  }

  // covers are primitive but never faithful, with central cyclic kernel
  CoverResult cov = cyclic_cover(make_params(2, 7, 0, 1), 3, 0);
  BlackActionReport rep = analyze_black_action(cov.dessin);
  CHECK(rep.primitive);
  CHECK_FALSE(rep.faithful);
  CHECK(rep.kernel_order == 3);
  CHECK(rep.kernel_cyclic);
  CHECK(rep.kernel_central);
  CHECK(rep.quotient_kind == QuotientKind::frobenius);
  CHECK_FALSE(recognize_paley(cov.dessin).params.has_value());
}

TEST_CASE("regularity gate for raw input") {
  // <(0 1), (1 2)> = S_3 on three edges is transitive but not regular
  PermDessin bad{3, {1, 0, 2}, {0, 2, 1}};
  CHECK_THROWS_AS(regular_from_perm(bad), domain_error);

  RegularDessin d = construct(make_params(3, 5, 1, 1));
  PermDessin good{d.edges, d.s0, d.s1};
  RecognitionResult res = recognize_paley(good);
  REQUIRE(res.params.has_value());
  CHECK(*res.params == make_params(3, 5, 1, 1));
}

TEST_CASE("relator parsing") {
  std::istringstream is("XYxxyy\nzZ \n\nxyz\n");
  Presentation p = parse_relators(is);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == "XYxxyy");
  CHECK(p.relators[1] == "zZ");
  std::istringstream bad("xyw\n");
  CHECK_THROWS_AS(parse_relators(bad), domain_error);
}

TEST_CASE("xyz and zZ are identities in every candidate") {
  Presentation pres;
  pres.relators = {"xyz", "zZ"};
  MatchResult res = match_presentation(7, 29, pres);
  CHECK(res.matches.size() == 42);  // all candidates: n phi(n) concrete pairs
}

TEST_CASE("empty presentations match everything") {
  MatchResult res = match_presentation(3, 7, Presentation{});
  CHECK(res.matches.size() == 3 * 2);
  CHECK(res.abelian_c == std::vector<uint64_t>{0, 1, 2});
}

TEST_CASE("census matching for CH70.8") {
  Presentation pres;
  pres.relators = {"XYxxyy", "XXXXXXX", "YXyxxyXY"};
  MatchResult res = match_presentation(7, 29, pres);
  CHECK(res.abelian_c == std::vector<uint64_t>{6});
  REQUIRE(res.matches.size() == 1);
  CHECK(res.matches[0].params.c == 6);
  CHECK(res.matches[0].multiplier_code == 24);  // r = -5
  // x has order dividing 7 in every match, given the relator x^-7
  CHECK(res.matches[0].params.n == 7);
}

TEST_CASE("census matching is mirror sensitive") {
  // the mirror candidate (multiplier -6 = 23) must not satisfy CH70.8
  Presentation pres;
  pres.relators = {"XYxxyy", "XXXXXXX", "YXyxxyXY"};
  MatchResult res = match_presentation(7, 29, pres);
  for (const PresentationMatch& m : res.matches) CHECK(m.multiplier_code != 23);
}
