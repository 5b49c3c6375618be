#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "errors.hpp"
#include "numeric.hpp"
#include "ops.hpp"
#include "scan.hpp"

using namespace gpd;

TEST_CASE("omega star is S3 x C2") {
  const auto& ops = all_omega_ops();
  CHECK(ops.size() == 12);
  std::set<std::pair<std::array<uint8_t, 3>, bool>> uniq;
  for (const auto& op : ops) uniq.insert({op.pi, op.mirrored});
  CHECK(uniq.size() == 12);

  // closure and the group law
  for (const auto& a : ops)
    for (const auto& b : ops) omega_op_index(compose(a, b));
  // identity and involutions
  OmegaStarOp id = ops[0];
  for (const auto& a : ops) {
    CHECK(compose(a, id) == a);
    CHECK(compose(id, a) == a);
  }
  OmegaStarOp d01 = *omega_op_from_name("d01");
  OmegaStarOp d12 = *omega_op_from_name("d12");
  OmegaStarOp m = *omega_op_from_name("m");
  CHECK(compose(d01, d01) == id);
  CHECK(compose(m, m) == id);
  CHECK(compose(d12, d01) == *omega_op_from_name("d210"));
  CHECK(compose(m, d01) == compose(d01, m));  // H_-1 is central
  // trialities have order 3
  OmegaStarOp d012 = *omega_op_from_name("d012");
  CHECK(compose(d012, compose(d012, d012)) == id);
}

TEST_CASE("identity and mirror act as expected") {
  RegularDessin d = construct(make_params(6, 13, 3, 1));
  RegularDessin same = apply_omega(all_omega_ops()[0], d);
  CHECK(same.s0 == d.s0);
  CHECK(same.s1 == d.s1);

  // H_-1 on a dessin is the dessin of the mirrored parameters
  RegularDessin mir = apply_omega(*omega_op_from_name("m"), d);
  CHECK(is_isomorphic(mir, construct(mirror(make_params(6, 13, 3, 1)))));
  CHECK_FALSE(is_isomorphic(mir, d));  // Example 6 is chiral
}

TEST_CASE("operations permute the type") {
  RegularDessin d = construct(make_params(6, 13, 3, 1));  // type (6,2,3)
  CHECK(apply_omega(*omega_op_from_name("d01"), d).type == std::array<uint64_t, 3>{2, 6, 3});
  CHECK(apply_omega(*omega_op_from_name("d12"), d).type == std::array<uint64_t, 3>{6, 3, 2});
  CHECK(apply_omega(*omega_op_from_name("d02"), d).type == std::array<uint64_t, 3>{3, 2, 6});
}

TEST_CASE("composition is respected up to isomorphism") {
  RegularDessin d = construct(make_params(3, 2, 1, 1));
  for (const auto& a : all_omega_ops())
    for (const auto& b : all_omega_ops()) {
      RegularDessin lhs = apply_omega(b, apply_omega(a, d));
      RegularDessin rhs = apply_omega(compose(a, b), d);
      CHECK(is_isomorphic(lhs, rhs));
    }
  // and on a chiral dessin, where mirrors matter
  RegularDessin c = construct(make_params(7, 2, 1, 1));
  for (const auto& a : all_omega_ops())
    for (const auto& b : all_omega_ops())
      CHECK(is_isomorphic(apply_omega(b, apply_omega(a, c)), apply_omega(compose(a, b), c)));
}

TEST_CASE("D^12 lands at 1 + c + c' = 0") {
  // D^12 on GP(7,p,2) is isomorphic to the dessin with c = 4
  for (uint64_t p : {2, 29}) {
    PaleyParams P = make_params(7, p, 2, 1);
    auto image = op_on_params(*omega_op_from_name("d12"), P);
    REQUIRE(image.has_value());
    CHECK(image->c == 4);
    CHECK(is_isomorphic(apply_omega(*omega_op_from_name("d12"), construct(P)),
                        construct(*image)));
  }
}

TEST_CASE("parameter-level action agrees with the dessin-level action") {
  for (const PaleyParams& P :
       {make_params(7, 29, 6, 1), make_params(6, 13, 3, 1), make_params(8, 3, 2, 1),
        make_params(5, 11, 0, 1), make_params(1, 7, 0, 0)}) {
    RegularDessin base = construct(P);
    for (const auto& op : all_omega_ops()) {
      RegularDessin image = apply_omega(op, base);
      auto params = op_on_params(op, P);
      if (params) {
        CHECK(is_isomorphic(image, construct(*params)));
      } else {
        // the image left the family: no parameter set of the same (n, p)
        // can match, because its black valency is not n
        CHECK(image.type[0] != P.n);
      }
    }
  }
}

TEST_CASE("hole operations") {
  PaleyParams P = make_params(7, 29, 3, 1);
  CHECK(apply_hole(P, 1) == canonicalize(P));
  CHECK(apply_hole(P, 29 % 7) == canonicalize(P));  // H_p is the stabiliser
  CHECK_THROWS_AS(apply_hole(make_params(8, 3, 1, 1), 2), domain_error);

  // the hole orbit of any parameter set is the whole of GP(n,p,c)
  for (const PaleyParams& Q : {make_params(7, 29, 3, 1), make_params(8, 3, 1, 1),
                               make_params(12, 13, 5, 1)}) {
    std::set<uint64_t> orbit;
    for (uint64_t j = 1; j < Q.n; ++j) {
      if (std::gcd(j, Q.n) != 1) continue;
      orbit.insert(apply_hole(Q, j).j);
    }
    auto expect = enumerate(Q.n, Q.p, Q.c);
    std::set<uint64_t> all;
    for (const PaleyParams& E : expect) all.insert(E.j);
    CHECK(orbit == all);
    CHECK(orbit.size() == euler_phi(Q.n) / Q.d);
  }
}

TEST_CASE("invariance tables on the worked cases") {
  // (7,p,3): D = D^12, nothing else without reality
  InvarianceTable t = invariance_table(7, 29, 3);
  CHECK(t.op_invariant[3]);        // d12
  CHECK_FALSE(t.op_invariant[9]);  // md12 needs -1 in <p>
  CHECK_FALSE(t.op_invariant[1]);
  CHECK_FALSE(t.hole_invariant);

  // with p = 3 mod 7 the family is real, so md12 joins in
  InvarianceTable r = invariance_table(7, 3, 3);
  CHECK(r.op_invariant[3]);
  CHECK(r.op_invariant[6]);  // m
  CHECK(r.op_invariant[9]);  // md12

  // (3,2,1): everything, and kaleidoscopic
  InvarianceTable k = invariance_table(3, 2, 1);
  for (bool b : k.op_invariant) CHECK(b);
  CHECK(k.hole_invariant);
  CHECK(k.kaleidoscopic);

  // (6,7,3): only the identity
  InvarianceTable o = invariance_table(6, 7, 3);
  CHECK(o.op_invariant[0]);
  for (int i = 1; i < 12; ++i) CHECK_FALSE(o.op_invariant[i]);
  CHECK_FALSE(o.kaleidoscopic);

  // star dessins are fixed by exactly id, d12 and their mirrors
  InvarianceTable s = invariance_table(1, 7, 0);
  CHECK(s.op_invariant[0]);
  CHECK(s.op_invariant[3]);
  CHECK(s.op_invariant[6]);
  CHECK(s.op_invariant[9]);
  CHECK_FALSE(s.op_invariant[1]);
  CHECK_FALSE(s.kaleidoscopic);
}

TEST_CASE("closed-form invariance equals brute force, nq <= 700") {
  for (const InvarianceCheck& chk : invariance_scan(700, true)) {
    CAPTURE(chk.n);
    CAPTURE(chk.p);
    CAPTURE(chk.c);
    for (int i = 0; i < 12; ++i) {
      CAPTURE(i);
      CHECK(chk.table[i] == chk.brute[i]);
    }
  }
}

TEST_CASE("orbit lengths from the census calculations") {
  OmegaOrbits a = omega_orbits(make_params(7, 29, 5, 1));
  CHECK(a.k_star == 2);
  CHECK(a.omega_star_length == 6);
  CHECK(a.omega_length == 6 / a.k);

  OmegaOrbits b = omega_orbits(make_params(7, 29, 2, 1));
  CHECK(b.k_star == 1);
  CHECK(b.omega_star_length == 12);

  OmegaOrbits c = omega_orbits(make_params(3, 2, 1, 1));
  CHECK(c.k_star == 12);
  CHECK(c.omega_star_length == 1);

  // CH70.8 and friends: c = 6 gives k* = 2 and non-GP duals in the orbit
  OmegaOrbits d = omega_orbits(make_params(7, 29, 6, 1));
  CHECK(d.omega_star_length == 6);
  bool has_non_gp = false;
  for (const OrbitMember& m : d.members)
    if (!m.gp) {
      has_non_gp = true;
      CHECK(m.type == std::array<uint64_t, 3>{29, 7, 7});
    }
  CHECK(has_non_gp);
}

TEST_CASE("orbit length arithmetic") {
  for (const PaleyParams& P :
       {make_params(7, 29, 0, 1), make_params(7, 29, 1, 1), make_params(6, 13, 3, 1),
        make_params(8, 3, 4, 1), make_params(3, 5, 1, 1), make_params(2, 7, 0, 1),
        make_params(1, 5, 0, 0)}) {
    OmegaOrbits orb = omega_orbits(P);
    CHECK(6 % orb.k == 0);
    CHECK(12 % orb.k_star == 0);
    CHECK(orb.omega_length == 6 / orb.k);
    CHECK(orb.omega_star_length == 12 / orb.k_star);
    CHECK((orb.omega_star_length == orb.omega_length ||
           orb.omega_star_length == 2 * orb.omega_length));
  }
}
