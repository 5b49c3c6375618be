#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dessin.hpp"
#include "errors.hpp"
#include "paley.hpp"

using namespace gpd;

namespace {

// pool of fixtures used by several property tests
std::vector<RegularDessin> fixture_pool() {
  std::vector<RegularDessin> pool;
  for (uint64_t m : {1, 2, 3, 5, 6, 7, 8}) pool.push_back(build_star(m));
  for (uint64_t n : {2, 3, 4, 5}) pool.push_back(build_fermat(n));
  pool.push_back(build_quaternion());
  pool.push_back(build_p3(3));
  pool.push_back(build_metacyclic(5, 2, -1));
  pool.push_back(build_metacyclic(7, 3, 2));
  pool.push_back(construct(make_params(6, 13, 3, 1)));
  pool.push_back(construct(make_params(6, 13, 3, 5)));
  pool.push_back(construct(make_params(3, 5, 0, 1)));
  pool.push_back(construct(make_params(3, 5, 1, 1)));
  pool.push_back(construct(make_params(3, 5, 2, 1)));
  pool.push_back(construct(make_params(2, 7, 0, 1)));
  pool.push_back(construct(make_params(2, 7, 1, 1)));
  pool.push_back(construct(make_params(7, 2, 3, 1)));
  return pool;
}

int64_t closed_form_chi(const RegularDessin& d) {
  int64_t g = d.edges;
  return g / (int64_t)d.type[0] + g / (int64_t)d.type[1] + g / (int64_t)d.type[2] - g;
}

}  // namespace

TEST_CASE("star dessins") {
  RegularDessin st5 = build_star(5);
  CHECK(st5.edges == 5);
  CHECK(st5.type == std::array<uint64_t, 3>{1, 5, 5});
  CHECK(cycle_data(st5.s0).count == 5);  // five black vertices of valency 1
  CHECK(cycle_data(st5.s1).count == 1);  // one white vertex
  CHECK(st5.genus == 0);

  RegularDessin st1 = build_star(1);
  CHECK(st1.type == std::array<uint64_t, 3>{1, 1, 1});
  CHECK(st1.genus == 0);
}

TEST_CASE("degenerate triple: cyclic group with y = 1 gives the star dual") {
  uint64_t m = 6;
  auto mul = [m](uint64_t a, uint64_t b) { return (a + b) % m; };
  RegularDessin d = from_triple(m, mul, 1, 0);
  CHECK(d.type == std::array<uint64_t, 3>{6, 1, 6});
  CHECK(cycle_data(d.s1).count == 6);  // valency-1 white vertices
  CHECK(d.genus == 0);
}

TEST_CASE("from_triple rejects proper subgroups") {
  auto mul = [](uint64_t a, uint64_t b) { return (a + b) % 4; };
  CHECK_THROWS_AS(from_triple(4, mul, 2, 0), domain_error);
}

TEST_CASE("fermat dessins") {
  for (uint64_t n = 2; n <= 8; ++n) {
    RegularDessin f = build_fermat(n);
    CHECK(f.edges == n * n);
    CHECK(f.type == std::array<uint64_t, 3>{n, n, n});
    CHECK(f.genus == (int64_t)((n - 1) * (n - 2) / 2));
  }
  CHECK(build_fermat(4).genus == 3);
}

TEST_CASE("quaternion dessin RPH2.4") {
  RegularDessin q = build_quaternion();
  CHECK(q.edges == 8);
  CHECK(q.type == std::array<uint64_t, 3>{4, 4, 4});
  CHECK(q.genus == 2);
  CHECK(cycle_data(q.s0).count == 2);
  CHECK(cycle_data(q.s1).count == 2);
  CHECK(cycle_data(q.s2).count == 2);
}

TEST_CASE("p^3 dessins") {
  RegularDessin d3 = build_p3(3);
  CHECK(d3.edges == 27);
  CHECK(d3.type == std::array<uint64_t, 3>{9, 9, 9});
  CHECK(d3.genus == 10);  // (p-1)^2 (p+2) / 2, RPH10.32
  RegularDessin d5 = build_p3(5);
  CHECK(d5.type == std::array<uint64_t, 3>{25, 25, 25});
  CHECK(d5.genus == 56);  // RPH56.70
  CHECK_THROWS_AS(build_p3(2), domain_error);
  CHECK_THROWS_AS(build_p3(9), domain_error);
}

TEST_CASE("metacyclic dessins and hosohedra") {
  for (uint64_t n : {3, 5, 8}) {
    RegularDessin h = build_metacyclic(n, 2, -1);
    CHECK(h.type == std::array<uint64_t, 3>{n, 2, 2});
    CHECK(h.genus == 0);  // the n-valent hosohedron
  }
  RegularDessin m = build_metacyclic(7, 3, 2);
  CHECK(m.edges == 21);
  CHECK(m.type[0] == 7);
  CHECK(m.type[1] == 3);
  CHECK(build_metacyclic(12, 2, 5).edges == 24);              // ord(5) = 2 mod 12
  CHECK_THROWS_AS(build_metacyclic(7, 3, 1), domain_error);   // order 1, not 3
  CHECK_THROWS_AS(build_metacyclic(12, 3, 5), domain_error);  // ord(5) = 2, not 3
}

TEST_CASE("triple product and uniform cycles on the pool") {
  for (const RegularDessin& d : fixture_pool()) {
    for (uint32_t e = 0; e < d.edges; ++e) CHECK(d.s2[d.s1[d.s0[e]]] == e);
    for (int i = 0; i < 3; ++i) {
      const auto& s = i == 0 ? d.s0 : i == 1 ? d.s1 : d.s2;
      CycleData cd = cycle_data(s);
      CHECK(cd.length == d.type[i]);
    }
    auto [chi, genus] = euler_and_genus(d);
    CHECK(chi == d.chi);
    CHECK(genus == d.genus);
    CHECK(chi == closed_form_chi(d));
  }
}

TEST_CASE("isomorphism is an equivalence relation on the pool") {
  auto pool = fixture_pool();
  size_t n = pool.size();
  CHECK(n >= 20);
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) iso[i][j] = is_isomorphic(pool[i], pool[j]);
  for (size_t i = 0; i < n; ++i) {
    CHECK(iso[i][i]);  // reflexive
    for (size_t j = 0; j < n; ++j) {
      CHECK(iso[i][j] == iso[j][i]);  // symmetric
      for (size_t k = 0; k < n; ++k)
        if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);  // transitive
    }
  }
}

TEST_CASE("the two Example 6 dessins are chiral partners, not isomorphic") {
  RegularDessin a = construct(make_params(6, 13, 3, 1));
  RegularDessin b = construct(make_params(6, 13, 3, 5));
  CHECK_FALSE(is_isomorphic(a, b));
}

TEST_CASE("GP(3,5,0) and GP(3,5,2) differ already by type") {
  RegularDessin a = construct(make_params(3, 5, 0, 1));
  RegularDessin b = construct(make_params(3, 5, 2, 1));
  CHECK(a.type == std::array<uint64_t, 3>{3, 5, 3});
  CHECK(b.type == std::array<uint64_t, 3>{3, 3, 5});
  CHECK_FALSE(is_isomorphic(a, b));
}

TEST_CASE("quotients") {
  RegularDessin q8 = build_quaternion();
  // by the whole group
  std::vector<uint32_t> all(q8.edges);
  for (uint32_t e = 0; e < q8.edges; ++e) all[e] = e;
  RegularDessin triv = quotient(q8, all);
  CHECK(triv.edges == 1);
  CHECK(triv.type == std::array<uint64_t, 3>{1, 1, 1});
  CHECK(triv.genus == 0);

  // by the identity
  RegularDessin same = quotient(q8, {0});
  CHECK(is_isomorphic(same, q8));

  // by the centre {1, -1}: the Fermat dessin F_2 on the sphere
  RegularDessin f2 = quotient(q8, {0, 1});
  CHECK(is_isomorphic(f2, build_fermat(2)));

  // non-normal subgroups are rejected: <b> in the metacyclic group
  RegularDessin mc = build_metacyclic(5, 2, -1);
  // edges of <y>: identity and y (indices 0 and 1 in the (i,j) -> i*p+j order)
  CHECK_THROWS_AS(quotient(mc, {0, 1}), domain_error);
  // non-subgroup edge sets are rejected
  CHECK_THROWS_AS(quotient(q8, {0, 2}), domain_error);
}

TEST_CASE("quotient of GP(6,p,1) by translations has genus 2") {
  RegularDessin qd = quotient_by_translations(make_params(6, 7, 1, 1));
  CHECK(qd.genus == 2);
  CHECK(qd.edges == 6);
}

TEST_CASE("serialization round trip and rejection") {
  RegularDessin d = construct(make_params(6, 13, 3, 1));
  std::ostringstream os;
  write_dessin(os, d.edges, d.s0, d.s1);
  std::istringstream is(os.str());
  PermDessin pd = read_dessin(is);
  CHECK(pd.edges == d.edges);
  CHECK(pd.s0 == d.s0);
  CHECK(pd.s1 == d.s1);

  std::istringstream bad("edges 3\ns0 0 0 2\ns1 1 2 0\n");
  CHECK_THROWS_AS(read_dessin(bad), domain_error);
  std::istringstream trunc("edges 3\ns0 0 1\n");
  CHECK_THROWS_AS(read_dessin(trunc), domain_error);
}

TEST_CASE("format layout is exact") {
  RegularDessin d = build_star(2);
  std::ostringstream os;
  write_dessin(os, d.edges, d.s0, d.s1);
  CHECK(os.str() == "edges 2\ns0 0 1\ns1 1 0\n");
}
