#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ttk/errors.hpp"
#include "ttk/fixtures.hpp"
#include "ttk/gpd.hpp"

using namespace ttk;
using namespace ttk::gpd;

TEST_CASE("gf1 tables validate and compose as listed") {
  Groupoid G = fixtures::gf1();
  CHECK(G.check().ok());
  CHECK(G.n_objects() == 2);
  CHECK(G.n_morphisms() == 4);
  CHECK(G.n_components() == 1);

  auto m = [&](char const* id) { return G.mor_index(id); };
  CHECK(G.compose(m("g"), m("f")) == m("idx"));
  CHECK(G.compose(m("f"), m("g")) == m("idy"));
  CHECK(G.compose(m("idy"), m("f")) == m("f"));
  CHECK_THROWS_AS(G.compose(m("f"), m("f")), Error);
  CHECK_THROWS_AS(G.mor_index("h"), Error);
  CHECK_THROWS_AS(G.object_index("z"), Error);
}

TEST_CASE("one object cyclic group forces the group law") {
  Groupoid Z2 = fixtures::cyclic_groupoid(2, "e");
  CHECK(Z2.check().ok());
  CHECK(Z2.compose(Z2.mor_index("e1"), Z2.mor_index("e1"))
        == Z2.mor_index("e0"));
}

TEST_CASE("malformed tables are rejected eagerly") {
  auto d = fixtures::gf1().data();

  SUBCASE("missing composite") {
    d.compose.pop_back();
    CHECK_THROWS_AS(Groupoid(std::move(d)), Error);
  }
  SUBCASE("composite on non-composable pair") {
    d.compose.push_back({"f", "f", "idx"});
    CHECK_THROWS_AS(Groupoid(std::move(d)), Error);
  }
  SUBCASE("duplicate morphism id") {
    d.morphisms.push_back({"f", "x", "y"});
    CHECK_THROWS_AS(Groupoid(std::move(d)), Error);
  }
  SUBCASE("unknown object in morphism") {
    d.morphisms.push_back({"h", "x", "z"});
    CHECK_THROWS_AS(Groupoid(std::move(d)), Error);
  }
  SUBCASE("missing inverse") {
    d.inverse.pop_back();
    CHECK_THROWS_AS(Groupoid(std::move(d)), Error);
  }
}

TEST_CASE("law violations appear as report clauses") {
  SUBCASE("wrong composite target breaks src_tgt") {
    auto d = fixtures::gf1().data();
    for (auto& row : d.compose) {
      if (row[0] == "g" && row[1] == "f") {
        row[2] = "idy";
      }
    }
    auto rep = Groupoid(std::move(d)).check();
    CHECK(rep.has_clause("groupoid.src_tgt"));
  }
  SUBCASE("wrong composite in a group breaks associativity") {
    auto d = fixtures::cyclic_groupoid(4, "e").data();
    for (auto& row : d.compose) {
      if (row[0] == "e1" && row[1] == "e1") {
        row[2] = "e3";
      }
    }
    auto rep = Groupoid(std::move(d)).check();
    CHECK(rep.has_clause("groupoid.assoc"));
  }
  SUBCASE("composite with identity changed breaks unit law") {
    auto d = fixtures::cyclic_groupoid(3, "e").data();
    for (auto& row : d.compose) {
      if (row[0] == "e0" && row[1] == "e1") {
        row[2] = "e2";
      }
    }
    auto rep = Groupoid(std::move(d)).check();
    CHECK(rep.has_clause("groupoid.unit"));
  }
  SUBCASE("swapped inverse breaks inverse law") {
    auto d = fixtures::cyclic_groupoid(4, "e").data();
    for (auto& row : d.inverse) {
      if (row[0] == "e1") {
        row[1] = "e2";
      }
    }
    auto rep = Groupoid(std::move(d)).check();
    CHECK(rep.has_clause("groupoid.inverse"));
  }
}

TEST_CASE("change of basepoint") {
  Groupoid G = fixtures::gf1();
  auto at_idx = change_of_basepoint(G, "idx");
  CHECK(at_idx == std::map<std::string, std::string>{{"idx", "idx"}});
  auto at_f = change_of_basepoint(G, "f");
  CHECK(at_f == std::map<std::string, std::string>{{"idy", "idx"}});

  Groupoid Z4 = fixtures::cyclic_groupoid(4, "e");
  auto conj = change_of_basepoint(Z4, "e3");
  for (auto const& [a, b] : conj) {
    CHECK(a == b);
  }

  SUBCASE("compatible with composition") {
    Groupoid C = fixtures::connected_cyclic(3);
    auto via_a1 = change_of_basepoint(C, "a1");   // u -> v
    auto via_b2 = change_of_basepoint(C, "b2");   // v -> u
    auto direct = change_of_basepoint(
        C, C.mor_id(C.compose(C.mor_index("b2"), C.mor_index("a1"))));
    for (auto const& [x, y] : direct) {
      CHECK(via_a1.at(via_b2.at(x)) == y);
    }
  }
}

TEST_CASE("skeleton") {
  SUBCASE("skeletal input maps to itself") {
    Groupoid Z4 = fixtures::cyclic_groupoid(4, "e");
    auto sk = skeleton(Z4);
    CHECK(sk.sk.n_objects() == 1);
    CHECK(sk.sk.n_morphisms() == 4);
    CHECK(is_equivalence(sk.inclusion, sk.sk, Z4));
  }
  SUBCASE("gf1 collapses to a point") {
    Groupoid G = fixtures::gf1();
    auto sk = skeleton(G);
    CHECK(sk.sk.n_objects() == 1);
    CHECK(sk.sk.object_id(0) == "x");
    CHECK(sk.sk.n_morphisms() == 1);
    CHECK(is_equivalence(sk.inclusion, sk.sk, G));
  }
  SUBCASE("preferred representative wins over id order") {
    Groupoid C = fixtures::connected_cyclic(2);
    auto sk = skeleton(C, C.object_index("v"));
    CHECK(sk.sk.n_objects() == 1);
    CHECK(sk.sk.object_id(0) == "v");
    CHECK(is_equivalence(sk.inclusion, sk.sk, C));
  }
  SUBCASE("component count matches") {
    Groupoid C = fixtures::connected_cyclic(3);
    CHECK(C.n_components() == 1);
    CHECK(skeleton(C).sk.n_objects() == 1);
  }
}

TEST_CASE("strictly abelian validation") {
  Groupoid C = fixtures::connected_cyclic(3);
  PointedGroupoid P(C, "u");
  CHECK(P.star().size() == 6);  // u_g and b_g

  std::map<std::string, std::map<std::string, std::string>> psi;
  for (unsigned k = 0; k < 3; ++k) {
    psi["u"]["u" + std::to_string(k)] = "u" + std::to_string(k);
    psi["v"]["v" + std::to_string(k)] = "u" + std::to_string(k);
  }
  SUBCASE("canonical psi validates") {
    StrictlyAbelianGroupoid A(P, psi);
    CHECK(A.check().ok());
    CHECK(A.apply_psi(C.object_index("v"), C.mor_index("v2"))
          == C.mor_index("u2"));
    CHECK(A.apply_psi_inv(C.object_index("v"), C.mor_index("u2"))
          == C.mor_index("v2"));
  }
  SUBCASE("twisting one fiber by inversion breaks coherence") {
    psi["v"]["v1"] = "u2";
    psi["v"]["v2"] = "u1";
    StrictlyAbelianGroupoid A(P, psi);
    auto rep = A.check();
    CHECK(rep.has_clause("abelian.psi_coherence"));
    CHECK(!rep.has_clause("abelian.psi_bijective"));
  }
  SUBCASE("non-injective psi is flagged") {
    psi["v"]["v1"] = "u0";
    psi["v"]["v2"] = "u0";
    StrictlyAbelianGroupoid A(P, psi);
    CHECK(A.check().has_clause("abelian.psi_bijective"));
  }
  SUBCASE("bijective non-homomorphism is flagged") {
    psi["v"]["v0"] = "u1";
    psi["v"]["v1"] = "u0";
    StrictlyAbelianGroupoid A(P, psi);
    CHECK(A.check().has_clause("abelian.psi_hom"));
  }
}

TEST_CASE("product groupoid") {
  Groupoid G = fixtures::gf1();
  Groupoid Z2 = fixtures::cyclic_groupoid(2, "e");
  Groupoid P = product(G, Z2);
  CHECK(P.check().ok());
  CHECK(P.n_objects() == 2);
  CHECK(P.n_morphisms() == 8);
  CHECK(P.n_components() == 1);
  auto gxe = P.mor_index(pair_id("g", "e1"));
  auto fxe = P.mor_index(pair_id("f", "e1"));
  CHECK(P.compose(gxe, fxe) == P.mor_index(pair_id("idx", "e0")));
}
