#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ttk/errors.hpp"
#include "ttk/fixtures.hpp"
#include "ttk/ttg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace ttk;
using ttg::GroupTable;
using ttg::TwoTrackGroupoid;

namespace {

template <typename Fn>
std::optional<Err> code_of(Fn&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  return std::nullopt;
}

GroupTable make_cyclic(std::size_t n) {
  GroupTable T;
  for (std::size_t i = 0; i < n; ++i) {
    T.elems.push_back("g" + std::to_string(i));
  }
  T.id_elem = 0;
  T.mul.assign(n, std::vector<std::size_t>(n));
  T.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T.mul[i][j] = (i + j) % n;
    }
    T.inv[i] = (n - i) % n;
  }
  return T;
}

GroupTable s3_table() {
  std::array<int, 3> p = {0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GroupTable T;
  for (auto const& q : perms) {
    T.elems.push_back("s" + std::to_string(q[0]) + std::to_string(q[1]) +
                      std::to_string(q[2]));
  }
  auto find = [&](std::array<int, 3> const& q) -> std::size_t {
    return std::find(perms.begin(), perms.end(), q) - perms.begin();
  };
  T.id_elem = find({0, 1, 2});
  std::size_t n = perms.size();
  T.mul.assign(n, std::vector<std::size_t>(n));
  T.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::array<int, 3> c;
      for (int k = 0; k < 3; ++k) {
        c[k] = perms[i][perms[j][k]];  // i after j
      }
      std::size_t ij = find(c);
      T.mul[i][j] = ij;
      if (ij == T.id_elem) {
        T.inv[i] = j;
      }
    }
  }
  return T;
}

gpd::Groupoid group_groupoid(GroupTable const& T, std::string const& obj) {
  gpd::GroupoidData d;
  d.objects = {obj};
  for (std::size_t i = 0; i < T.order(); ++i) {
    d.morphisms.push_back({T.elems[i], obj, obj});
    d.inverse.push_back({T.elems[i], T.elems[T.inv[i]]});
    for (std::size_t j = 0; j < T.order(); ++j) {
      d.compose.push_back({T.elems[i], T.elems[j], T.elems[T.mul[i][j]]});
    }
  }
  d.identity = {{obj, T.elems[T.id_elem]}};
  return gpd::Groupoid(std::move(d));
}

std::map<std::string, std::string> q_map_of(TwoTrackGroupoid const& G) {
  std::map<std::string, std::string> m;
  for (std::size_t a = 0; a < G.g2.P.G.n_objects(); ++a) {
    m[G.g2.P.G.object_id(a)] = G.g1.G.mor_id(G.q[a]);
  }
  return m;
}

TwoTrackGroupoid with_q(TwoTrackGroupoid const& G,
                        std::map<std::string, std::string> const& changes) {
  auto m = q_map_of(G);
  for (auto const& [k, v] : changes) {
    m[k] = v;
  }
  return TwoTrackGroupoid(G.g1, G.g2, m);
}

ttg::TtgMorphism id_morphism(TwoTrackGroupoid const& G) {
  ttg::TtgMorphism F;
  for (std::size_t x = 0; x < G.g1.G.n_objects(); ++x) {
    F.f1.on_objects[G.g1.G.object_id(x)] = G.g1.G.object_id(x);
  }
  for (std::size_t m = 0; m < G.g1.G.n_morphisms(); ++m) {
    F.f1.on_morphisms[G.g1.G.mor_id(m)] = G.g1.G.mor_id(m);
  }
  for (std::size_t x = 0; x < G.g2.P.G.n_objects(); ++x) {
    F.f2.on_objects[G.g2.P.G.object_id(x)] = G.g2.P.G.object_id(x);
  }
  for (std::size_t m = 0; m < G.g2.P.G.n_morphisms(); ++m) {
    F.f2.on_morphisms[G.g2.P.G.mor_id(m)] = G.g2.P.G.mor_id(m);
  }
  return F;
}

std::map<std::string, std::string> positional(GroupTable const& A,
                                              GroupTable const& B) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < A.order(); ++i) {
    m[A.elems[i]] = B.elems[i];
  }
  return m;
}

}  // namespace

TEST_CASE("automorphism groups come out as tables") {
  auto G = fixtures::cyclic_groupoid(4, "c");
  auto T = ttg::aut_group(G, 0);
  CHECK(T.order() == 4);
  CHECK(T.elems == std::vector<std::string>{"c0", "c1", "c2", "c3"});
  CHECK(T.id_elem == 0);
  CHECK(T.mul[1][2] == 3);
  CHECK(T.mul[3][2] == 1);
  CHECK(T.inv[1] == 3);
  CHECK(T.is_abelian());
  CHECK_FALSE(s3_table().is_abelian());

  std::map<std::string, std::string> ident = {
      {"c0", "c0"}, {"c1", "c1"}, {"c2", "c2"}, {"c3", "c3"}};
  CHECK(ttg::is_group_iso(T, T, ident));
  std::map<std::string, std::string> inv_map = {
      {"c0", "c0"}, {"c1", "c3"}, {"c2", "c2"}, {"c3", "c1"}};
  CHECK(ttg::is_group_iso(T, T, inv_map));
  std::map<std::string, std::string> swap12 = {
      {"c0", "c0"}, {"c1", "c2"}, {"c2", "c1"}, {"c3", "c3"}};
  CHECK_FALSE(ttg::is_group_iso(T, T, swap12));
  std::map<std::string, std::string> collapse = {
      {"c0", "c0"}, {"c1", "c0"}, {"c2", "c0"}, {"c3", "c0"}};
  CHECK_FALSE(ttg::is_group_iso(T, T, collapse));
}

TEST_CASE("fat fixture validates and reports its homotopy groups") {
  auto G = fixtures::fat_ttg();
  auto rpt = ttg::validate_ttg(G);
  INFO(rpt.to_string());
  CHECK(rpt.ok());
  CHECK(G.g2.P.G.n_components() == G.g1.star().size());

  auto H = ttg::homotopy_groups(G);
  CHECK(H.pi0.size() == 1);
  CHECK(H.pi0[H.pi0_base] == "u");
  CHECK(H.pi1.order() == 2);
  CHECK(H.pi2.order() == 2);
  CHECK(H.pi1.elems == std::vector<std::string>{"u0", "u1"});
  CHECK(H.pi1.is_abelian());
  CHECK(H.pi2.is_abelian());
}

TEST_CASE("q laws are reported clause by clause") {
  auto G = fixtures::fat_ttg();
  SUBCASE("basepoint must bound the identity") {
    auto bad = with_q(G, {{"nu0_u", "u1"}});
    auto rpt = ttg::validate_ttg(bad);
    CHECK(rpt.has_clause("ttg.q_pointed"));
    CHECK_FALSE(rpt.has_clause("ttg.q_star"));
  }
  SUBCASE("values must end at the basepoint") {
    auto bad = with_q(G, {{"nb0_u", "a0"}});
    auto rpt = ttg::validate_ttg(bad);
    CHECK(rpt.has_clause("ttg.q_star"));
    CHECK(rpt.has_clause("ttg.q_constant"));
  }
  SUBCASE("constancy along tracks") {
    auto bad = with_q(G, {{"nu1_v", "u0"}});
    auto rpt = ttg::validate_ttg(bad);
    CHECK(rpt.has_clause("ttg.q_constant"));
    CHECK(rpt.has_clause("ttg.q_bijective"));
    CHECK_FALSE(rpt.has_clause("ttg.q_surjective"));
  }
  SUBCASE("every star morphism needs a null path") {
    auto bad = with_q(G, {{"nb1_u", "b0"}, {"nb1_v", "b0"}});
    auto rpt = ttg::validate_ttg(bad);
    CHECK(rpt.has_clause("ttg.q_surjective"));
    CHECK(rpt.has_clause("ttg.q_bijective"));
    CHECK_FALSE(rpt.has_clause("ttg.q_constant"));
  }
  SUBCASE("unknown or missing q entries are structural") {
    CHECK(code_of([&] { with_q(G, {{"nu0_u", "zzz"}}); }) == Err::UnknownId);
    auto m = q_map_of(G);
    m.erase("nu0_u");
    CHECK(code_of([&] { TwoTrackGroupoid(G.g1, G.g2, m); }) ==
          Err::MissingTableEntry);
  }
}

TEST_CASE("underlying degree 1 violations keep their clause names") {
  auto G = fixtures::fat_ttg();
  std::map<std::string, std::map<std::string, std::string>> psi;
  auto const& g2 = G.g2.P.G;
  for (std::size_t x = 0; x < g2.n_objects(); ++x) {
    auto& slot = psi[g2.object_id(x)];
    for (std::size_t a : g2.aut(x)) {
      slot[g2.mor_id(a)] = g2.mor_id(G.g2.apply_psi(x, a));
    }
  }
  psi["nu1_u"]["nu1_u1"] = "nu0_u0";  // no longer a bijection at nu1_u
  gpd::StrictlyAbelianGroupoid bad(G.g2.P, psi);
  TwoTrackGroupoid B(G.g1, bad, q_map_of(G));
  auto rpt = ttg::validate_ttg(B);
  CHECK(rpt.has_clause("abelian.psi_bijective"));
  bool prefixed = false;
  for (auto const& v : rpt.violations) {
    if (v.clause == "abelian.psi_bijective" && !v.where.empty() &&
        v.where[0] == "g2") {
      prefixed = true;
    }
  }
  CHECK(prefixed);
}

TEST_CASE("nonabelian degree 2 automorphisms are refused") {
  auto s3 = s3_table();
  gpd::PointedGroupoid p1(fixtures::cyclic_groupoid(1, "t"), "to");
  gpd::PointedGroupoid p2(group_groupoid(s3, "w"), "w");
  std::map<std::string, std::map<std::string, std::string>> psi;
  for (auto const& e : s3.elems) {
    psi["w"][e] = e;
  }
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), psi);
  TwoTrackGroupoid G(std::move(p1), std::move(s2), {{"w", "t0"}});
  CHECK(code_of([&] { ttg::homotopy_groups(G); }) == Err::NotAbelian);
}

TEST_CASE("skeletal models from prescribed groups") {
  auto B = ttg::build_skeletal(make_cyclic(2), make_cyclic(3));
  auto rpt = ttg::validate_ttg(B);
  INFO(rpt.to_string());
  CHECK(rpt.ok());
  auto H = ttg::homotopy_groups(B);
  CHECK(H.pi0.size() == 1);
  CHECK(H.pi1.order() == 2);
  CHECK(H.pi2.order() == 3);
  CHECK(B.g2.P.G.n_objects() == B.g2.P.G.n_components());

  CHECK(code_of([&] { ttg::build_skeletal(make_cyclic(2), s3_table()); }) ==
        Err::NotAbelian);

  auto N = ttg::build_skeletal(s3_table(), make_cyclic(2));
  auto nrpt = ttg::validate_ttg(N);
  INFO(nrpt.to_string());
  CHECK(nrpt.ok());
  auto NH = ttg::homotopy_groups(N);
  CHECK(NH.pi1.order() == 6);
  CHECK_FALSE(NH.pi1.is_abelian());
  CHECK(NH.pi2.order() == 2);
}

TEST_CASE("products multiply the homotopy groups") {
  auto A = fixtures::fat_ttg();
  auto B = ttg::build_skeletal(make_cyclic(2), make_cyclic(3));
  auto P = ttg::product(A, B);
  auto rpt = ttg::validate_ttg(P);
  INFO(rpt.to_string());
  CHECK(rpt.ok());
  CHECK(P.g2.P.G.n_components() == P.g1.star().size());
  auto H = ttg::homotopy_groups(P);
  CHECK(H.pi0.size() == 1);
  CHECK(H.pi1.order() == 4);
  CHECK(H.pi2.order() == 6);
  CHECK(H.pi2.is_abelian());
}

TEST_CASE("degree 0 then degree 1 skeleton, with zigzag equivalences") {
  auto G = fixtures::fat_ttg();
  auto [S1, F1] = ttg::sk1(G);
  {
    auto rpt = ttg::validate_ttg(S1);
    INFO(rpt.to_string());
    CHECK(rpt.ok());
  }
  CHECK(S1.g1.G.n_objects() == 1);
  CHECK(S1.g1.star().size() == 2);
  CHECK(S1.g2.P.G.n_objects() == 4);
  CHECK(ttg::is_weak_equivalence(F1, S1, G));

  auto [S2, F2] = ttg::sk2(S1);
  {
    auto rpt = ttg::validate_ttg(S2);
    INFO(rpt.to_string());
    CHECK(rpt.ok());
  }
  CHECK(S2.g2.P.G.n_objects() == 2);
  CHECK(ttg::is_weak_equivalence(F2, S2, S1));
  auto H = ttg::homotopy_groups(S2);
  CHECK(H.pi1.order() == 2);
  CHECK(H.pi2.order() == 2);

  CHECK(code_of([&] { ttg::sk2(G); }) == Err::PreconditionFailed);
}

TEST_CASE("sk2 needs a connected input") {
  gpd::GroupoidData d;
  d.objects = {"x", "y"};
  d.morphisms = {{"idx", "x", "x"}, {"idy", "y", "y"}};
  d.identity = {{"x", "idx"}, {"y", "idy"}};
  d.inverse = {{"idx", "idx"}, {"idy", "idy"}};
  d.compose = {{"idx", "idx", "idx"}, {"idy", "idy", "idy"}};
  gpd::PointedGroupoid p1(gpd::Groupoid(std::move(d)), "x");
  gpd::PointedGroupoid p2(fixtures::cyclic_groupoid(1, "z"), "zo");
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), {{"zo", {{"z0", "z0"}}}});
  TwoTrackGroupoid G(std::move(p1), std::move(s2), {{"zo", "idx"}});
  auto rpt = ttg::validate_ttg(G);
  INFO(rpt.to_string());
  CHECK(rpt.ok());
  CHECK(ttg::homotopy_groups(G).pi0.size() == 2);
  CHECK(code_of([&] { ttg::sk2(G); }) == Err::PreconditionFailed);
}

TEST_CASE("morphism squares are checked") {
  auto B = ttg::build_skeletal(make_cyclic(2), make_cyclic(3));
  SUBCASE("identity passes and is an equivalence") {
    auto F = id_morphism(B);
    auto rpt = ttg::check_morphism(F, B, B);
    INFO(rpt.to_string());
    CHECK(rpt.ok());
    CHECK(ttg::is_weak_equivalence(F, B, B));
  }
  SUBCASE("twisting psi on one object breaks the square") {
    auto F = id_morphism(B);
    F.f2.on_morphisms["m_g1_g1"] = "m_g1_g2";
    F.f2.on_morphisms["m_g1_g2"] = "m_g1_g1";
    auto rpt = ttg::check_morphism(F, B, B);
    CHECK(rpt.has_clause("ttg.morphism_psi"));
    CHECK_FALSE(rpt.has_clause("ttg.morphism_q"));
    CHECK(code_of([&] { ttg::is_weak_equivalence(F, B, B); }) ==
          Err::InvalidMorphism);
  }
  SUBCASE("swapping null paths breaks pointedness and the q square") {
    auto F = id_morphism(B);
    F.f2.on_objects["o_g0"] = "o_g1";
    F.f2.on_objects["o_g1"] = "o_g0";
    for (int k = 0; k < 3; ++k) {
      F.f2.on_morphisms["m_g0_g" + std::to_string(k)] =
          "m_g1_g" + std::to_string(k);
      F.f2.on_morphisms["m_g1_g" + std::to_string(k)] =
          "m_g0_g" + std::to_string(k);
    }
    auto rpt = ttg::check_morphism(F, B, B);
    CHECK(rpt.has_clause("ttg.morphism_pointed"));
    CHECK(rpt.has_clause("ttg.morphism_q"));
  }
  SUBCASE("a valid morphism need not be an equivalence") {
    auto F = id_morphism(B);
    for (auto const& g : {"g0", "g1"}) {
      for (int k = 0; k < 3; ++k) {
        F.f2.on_morphisms["m_" + std::string(g) + "_g" + std::to_string(k)] =
            "m_" + std::string(g) + "_g0";
      }
    }
    auto rpt = ttg::check_morphism(F, B, B);
    INFO(rpt.to_string());
    CHECK(rpt.ok());
    CHECK_FALSE(ttg::is_weak_equivalence(F, B, B));
  }
}

TEST_CASE("connecting skeletal models") {
  auto G = ttg::sk2(ttg::sk1(fixtures::fat_ttg()).first).first;
  auto Hz = ttg::sk2(ttg::sk1(fixtures::fat_ttg("z")).first).first;

  auto pa1 = ttg::aut_group(G.g1.G, G.g1.basepoint);
  auto pb1 = ttg::aut_group(Hz.g1.G, Hz.g1.basepoint);
  auto pa2 = ttg::aut_group(G.g2.P.G, G.g2.P.basepoint);
  auto pb2 = ttg::aut_group(Hz.g2.P.G, Hz.g2.P.basepoint);
  auto phi1 = positional(pa1, pb1);
  auto phi2 = positional(pa2, pb2);
  REQUIRE(ttg::is_group_iso(pa1, pb1, phi1));
  REQUIRE(ttg::is_group_iso(pa2, pb2, phi2));

  auto conn = ttg::connect_weak_equivalence(G, Hz, phi1, phi2);
  CHECK(ttg::is_weak_equivalence(conn, G, Hz));

  SUBCASE("works across different presentations") {
    auto B = ttg::build_skeletal(make_cyclic(2), make_cyclic(2));
    auto qb1 = ttg::aut_group(B.g1.G, B.g1.basepoint);
    auto qb2 = ttg::aut_group(B.g2.P.G, B.g2.P.basepoint);
    auto c2 = ttg::connect_weak_equivalence(G, B, positional(pa1, qb1),
                                            positional(pa2, qb2));
    CHECK(ttg::is_weak_equivalence(c2, G, B));
  }
  SUBCASE("a non homomorphism is rejected") {
    auto bad = phi1;
    bad[pa1.elems[0]] = pb1.elems[1];
    bad[pa1.elems[1]] = pb1.elems[0];
    CHECK(code_of([&] {
            ttg::connect_weak_equivalence(G, Hz, bad, phi2);
          }) == Err::NotIsomorphism);
  }
  SUBCASE("non skeletal inputs are refused") {
    CHECK(code_of([&] {
            ttg::connect_weak_equivalence(fixtures::fat_ttg(), Hz, phi1, phi2);
          }) == Err::PreconditionFailed);
  }
}

TEST_CASE("zigzag from a model to a relabeled model") {
  auto G = fixtures::fat_ttg();
  auto Gz = fixtures::fat_ttg("z");
  auto [s1, i1] = ttg::sk1(G);
  auto [s2, i2] = ttg::sk2(s1);
  auto [t1, j1] = ttg::sk1(Gz);
  auto [t2, j2] = ttg::sk2(t1);
  auto phi1 = positional(ttg::aut_group(s2.g1.G, s2.g1.basepoint),
                         ttg::aut_group(t2.g1.G, t2.g1.basepoint));
  auto phi2 = positional(ttg::aut_group(s2.g2.P.G, s2.g2.P.basepoint),
                         ttg::aut_group(t2.g2.P.G, t2.g2.P.basepoint));
  auto conn = ttg::connect_weak_equivalence(s2, t2, phi1, phi2);

  CHECK(ttg::is_weak_equivalence(i1, s1, G));
  CHECK(ttg::is_weak_equivalence(i2, s2, s1));
  CHECK(ttg::is_weak_equivalence(conn, s2, t2));
  CHECK(ttg::is_weak_equivalence(j2, t2, t1));
  CHECK(ttg::is_weak_equivalence(j1, t1, Gz));
}
