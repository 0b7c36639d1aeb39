#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttk/chains.hpp"
#include "ttk/errors.hpp"
#include "ttk/fixtures.hpp"
#include "ttk/resolution.hpp"
#include "ttk/tta.hpp"

using namespace ttk;

namespace {

std::vector<std::string> const kCarriers{"Y0", "Y1", "Y2", "Y3"};

template <class F>
std::optional<Err> code_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  return std::nullopt;
}

// window of constant objects with zero differentials
chains::ChainComplex constant_zero(std::string const& obj, int n_max) {
  chains::ChainComplex X;
  X.n_min = 0;
  X.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) X.objects[n] = obj;
  for (int n = 0; n < n_max; ++n) X.d[n] = "0";
  return X;
}

}  // namespace

TEST_CASE("homotopy classes form an additive category") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);

  CHECK(C.objects == std::vector<std::string>{"Y0", "Y1", "Y2", "Y3"});
  CHECK(C.hom.size() == 16);
  CHECK(C.add.size() == 16);
  CHECK(C.hom.at({"Y1", "Y0"}) == std::vector<std::string>{"0", "x1"});
  CHECK(C.hom.at({"Y0", "Y0"}) == std::vector<std::string>{"0", "one0"});
  CHECK(C.hom.at({"Y3", "Y0"}) == std::vector<std::string>{"0"});
  CHECK(C.zero.at({"Y1", "Y0"}) == 0);
  CHECK(C.unit.at("Y0") == C.index("Y0", "Y0", "one0"));
  CHECK(C.class_of.at({"Y0", "Y0", "one0+zs"}) == "one0");

  // [x1][x2] = 0 and [one0][x1] = [x1]
  auto const& c210 = C.compose.at({"Y2", "Y1", "Y0"});
  CHECK(c210[C.index("Y1", "Y0", "x1")][C.index("Y2", "Y1", "x2")] == 0);
  auto const& c100 = C.compose.at({"Y1", "Y0", "Y0"});
  CHECK(c100[C.unit.at("Y0")][C.index("Y1", "Y0", "x1")] ==
        C.index("Y1", "Y0", "x1"));

  // every class is 2 torsion under the label sum
  for (auto const& [key, tab] : C.add)
    for (std::size_t i = 0; i < tab.size(); ++i)
      CHECK(tab[i][i] == C.zero.at(key));
}

TEST_CASE("chain complex checker") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);
  chains::ChainComplex X =
      chains::induced_complex(C, fixtures::s1_secondary());

  SUBCASE("the induced window is a complex") {
    CHECK(chains::check_chain(C, X).ok());
    CHECK(X.d.at(0) == "x1");
    CHECK(X.d.at(3) == "x4");
  }
  SUBCASE("nonzero composite") {
    chains::ChainComplex B;
    B.n_min = 0;
    B.n_max = 2;
    B.objects = {{0, "Y0"}, {1, "Y0"}, {2, "Y1"}};
    B.d = {{0, "one0"}, {1, "x1"}};
    Report r = chains::check_chain(C, B);
    CHECK_FALSE(r.ok());
    CHECK(r.has_clause("chain.dd"));
  }
  SUBCASE("shape problems are reported before composites") {
    chains::ChainComplex B = X;
    B.d.erase(2);
    B.objects[7] = "Y1";
    B.d[1] = "nope";
    Report r = chains::check_chain(C, B);
    CHECK(r.has_clause("chain.shape"));
    CHECK_FALSE(r.has_clause("chain.dd"));
    CHECK(r.violations.size() == 3);
  }
}

TEST_CASE("exactness against the carriers") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);
  chains::ChainComplex X =
      chains::induced_complex(C, fixtures::s1_secondary());

  CHECK(chains::is_a_exact(C, X, kCarriers));
  CHECK_FALSE(chains::is_a_exact(C, constant_zero("Y1", 2), {"Y1"}));

  SUBCASE("missing addition") {
    chains::AddCategory C2 = C;
    C2.add.erase({"Y0", "Y1"});
    CHECK(code_of([&] { chains::is_a_exact(C2, X, kCarriers); }) ==
          Err::NotAdditive);
  }
  SUBCASE("malformed complex") {
    chains::ChainComplex B = X;
    B.d.erase(1);
    CHECK(code_of([&] { chains::is_a_exact(C, B, kCarriers); }) ==
          Err::PreconditionFailed);
  }
  SUBCASE("unknown carrier") {
    CHECK(code_of([&] { chains::is_a_exact(C, X, {"nope"}); }) ==
          Err::UnknownId);
  }
}

TEST_CASE("ext groups from hom tables") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);
  chains::ChainComplex X =
      chains::induced_complex(C, fixtures::s1_secondary());

  // zero differentials leave the whole hom group
  CHECK(chains::ext_group_dim(C, constant_zero("Y1", 2), "Y1", 1) == 1);
  // the resolution window has no cohomology against the carriers
  for (int s = 0; s <= 3; ++s) {
    CHECK(chains::ext_group_dim(C, X, "Y0", s) == 0);
    CHECK(chains::ext_group_dim(C, X, "Y1", s) == 0);
  }
  CHECK(code_of([&] { chains::ext_group_dim(C, X, "Y0", 4); }) ==
        Err::WindowExceeded);
  CHECK(code_of([&] { chains::ext_group_dim(C, X, "Y0", -1); }) ==
        Err::WindowExceeded);
}

TEST_CASE("ext groups from a free resolution window") {
  auto res = resolution::minimal_resolution(steenrod::f2_module(16), 2, 16);
  CHECK(chains::ext_group_dim(res, 0, 0) == 1);
  std::set<unsigned> powers{1, 2, 4, 8, 16};
  for (unsigned t = 1; t <= 16; ++t)
    CHECK(chains::ext_group_dim(res, 1, t) == (powers.count(t) ? 1 : 0));
  CHECK(code_of([&] { chains::ext_group_dim(res, 2, 3); }) ==
        Err::WindowExceeded);
}

TEST_CASE("secondary obstruction over t1") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::SecondaryComplex S = fixtures::s1_secondary();
  CHECK(chains::check_secondary(A, S).ok());

  tta::Track O1 = chains::secondary_obstruction(A, S, 1);
  CHECK(O1.id == "(0|p+r)");
  CHECK(O1.src == "Y3");
  CHECK(O1.tgt == "Y0");
  CHECK_FALSE(chains::vanishes(A, O1));
  CHECK(chains::vanishes(A, chains::secondary_obstruction(A, S, 2)));
  CHECK_FALSE(chains::is_secondary_chain_complex(A, S));

  SUBCASE("the obstruction lies in the triple bracket of the differentials") {
    auto bracket = tta::toda3(A, S.d.at(0), S.d.at(1), S.d.at(2), {});
    CHECK(bracket.count(O1.id) == 1);
  }
  SUBCASE("repairing the first track kills it") {
    S.gamma[0].id = "a0+za";
    CHECK(chains::vanishes(A, chains::secondary_obstruction(A, S, 1)));
    CHECK(chains::is_secondary_chain_complex(A, S));
  }
  SUBCASE("relabeled copy") {
    tta::TwoTrackAlgebra P = fixtures::t1_algebra("p_");
    tta::Track O = chains::secondary_obstruction(
        P, fixtures::s1_secondary("p_"), 1);
    CHECK(O.id == "(0|p_p+p_r)");
  }
  SUBCASE("window errors") {
    CHECK(code_of([&] { chains::secondary_obstruction(A, S, 0); }) ==
          Err::IndexOutOfWindow);
    CHECK(code_of([&] { chains::secondary_obstruction(A, S, 3); }) ==
          Err::IndexOutOfWindow);
    S.gamma.erase(1);
    CHECK(code_of([&] { chains::secondary_obstruction(A, S, 1); }) ==
          Err::IndexOutOfWindow);
  }
  SUBCASE("malformed tracks") {
    S.gamma[1].id = "0";
    CHECK(code_of([&] { chains::secondary_obstruction(A, S, 1); }) ==
          Err::SecondaryInvalid);
    CHECK_FALSE(chains::is_secondary_chain_complex(A, S));
    CHECK(chains::check_secondary(A, S).has_clause("chain.gamma"));
  }
  SUBCASE("degenerate window is vacuously a chain complex") {
    chains::SecondaryComplex small;
    small.n_min = 0;
    small.n_max = 1;
    small.objects = {{0, "Y0"}, {1, "Y1"}};
    small.d = {{0, tta::Element{"Y1", "Y0", 0, "x1"}}};
    CHECK(chains::is_secondary_chain_complex(A, small));
  }
}

TEST_CASE("tertiary obstruction over t1") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::TertiaryComplex T = fixtures::t1c_tertiary();
  CHECK(chains::check_tertiary(A, T).ok());

  tta::Element O = chains::tertiary_obstruction(A, T, 1);
  CHECK(O.id == "(0|om)");
  CHECK(O.src == "Y0");
  CHECK(O.tgt == "Y0");
  CHECK(O.degree == 2);
  CHECK_FALSE(chains::vanishes(A, O));
  CHECK_FALSE(chains::is_tertiary_chain_complex(A, T));

  SUBCASE("the obstruction lies in the quadruple bracket") {
    auto bracket =
        tta::toda4(A, T.sec.d.at(0), T.sec.d.at(1), T.sec.d.at(2),
                   T.sec.d.at(3), {});
    CHECK(bracket.count(O.id) == 1);
  }
  SUBCASE("repairing the second filler kills it") {
    T.xi[1].id = "(pp|mp+mpp)";
    CHECK(chains::vanishes(A, chains::tertiary_obstruction(A, T, 1)));
    CHECK(chains::is_tertiary_chain_complex(A, T));
  }
  SUBCASE("window errors") {
    CHECK(code_of([&] { chains::tertiary_obstruction(A, T, 0); }) ==
          Err::IndexOutOfWindow);
    CHECK(code_of([&] { chains::tertiary_obstruction(A, T, 2); }) ==
          Err::IndexOutOfWindow);
  }
  SUBCASE("malformed fillers") {
    T.xi[0].id = "(0|0)";
    CHECK(code_of([&] { chains::tertiary_obstruction(A, T, 1); }) ==
          Err::SecondaryInvalid);
    CHECK(chains::check_tertiary(A, T).has_clause("chain.xi"));
  }
}

TEST_CASE("corrections") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);

  SUBCASE("the first track is replaced, later ones kept") {
    chains::SecondaryComplex S = fixtures::s1_secondary();
    chains::SecondaryComplex R = chains::correct_1tracks(A, S, C, kCarriers);
    CHECK(R.gamma.at(0).id == "a0+za");
    CHECK(R.gamma.at(1).id == "b0");
    CHECK(R.gamma.at(2).id == "c0");
    CHECK(chains::is_secondary_chain_complex(A, R));
    // deterministic, and a fixed point once valid
    chains::SecondaryComplex R2 = chains::correct_1tracks(A, R, C, kCarriers);
    CHECK(R2.gamma.at(0).id == R.gamma.at(0).id);
    CHECK(R2.gamma.at(1).id == R.gamma.at(1).id);
    CHECK(R2.gamma.at(2).id == R.gamma.at(2).id);
  }
  SUBCASE("shorter window, same repair") {
    chains::SecondaryComplex S = fixtures::s1_secondary();
    S.n_max = 3;
    S.objects.erase(4);
    S.d.erase(3);
    S.gamma.erase(2);
    chains::SecondaryComplex R = chains::correct_1tracks(A, S, C, kCarriers);
    CHECK(R.gamma.at(0).id == "a0+za");
    CHECK(chains::is_secondary_chain_complex(A, R));
  }
  SUBCASE("upper window needs no repair") {
    chains::SecondaryComplex S = fixtures::s1_secondary();
    S.n_min = 1;
    S.objects.erase(0);
    S.d.erase(0);
    S.gamma.erase(0);
    chains::SecondaryComplex R = chains::correct_1tracks(A, S, C, kCarriers);
    CHECK(R.gamma.at(1).id == "b0");
    CHECK(R.gamma.at(2).id == "c0");
  }
  SUBCASE("prefixed copy corrects the same way") {
    tta::TwoTrackAlgebra P = fixtures::t1_algebra("p_");
    chains::SecondaryComplex R = chains::correct_1tracks(
        P, fixtures::s1_secondary("p_"), chains::pi0_additive(P),
        {"p_Y0", "p_Y1", "p_Y2", "p_Y3"});
    CHECK(R.gamma.at(0).id == "p_a0+p_za");
  }
  SUBCASE("starved of the second bounding track") {
    tta::TwoTrackAlgebra B = fixtures::t1_algebra("", false, true);
    CHECK(code_of([&] {
            chains::correct_1tracks(B, fixtures::s1_secondary(),
                                    chains::pi0_additive(B), kCarriers);
          }) == Err::NoCorrectionFound);
  }
  SUBCASE("fillers are replaced, tracks kept") {
    chains::TertiaryComplex T = fixtures::t1c_tertiary();
    chains::TertiaryComplex R = chains::correct_2tracks(A, T, C, kCarriers);
    CHECK(R.xi.at(0).id == "(r|0)");
    CHECK(R.xi.at(1).id == "(pp|mp+mpp)");
    CHECK(R.sec.gamma.at(0).id == "a0+za");
    CHECK(chains::is_tertiary_chain_complex(A, R));
  }
  SUBCASE("starved of the second filler") {
    tta::TwoTrackAlgebra B = fixtures::t1_algebra("", true, false);
    CHECK(code_of([&] {
            chains::correct_2tracks(B, fixtures::t1c_tertiary(),
                                    chains::pi0_additive(B), kCarriers);
          }) == Err::NoCorrectionFound);
  }
  SUBCASE("a window that is not exact is rejected") {
    chains::SecondaryComplex S = fixtures::s1_secondary();
    S.d[1] = tta::Element{"Y2", "Y1", 0, "0"};
    CHECK(code_of([&] { chains::correct_1tracks(A, S, C, kCarriers); }) ==
          Err::NotAResolution);
  }
}

TEST_CASE("resolution workflow") {
  tta::TwoTrackAlgebra A = fixtures::t1_algebra();
  chains::AddCategory C = chains::pi0_additive(A);

  SUBCASE("classes of the t1 window lift to a full tertiary complex") {
    chains::ChainComplex X =
        chains::induced_complex(C, fixtures::s1_secondary());
    chains::TertiaryComplex T =
        chains::build_resolution(A, C, kCarriers, X);
    CHECK(T.sec.gamma.at(0).id == "a0+za");
    CHECK(T.xi.at(1).id == "(pp|mp+mpp)");
    CHECK(chains::is_tertiary_chain_complex(A, T));
  }
  SUBCASE("zero resolution gives the trivial complex") {
    tta::TwoTrackAlgebra Z = fixtures::terminal_algebra();
    chains::AddCategory CZ = chains::pi0_additive(Z);
    chains::TertiaryComplex T =
        chains::build_resolution(Z, CZ, {"Z"}, constant_zero("Z", 4));
    CHECK(chains::is_tertiary_chain_complex(Z, T));
    CHECK(T.sec.gamma.at(0).id == "0");
    CHECK(T.xi.at(0).id == "(0|0)");
  }
  SUBCASE("inexact input is rejected") {
    CHECK(code_of([&] {
            chains::build_resolution(A, C, {"Y1"}, constant_zero("Y1", 2));
          }) == Err::NotAResolution);
  }
  SUBCASE("objects outside the carriers are rejected") {
    chains::ChainComplex X =
        chains::induced_complex(C, fixtures::s1_secondary());
    CHECK(code_of([&] {
            chains::build_resolution(A, C, {"Y0", "Y2", "Y3"}, X);
          }) == Err::NotAResolution);
  }
}

TEST_CASE("a free resolution window lifts to a discrete algebra") {
  auto dr = fixtures::discrete_resolution(steenrod::f2_module(3), 2, 3);
  CHECK(dr.lift.d.at(0) == "g1_1_0:Sq(1):g0_0_0+g1_2_0:Sq(2):g0_0_0");
  CHECK(dr.lift.d.at(1) == "g2_2_0:Sq(1):g1_1_0");

  tta::TwoTrackAlgebra W = em::realize(dr.data);
  CHECK(tta::check_axioms(W).ok());
  chains::AddCategory C = chains::pi0_additive(W);
  CHECK(chains::check_chain(C, dr.lift).ok());
  CHECK(chains::is_a_exact(C, dr.lift, dr.carriers));

  chains::TertiaryComplex T =
      chains::build_resolution(W, C, dr.carriers, dr.lift);
  CHECK(chains::is_secondary_chain_complex(W, T.sec));
  CHECK(chains::is_tertiary_chain_complex(W, T));
  // no tracks beyond identities, so every bounding track is the zero path
  CHECK(T.sec.gamma.at(0).id == "0");
}
