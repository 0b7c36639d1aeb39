#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ttk/balls.hpp"
#include "ttk/errors.hpp"
#include "ttk/fixtures.hpp"
#include "ttk/tta.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace ttk;
using balls::BallChain;
using tta::Element;

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

BallChain constant_chain(std::string const& cell, std::size_t k) {
  BallChain ch;
  ch.from = "Y0";
  ch.to = "Y1";
  for (std::size_t i = 0; i < k; ++i)
    ch.entries.push_back({Element{"Y0", "Y1", 2, cell}, 1});
  return ch;
}

}  // namespace

TEST_CASE("normal forms") {
  auto c2 = balls::normalize_ball(2);
  CHECK(c2.k == 2);
  CHECK(c2.cell_edges ==
        std::vector<std::array<std::size_t, 2>>{{1, 0}, {0, 1}});

  auto c4 = balls::normalize_ball(4);
  CHECK(c4.cell_edges.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c4.cell_edges[i][1] == i);
    CHECK(c4.cell_edges[(i + 1) % 4][0] == i);
  }

  CHECK(code_of([] { balls::normalize_ball(1); }) == Err::InvalidK);
  CHECK(code_of([] { balls::normalize_ball(0); }) == Err::InvalidK);
}

TEST_CASE("chain validation") {
  auto A = fixtures::t1_algebra();

  CHECK(balls::validate_chain(A, constant_chain("(pp|0)", 4)).ok());
  CHECK(balls::validate_chain(A, fixtures::b1_chain()).ok());

  SUBCASE("too short") {
    auto ch = constant_chain("(pp|0)", 1);
    CHECK(balls::validate_chain(A, ch).has_clause("ball.k"));
  }
  SUBCASE("flipped orientation breaks the gluing") {
    auto ch = fixtures::b1_chain();
    ch.entries[0].second = -1;
    auto rpt = balls::validate_chain(A, ch);
    CHECK(rpt.has_clause("ball.composable"));
    CHECK(rpt.violations[0].where[1] == "edge 0");
  }
  SUBCASE("cell from nowhere") {
    auto ch = fixtures::b1_chain();
    ch.entries[1].first.id = "(pp|nope)";
    CHECK(balls::validate_chain(A, ch).has_clause("ball.cell"));
  }
  SUBCASE("cell of the wrong degree") {
    auto ch = fixtures::b1_chain();
    ch.entries[1].first = Element{"Y0", "Y1", 1, "pp"};
    CHECK(balls::validate_chain(A, ch).has_clause("ball.cell"));
  }
  SUBCASE("unknown hom") {
    auto ch = fixtures::b1_chain();
    ch.to = "nowhere";
    CHECK(balls::validate_chain(A, ch).has_clause("ball.cell"));
  }
}

TEST_CASE("obstruction values") {
  auto A = fixtures::t1_algebra();

  CHECK(balls::obstruction(A, constant_chain("(pp|0)", 5)) ==
        Element{"Y0", "Y1", 2, "(0|0)"});

  BallChain pair;
  pair.from = "Y0";
  pair.to = "Y1";
  pair.entries = {{Element{"Y0", "Y1", 2, "(pp|mp)"}, 1},
                  {Element{"Y0", "Y1", 2, "(pp|mp)"}, -1}};
  CHECK(balls::obstruction(A, pair) == Element{"Y0", "Y1", 2, "(0|0)"});

  CHECK(balls::obstruction(A, fixtures::b1_chain()) ==
        Element{"Y0", "Y1", 2, "(0|mpp)"});

  auto broken = fixtures::b1_chain();
  broken.entries[0].second = -1;
  CHECK(code_of([&] { balls::obstruction(A, broken); }) == Err::InvalidChain);
}

TEST_CASE("rotation invariance") {
  auto A = fixtures::t1_algebra();
  auto b1 = fixtures::b1_chain();
  auto value = balls::obstruction(A, b1);
  for (std::size_t r = 1; r < b1.entries.size(); ++r) {
    auto rot = balls::rotated(b1, r);
    CHECK(balls::validate_chain(A, rot).ok());
    CHECK(balls::obstruction(A, rot) == value);
  }

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    bool upper = seed % 2 == 0;
    auto ch = balls::random_chain(A, "Y0", upper ? "Y1" : "Y0",
                                  2 + seed % 5, seed);
    REQUIRE(balls::validate_chain(A, ch).ok());
    auto base = balls::obstruction(A, ch);
    for (std::size_t r = 1; r < ch.entries.size(); ++r)
      CHECK(balls::obstruction(A, balls::rotated(ch, r)) == base);
  }

  CHECK(code_of([&] { balls::random_chain(A, "Y0", "Y1", 1, 7); }) ==
        Err::InvalidK);
  CHECK(code_of([&] { balls::random_chain(A, "Y0", "no", 3, 7); }) ==
        Err::UnknownId);
}

TEST_CASE("inserting a cancelling pair changes nothing") {
  auto A = fixtures::t1_algebra();
  auto const& G = A.hom_at("Y0", "Y1").g2.P.G;
  auto b1 = fixtures::b1_chain();
  auto value = balls::obstruction(A, b1);
  std::size_t checked = 0;
  for (std::size_t j = 0; j < b1.entries.size(); ++j) {
    std::size_t junction =
        G.src(G.mor_index(b1.entries[j].first.id));
    if (b1.entries[j].second == -1)
      junction = G.tgt(G.mor_index(b1.entries[j].first.id));
    for (std::size_t m = 0; m < G.n_morphisms(); ++m) {
      if (G.src(m) != junction) continue;
      auto ch = b1;
      Element beta{"Y0", "Y1", 2, G.mor_id(m)};
      ch.entries.insert(ch.entries.begin() + static_cast<long>(j),
                        {{beta, 1}, {beta, -1}});
      REQUIRE(balls::validate_chain(A, ch).ok());
      CHECK(balls::obstruction(A, ch) == value);
      ++checked;
    }
  }
  CHECK(checked >= 12);
}

TEST_CASE("the ball view of an algebra") {
  auto A = fixtures::t1_algebra();
  auto V = balls::alg_cub(A);

  CHECK(V.pi0.hom_classes.at({"Y1", "Y0"}) ==
        std::vector<std::string>{"0", "x1"});
  CHECK(V.D.at({"Y0", "Y1"}).elems ==
        std::vector<std::string>{"(0|0)", "(0|mpp)"});
  CHECK(V.D.at({"Y0", "Y0"}).elems ==
        std::vector<std::string>{"(0|0)", "(0|om)"});
  CHECK(V.D.at({"Y1", "Y0"}).elems == std::vector<std::string>{"(0|0)"});
  for (auto const& [key, table] : V.D) CHECK(table.is_abelian());

  auto T = fixtures::terminal_algebra();
  auto VT = balls::alg_cub(T);
  CHECK(VT.D.at({"Z", "Z"}).elems.size() == 1);
}

TEST_CASE("the coefficient functor respects homotopy classes") {
  auto A = fixtures::t1_algebra();
  auto V = balls::alg_cub(A);

  // representatives give the same action as any member of their class
  for (auto const& [pair, classes] : V.pi0.hom_classes) {
    auto const& [a, b] = pair;
    for (auto const& rep : classes) {
      std::vector<std::string> members;
      auto const& G1 = A.hom_at(a, b).g1.G;
      for (std::size_t i = 0; i < G1.n_objects(); ++i)
        if (V.pi0.class_of.at({a, b, G1.object_id(i)}) == rep)
          members.push_back(G1.object_id(i));
      REQUIRE(!members.empty());
      for (auto const& [src2, table] : V.D) {
        if (src2.first != b) continue;  // acting on D(b, c) from the right
        for (auto const& mid : table.elems) {
          Element m{b, src2.second, 2, mid};
          auto base =
              balls::d_act_right(A, m, Element{a, b, 0, members[0]});
          CHECK(tta::boundary0(A, base) == A.zero(a, src2.second, 1));
          for (auto const& other : members)
            CHECK(balls::d_act_right(A, m, Element{a, b, 0, other}) == base);
        }
      }
      for (auto const& [tgt2, table] : V.D) {
        if (tgt2.second != a) continue;  // postcomposing D(c, a)
        for (auto const& mid : table.elems) {
          Element m{tgt2.first, a, 2, mid};
          auto base = balls::d_act_left(A, Element{a, b, 0, members[0]}, m);
          for (auto const& other : members)
            CHECK(balls::d_act_left(A, Element{a, b, 0, other}, m) == base);
        }
      }
    }
  }

  // contravariant square: acting by a composite equals acting twice
  auto m = Element{"Y0", "Y0", 2, "(0|om)"};
  auto via_composite =
      balls::d_act_right(A, m, tensor(A, Element{"Y1", "Y0", 0, "x1"},
                                      Element{"Y2", "Y1", 0, "x2"}));
  auto stepwise = balls::d_act_right(
      A, balls::d_act_right(A, m, Element{"Y1", "Y0", 0, "x1"}),
      Element{"Y2", "Y1", 0, "x2"});
  CHECK(via_composite == stepwise);

  CHECK(code_of([&] {
          balls::d_act_right(A, Element{"Y0", "Y0", 2, "(e|om)"},
                             Element{"Y1", "Y0", 0, "x1"});
        }) == Err::PreconditionFailed);
  CHECK(code_of([&] {
          balls::d_act_left(A, Element{"Y0", "Y0", 1, "e"}, m);
        }) == Err::PreconditionFailed);
}
