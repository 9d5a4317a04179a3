#include <catch2/catch_amalgamated.hpp>

#include "paqa/fingen.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::load_fixture;
using paqa::testing::parse;
using paqa::testing::word;

TEST_CASE("counterexample is infinitely generated") {
  auto s = load_fixture("counterexample").ideal();
  const auto& q = s.quiver();
  auto v = center_finitely_generated(s);
  CHECK(v.status == FinGenStatus::infinitely_generated);
  REQUIRE(v.witness);
  CHECK(v.witness->clique == word(q, "c d"));
  CHECK(v.witness->failing_member == q.arrow_id("c"));
  CHECK(v.witness->blocking_outsider == q.arrow_id("b"));
  CHECK(v.witness->missing == MissingEdge::from_clique);
  CHECK(v.generators.empty());
  CHECK_THROWS_AS(degree_generators(s), NotFinitelyGenerated);
}

TEST_CASE("S sets of the counterexample") {
  auto s = load_fixture("counterexample").ideal();
  auto sx = necessary_condition_S(s, 0);
  CHECK(sx.status == SStatus::set);
  CHECK(sx.loops == std::vector<ArrowId>{0});
  CHECK(necessary_condition_S(s, 1).status == SStatus::trivial);
}

TEST_CASE("commutative center generated in degree one") {
  auto s = parse("vertices: x\narrows: a: x->x, b: x->x\nideal commutative\ncomm: a*b\n").ideal();
  auto v = center_finitely_generated(s);
  CHECK(v.status == FinGenStatus::finitely_generated);
  CHECK(v.generators == std::vector<Word>{{0}, {1}});
}

TEST_CASE("anti generators are squares unless the loop annihilates") {
  auto s = parse("vertices: x, y\narrows: a: x->x, b: x->x, c: x->y\nideal anticommutative\n"
                 "anti: a*b\nzero: a*c, b*c\n")
               .ideal();
  auto v = center_finitely_generated(s);
  CHECK(v.status == FinGenStatus::finitely_generated);
  CHECK(v.generators == std::vector<Word>{{0, 0}, {1, 1}});

  auto t = parse("vertices: x\narrows: a: x->x\nideal anticommutative\n").ideal();
  CHECK(center_finitely_generated(t).generators == std::vector<Word>{{0}});
}

TEST_CASE("trivial center") {
  auto s = parse("vertices: x, y\narrows: c: x->y\nideal commutative\n").ideal();
  auto v = center_finitely_generated(s);
  CHECK(v.status == FinGenStatus::trivial);
  CHECK(degree_generators(s).empty());
}

TEST_CASE("non-admissible orthogonal ideal is rejected") {
  auto s = parse("vertices: x\narrows: a: x->x, b: x->x\nideal commutative\nzero: a*b, b*a\n").ideal();
  CHECK_THROWS_AS(center_finitely_generated(s), HypothesisViolation);
}
