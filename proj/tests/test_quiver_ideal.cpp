#include <catch2/catch_amalgamated.hpp>

#include "paqa/ideal.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::load_fixture;
using paqa::testing::parse;
using paqa::testing::word;

TEST_CASE("quiver rejects bad declarations") {
  CHECK_THROWS_AS(Quiver::build({"x", "x"}, {}), QuiverError);
  CHECK_THROWS_AS(Quiver::build({"x"}, {{"a", "x", "z"}}), QuiverError);
  CHECK_THROWS_AS(Quiver::build({"x"}, {{"a", "x", "x"}, {"a", "x", "x"}}), QuiverError);
  CHECK_THROWS_AS(Quiver::build({""}, {}), QuiverError);
}

TEST_CASE("paths compose left to right") {
  Quiver q = Quiver::build({"x", "y"}, {{"a", "x", "x"}, {"c", "x", "y"}});
  Path p = Path::word(q, {0, 1});
  CHECK(p.origin() == 0);
  CHECK(p.target() == 1);
  CHECK_THROWS_AS(Path::word(q, {1, 0}), QuiverError);
  CHECK_FALSE(compose(q, Path::word(q, {1}), Path::word(q, {0})).has_value());
  auto ac = compose(q, Path::word(q, {0}), Path::word(q, {1}));
  REQUIRE(ac);
  CHECK(ac->arrows() == Word{0, 1});
  CHECK(compose(q, Path::vertex(0), Path::word(q, {0}))->arrows() == Word{0});
}

TEST_CASE("opposite quiver toggles names and reverses arrows") {
  Quiver q = Quiver::build({"x", "y"}, {{"c", "x", "y"}});
  Quiver o = opposite(q);
  CHECK(o.arrow_name(0) == "c°");
  CHECK(o.arrow(0).origin == 1);
  CHECK(opposite(o) == q);
}

TEST_CASE("vertex subquiver keeps incident arrows") {
  Quiver q = Quiver::build({"x", "y", "z"}, {{"a", "x", "x"}, {"c", "x", "y"}, {"g", "y", "z"}});
  Quiver s = vertex_subquiver(q, 0);
  CHECK(s.arrow_count() == 2);
  CHECK(s.vertex_count() == 2);
  CHECK_FALSE(s.find_arrow("g"));
}

TEST_CASE("relations must join distinct loops at one vertex") {
  Quiver q = Quiver::build({"x", "y"}, {{"a", "x", "x"}, {"c", "x", "y"}});
  RawGenerators raw;
  raw.relations.push_back({{"a", "c"}, Flavor::commutative});
  CHECK_THROWS_AS(validate_ideal(q, raw), IdealError);
  raw.relations = {{{"a", "a"}, Flavor::commutative}};
  CHECK_THROWS_AS(validate_ideal(q, raw), IdealError);
}

TEST_CASE("zero words must be composable length-2 paths") {
  Quiver q = Quiver::build({"x", "y"}, {{"a", "x", "x"}, {"c", "x", "y"}});
  RawGenerators raw;
  raw.zero_words = {{"c", "a"}};
  CHECK_THROWS_AS(validate_ideal(q, raw), IdealError);
  raw.zero_words = {{"a", "a", "c"}};
  CHECK_THROWS_AS(validate_ideal(q, raw), IdealError);
}

TEST_CASE("a relation with a vanishing side becomes two monomials") {
  auto doc = parse("vertices: x\narrows: a: x->x, b: x->x\nideal commutative\nzero: a*b\ncomm: a*b\n");
  const auto& s = doc.ideal();
  CHECK(s.relations().empty());
  CHECK(s.has_monomial(0, 1));
  CHECK(s.has_monomial(1, 0));
}

TEST_CASE("characteristic 2 folds the anticommutative flavor") {
  auto doc = parse("vertices: x\narrows: a: x->x, b: x->x\nideal anticommutative\nanti: a*b\nchar: 2\n");
  CHECK(doc.ideal().flavor() == Flavor::commutative);
  CHECK(doc.ideal().transposition_sign() == 1);
  CHECK_FALSE(doc.ideal().notices().empty());
}

TEST_CASE("orthogonal ideals of the Ex1 family") {
  auto i = load_fixture("ex1_i").ideal();
  auto oi = orthogonal(i);
  const auto& q = i.quiver();
  CHECK(oi.flavor() == Flavor::anticommutative);
  CHECK(oi.relations() == std::set<ArrowPair>{{q.arrow_id("a"), q.arrow_id("b")}});
  CHECK(oi.monomials() == std::set<ArrowPair>{{q.arrow_id("b"), q.arrow_id("c")}});

  auto ii = load_fixture("ex1_ii").ideal();
  const auto& q2 = ii.quiver();
  auto id = [&](const char* n) { return q2.arrow_id(n); };
  CHECK(orthogonal(ii).monomials() ==
        std::set<ArrowPair>{{id("a"), id("c")}, {id("d"), id("b")}, {id("d"), id("c")}});
  CHECK(orthogonal(ii).relations().empty());

  auto iii = load_fixture("ex1_iii").ideal();
  auto oiii = orthogonal(iii);
  const auto& q3 = iii.quiver();
  CHECK(oiii.flavor() == Flavor::commutative);
  CHECK(oiii.relations() == iii.relations());
  CHECK(oiii.monomials() ==
        std::set<ArrowPair>{{q3.arrow_id("c"), q3.arrow_id("d")}, {q3.arrow_id("d"), q3.arrow_id("c")}});
}

TEST_CASE("orthogonal adds surviving squares") {
  auto s = load_fixture("cen_ex").ideal();
  auto o = orthogonal(s);
  CHECK(o.has_monomial(0, 0));
  CHECK(o.has_monomial(1, 1));
  CHECK(squares_added_by_orthogonal(s) == std::vector<ArrowId>{0, 1});
  CHECK(orthogonal(o) == s);
}

TEST_CASE("square-free and square-complete") {
  CHECK(is_square_free(load_fixture("cen_ex").ideal()));
  CHECK_FALSE(is_square_free(load_fixture("ex1_i").ideal()));
  CHECK(contains_all_nonzero_squares(load_fixture("ex1_iii").ideal()));
}

TEST_CASE("opposite ideal reverses monomials") {
  auto s = load_fixture("ex1_ii").ideal();
  auto o = opposite_ideal(s);
  const auto& q = o.quiver();
  // c*d in I becomes d°*c°
  CHECK(o.has_monomial(q.arrow_id("d°"), q.arrow_id("c°")));
  CHECK(opposite_ideal(o) == s);
}

TEST_CASE("restriction to a vertex") {
  auto s = load_fixture("counterexample").ideal();
  auto r = restrict_to_vertex(s, s.quiver().vertex_id("y"));
  CHECK(r.quiver().arrow_count() == 1);
  CHECK(r.quiver().arrow_name(0) == "e");
}
