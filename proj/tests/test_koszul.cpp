#include <catch2/catch_amalgamated.hpp>

#include "paqa/koszul.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::load_fixture;

TEST_CASE("koszul dual of Ex1(i)") {
  auto d = koszul_dual(load_fixture("ex1_i").presentation);
  const auto& q = d.quiver();
  CHECK(d.ideal.flavor() == Flavor::anticommutative);
  CHECK(q.arrow_name(0) == "a°");
  CHECK(d.ideal.relations() == std::set<ArrowPair>{{q.arrow_id("a°"), q.arrow_id("b°")}});
  // b*c survives in I, so c°*b° is a monomial of the dual
  CHECK(d.ideal.has_monomial(q.arrow_id("c°"), q.arrow_id("b°")));
  CHECK(d.koszul == KoszulBasis::asserted);
}

TEST_CASE("dual requires an admissible ideal") {
  CHECK_THROWS_AS(koszul_dual(load_fixture("ex1_iii").presentation), KoszulError);
}

TEST_CASE("monomial ideals are auto-certified") {
  CHECK(effective_koszul_basis(load_fixture("ex1_ii").presentation) ==
        KoszulBasis::auto_certified_monomial);
  CHECK(effective_koszul_basis(load_fixture("cen_ex").presentation) == KoszulBasis::unknown);
  CHECK(effective_koszul_basis(load_fixture("ex1_i").presentation) == KoszulBasis::asserted);
}

TEST_CASE("Hochschild verdicts of the final examples") {
  auto i = hochschild_fg(load_fixture("ex1_i").presentation);
  CHECK(i.status == HochschildStatus::infinitely_generated);
  auto ii = hochschild_fg(load_fixture("ex1_ii").presentation);
  CHECK(ii.status == HochschildStatus::finitely_generated);
  CHECK(ii.trivial);
  CHECK(ii.koszul == KoszulBasis::auto_certified_monomial);
  auto iii = hochschild_fg(load_fixture("final_iii").presentation);
  CHECK(iii.status == HochschildStatus::finitely_generated);
  REQUIRE(iii.dual_center);
  const auto& q = iii.dual.quiver();
  CHECK(iii.dual_center->generators == std::vector<Word>{{q.arrow_id("a°")}, {q.arrow_id("b°")}});
}

TEST_CASE("unknown Koszulity leaves the verdict undecided") {
  auto doc = paqa::testing::parse(
      "vertices: x, y\narrows: a: x->x, b: x->x, c: x->y\nideal commutative\n"
      "zero: a*a, b*b, a*c\ncomm: a*b\n");
  auto v = hochschild_fg(doc.presentation);
  CHECK(v.status == HochschildStatus::undecided);
  CHECK(v.koszul == KoszulBasis::unknown);
  CHECK_THROWS_AS(hochschild_fg(load_fixture("cen_ex").presentation), KoszulError);
}
