#include <catch2/catch_amalgamated.hpp>

#include "paqa/normal_form.hpp"
#include "paqa/report.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::parse;
using paqa::testing::word;

TEST_CASE("randomized engines agree with the oracle") {
  paqa::testing::PropertyConfig cfg;
  cfg.seed = 7;
  cfg.instances = 60;
  cfg.max_degree = 5;
  cfg.shorter_path_words = 0;
  auto r = paqa::testing::run_property_suite(cfg);
  CHECK(r.commutative > 0);
  CHECK(r.anticommutative > 0);
  CHECK(r.hypotheses_held > 0);
  for (const auto* t : {&r.admissibility, &r.center_loop_only, &r.involution, &r.square_central,
                        &r.oracle_check_loop_only}) {
    INFO((t->examples.empty() ? std::string() : t->examples.front()));
    CHECK(t->ok());
    CHECK(t->checked > 0);
  }
}

TEST_CASE("random specs are reproducible") {
  std::mt19937 a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(paqa::testing::random_spec_text(a) == paqa::testing::random_spec_text(b));
}

TEST_CASE("deleting a related letter can land in the ideal") {
  // x a y z survives, x y z ~ y x z contains x z.
  auto s = parse("vertices: v\narrows: x: v->v, a: v->v, y: v->v, z: v->v\nideal commutative\n"
                 "comm: a*y, x*y\nzero: x*z\n")
               .ideal();
  const auto& q = s.quiver();
  NormalForm nf(s);
  CHECK_FALSE(nf.in_ideal(word(q, "x a y z")));
  CHECK(s.has_relation(q.arrow_id("a"), q.arrow_id("y")));
  CHECK(nf.in_ideal(word(q, "x y z")));
}

TEST_CASE("central cycles through non-loop arrows escape the theorem basis") {
  using paqa::testing::load_fixture;
  RunOptions o;
  o.max_degree = 4;
  // Both satisfy the theorem hypotheses; fe and ef + fe are central.
  for (const char* text : {"vertices: x, y\narrows: a: y->y, e: y->x, f: x->y\nzero: a*e, e*f\n",
                           "vertices: x, y\narrows: e: x->y, f: y->x\n"}) {
    auto doc = parse(text);
    CHECK(check_hypotheses(doc.ideal()).hold());
    CHECK(non_loop_cycle(doc.quiver()).has_value());
    CHECK(central_monomials_upto(doc.ideal(), 4).positive_dimension() == 0);
    auto z = oracle_center_upto(doc.ideal(), 4);
    CHECK(z.by_degree[2].basis.size() == 1);
    CHECK(run("oracle-check", doc, o).exit_code == kExitDisagreement);
  }
  CHECK_FALSE(non_loop_cycle(load_fixture("counterexample").quiver()));
}
