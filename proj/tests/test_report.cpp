#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "paqa/report.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::load_fixture;
using paqa::testing::parse;

TEST_CASE("format helpers") {
  auto q = load_fixture("counterexample").quiver();
  CHECK(format_monomial(q, {0, 0, 2, 3, 3}) == "a^2*c*d^2");
  LinComb c{{{0, 1}, Scalar(1, 0)}, {{1, 0}, Scalar(-1, 0)}};
  CHECK(format_lincomb(q, c) == "a*b - b*a");
}

TEST_CASE("json envelope") {
  RunOptions o;
  o.json = true;
  auto r = run("admissible", load_fixture("ex1_iii"), o);
  CHECK(r.exit_code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "paqa");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["command"] == "admissible");
  CHECK(j["result"]["admissible"] == false);
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("text verdicts") {
  RunOptions o;
  CHECK(run("admissible", load_fixture("ex1_iii"), o).out == "NOT ADMISSIBLE, cycle: c -> d -> c\n");
  auto h = run("hochschild", load_fixture("ex1_ii"), o).out;
  CHECK(h.rfind("finitely generated; HH*/N is trivial", 0) == 0);
  CHECK(h.find("koszul: auto-certified-monomial") != std::string::npos);
}

TEST_CASE("hypothesis failures are input errors") {
  RunOptions o;
  auto r = run("hochschild", load_fixture("cen_ex"), o);
  CHECK(r.exit_code == kExitInputError);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("oracle-only center outside the hypotheses") {
  RunOptions o;
  o.max_degree = 3;
  auto r = run("center", load_fixture("ex1_i"), o);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.find("oracle-only") != std::string::npos);
}

TEST_CASE("oracle-check agrees on the fixtures") {
  RunOptions o;
  o.max_degree = 5;
  for (const char* f : {"ex1_i", "ex1_ii", "ex1_iii", "cen_ex", "counterexample", "final_iii"}) {
    auto r = run("oracle-check", load_fixture(f), o);
    INFO(f << "\n" << r.out);
    CHECK(r.exit_code == kExitOk);
  }
}

TEST_CASE("center verify mode") {
  RunOptions o;
  o.max_degree = 4;
  o.verify = true;
  auto r = run("center", load_fixture("counterexample"), o);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.find("oracle: agrees") != std::string::npos);
}

TEST_CASE("dot graphs") {
  RunOptions o;
  o.graph = "gen-perp";
  auto r = run("dot", load_fixture("ex1_i"), o);
  CHECK(r.out.rfind("digraph", 0) == 0);
  o.graph = "rel";
  CHECK(run("dot", load_fixture("ex1_i"), o).out != r.out);
}

TEST_CASE("unknown command") {
  auto r = run("frobnicate", parse("vertices: x\n"), RunOptions{});
  CHECK(r.exit_code == kExitInputError);
}
