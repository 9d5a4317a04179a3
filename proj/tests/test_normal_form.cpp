#include <catch2/catch_amalgamated.hpp>

#include "paqa/normal_form.hpp"
#include "support.hpp"

using namespace paqa;
using paqa::testing::load_fixture;
using paqa::testing::word;

TEST_CASE("monomial membership through transpositions") {
  auto s = load_fixture("ex1_i").ideal();
  const auto& q = s.quiver();
  NormalForm nf(s);
  CHECK(nf.in_ideal(word(q, "a a")));
  CHECK_FALSE(nf.in_ideal(word(q, "a b")));
  CHECK(nf.in_ideal(word(q, "a b c")));  // abc ~ bac, ac = 0
  CHECK_FALSE(nf.in_ideal(word(q, "b c")));
  CHECK(nf.in_ideal(word(q, "a b a")));
}

TEST_CASE("canonical words are lexicographically least") {
  auto s = load_fixture("counterexample").ideal();
  const auto& q = s.quiver();
  NormalForm nf(s);
  auto c = nf.canonical(word(q, "d c a"));
  REQUIRE(c);
  CHECK(c->word == word(q, "a c d"));
  CHECK(c->sign == 1);
}

TEST_CASE("anticommutative swaps carry a sign") {
  auto s = load_fixture("cen_ex").ideal();
  const auto& q = s.quiver();
  NormalForm nf(s);
  auto c = nf.canonical(word(q, "b a"));
  REQUIRE(c);
  CHECK(c->word == word(q, "a b"));
  CHECK(c->sign == -1);
  auto c2 = nf.canonical(word(q, "b b a a"));
  REQUIRE(c2);
  CHECK(c2->word == word(q, "a a b b"));
  CHECK(c2->sign == 1);
}

TEST_CASE("equivalence class members") {
  auto s = load_fixture("cen_ex").ideal();
  const auto& q = s.quiver();
  auto cl = equivalence_class(s, Path::word(q, word(q, "a b a")));
  CHECK(cl.members.size() == 3);
  CHECK(cl.representative == word(q, "a a b"));
  CHECK_FALSE(cl.zero);
  CHECK(cl.members.at(word(q, "a b a")) == -cl.members.at(word(q, "a a b")));
}

TEST_CASE("vertex paths and empty words") {
  auto s = load_fixture("ex1_i").ideal();
  NormalForm nf(s);
  CHECK_THROWS_AS(nf.in_ideal({}), std::invalid_argument);
  CHECK_FALSE(monomial_in_ideal(s, Path::vertex(0)));
  CHECK(canonical_form(s, Path::vertex(1))->word.empty());
}
