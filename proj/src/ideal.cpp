#include "paqa/ideal.hpp"

#include <algorithm>

namespace paqa {

std::string to_string(Flavor f) {
  return f == Flavor::commutative ? "commutative" : "anticommutative";
}

Flavor flipped(Flavor f) {
  return f == Flavor::commutative ? Flavor::anticommutative : Flavor::commutative;
}

std::string to_string(KoszulBasis k) {
  switch (k) {
    case KoszulBasis::asserted: return "asserted";
    case KoszulBasis::auto_certified_monomial: return "auto-certified-monomial";
    case KoszulBasis::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string pair_name(const Quiver& q, ArrowId a, ArrowId b) {
  return q.arrow_name(a) + "*" + q.arrow_name(b);
}

void check_relation_pair(const Quiver& q, ArrowId a, ArrowId b) {
  if (a == b)
    throw IdealError("relation " + pair_name(q, a, b) +
                     " pairs an arrow with itself; write the square as a zero monomial");
  const auto& A = q.arrow(a);
  const auto& B = q.arrow(b);
  if (!A.is_loop() || !B.is_loop() || A.origin != B.origin)
    throw IdealError("relation " + pair_name(q, a, b) +
                     " must join two loops at the same vertex");
}

}  // namespace

IdealSpec::IdealSpec(Quiver quiver, Flavor flavor, std::set<ArrowPair> monomials,
                     std::set<ArrowPair> relations, unsigned field_char)
    : quiver_(std::move(quiver)), flavor_(flavor), monomials_(std::move(monomials)),
      field_char_(field_char) {
  for (auto [a, b] : monomials_) {
    if (a >= quiver_.arrow_count() || b >= quiver_.arrow_count())
      throw IdealError("monomial generator references an unknown arrow");
    if (!quiver_.composable(a, b))
      throw IdealError("monomial generator " + pair_name(quiver_, a, b) + " is not a path");
  }
  for (auto [a, b] : relations) {
    if (a >= quiver_.arrow_count() || b >= quiver_.arrow_count())
      throw IdealError("relation references an unknown arrow");
    check_relation_pair(quiver_, a, b);
    ArrowPair p{std::min(a, b), std::max(a, b)};
    if (monomials_.count({a, b}) || monomials_.count({b, a}))
      throw IdealError("relation " + pair_name(quiver_, a, b) +
                       " duplicates a monomial generator (generating set is not minimal)");
    relations_.insert(p);
  }
  if (field_char_ == 2) flavor_ = Flavor::commutative;
}

void IdealSpec::add_notice(std::string n) {
  if (std::find(notices_.begin(), notices_.end(), n) == notices_.end())
    notices_.push_back(std::move(n));
}

bool IdealSpec::has_relation(ArrowId a, ArrowId b) const {
  return relations_.count({std::min(a, b), std::max(a, b)}) != 0;
}

bool IdealSpec::pair_vanishes(ArrowId a, ArrowId b) const {
  return !quiver_.composable(a, b) || has_monomial(a, b);
}

int IdealSpec::transposition_sign() const {
  return (flavor_ == Flavor::anticommutative && field_char_ != 2) ? -1 : 1;
}

IdealSpec validate_ideal(const Quiver& q, const RawGenerators& raw) {
  if (raw.field_char == 1) throw IdealError("field characteristic must be 0 or a prime");
  if (raw.field_char > 1) {
    for (unsigned d = 2; d * d <= raw.field_char; ++d)
      if (raw.field_char % d == 0)
        throw IdealError("field characteristic " + std::to_string(raw.field_char) +
                         " is not prime");
  }

  std::optional<Flavor> flavor = raw.declared_flavor;
  for (const auto& r : raw.relations) {
    if (!flavor) flavor = r.flavor;
    if (r.flavor != *flavor)
      throw IdealError("mixed flavors: " + to_string(r.flavor) + " relation in a " +
                       to_string(*flavor) + " ideal");
  }
  Flavor fl = flavor.value_or(Flavor::commutative);

  auto resolve = [&](const std::vector<std::string>& word, const char* what) {
    if (word.size() != 2)
      throw IdealError(std::string(what) + " generators must be quadratic, got a word of length " +
                       std::to_string(word.size()));
    ArrowPair p{};
    for (int i = 0; i < 2; ++i) {
      auto id = q.find_arrow(word[i]);
      if (!id) throw IdealError("unknown arrow '" + word[i] + "'");
      (i == 0 ? p.first : p.second) = *id;
    }
    return p;
  };

  std::set<ArrowPair> monomials;
  for (const auto& w : raw.zero_words) {
    ArrowPair p = resolve(w, "monomial");
    if (!q.composable(p.first, p.second))
      throw IdealError("monomial " + pair_name(q, p.first, p.second) +
                       " is not a path (already zero in KQ)");
    monomials.insert(p);
  }

  std::set<ArrowPair> relations;
  std::vector<std::string> notices;
  for (const auto& r : raw.relations) {
    ArrowPair p = resolve(r.word, "relation");
    check_relation_pair(q, p.first, p.second);
    bool ab = monomials.count(p) != 0;
    bool ba = monomials.count({p.second, p.first}) != 0;
    if (ab || ba) {
      // ab in I and ab -/+ ba in I force ba in I.
      monomials.insert(p);
      monomials.insert({p.second, p.first});
      notices.push_back("relation " + pair_name(q, p.first, p.second) +
                        " combined with a monomial generator; replaced by monomials " +
                        pair_name(q, p.first, p.second) + " and " +
                        pair_name(q, p.second, p.first));
      continue;
    }
    relations.insert({std::min(p.first, p.second), std::max(p.first, p.second)});
  }

  if (raw.field_char == 2 && fl == Flavor::anticommutative) {
    notices.push_back(
        "characteristic 2: anticommutativity relations coincide with commutativity "
        "relations; flavor folded to commutative");
    fl = Flavor::commutative;
  }

  IdealSpec spec(q, fl, std::move(monomials), std::move(relations), raw.field_char);
  for (auto& n : notices) spec.add_notice(std::move(n));
  return spec;
}

std::vector<ArrowId> squares_added_by_orthogonal(const IdealSpec& spec) {
  std::vector<ArrowId> out;
  const auto& q = spec.quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).is_loop() && !spec.has_monomial(a, a)) out.push_back(a);
  return out;
}

IdealSpec orthogonal(const IdealSpec& spec) {
  const auto& q = spec.quiver();
  std::set<ArrowPair> monomials;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
      if (!q.composable(a, b) || spec.has_monomial(a, b)) continue;
      if (a != b && spec.has_relation(a, b)) continue;
      monomials.insert({a, b});
    }
  }
  Flavor fl = spec.field_char() == 2 ? Flavor::commutative : flipped(spec.flavor());
  IdealSpec out(q, fl, std::move(monomials), spec.relations(), spec.field_char());
  if (!squares_added_by_orthogonal(spec).empty())
    out.add_notice(
        "square convention: nonzero squares outside I are generators of the orthogonal ideal");
  return out;
}

IdealSpec restrict_to_vertex(const IdealSpec& spec, VertexId x) {
  const auto& q = spec.quiver();
  if (x >= q.vertex_count()) throw IdealError("unknown vertex");
  Quiver sub = vertex_subquiver(q, x);
  auto map = [&](ArrowId a) { return sub.find_arrow(q.arrow_name(a)); };
  std::set<ArrowPair> monomials, relations;
  for (auto [a, b] : spec.monomials()) {
    auto ma = map(a), mb = map(b);
    if (ma && mb) monomials.insert({*ma, *mb});
  }
  for (auto [a, b] : spec.relations()) {
    auto ma = map(a), mb = map(b);
    if (ma && mb) relations.insert({*ma, *mb});
  }
  return IdealSpec(std::move(sub), spec.flavor(), std::move(monomials), std::move(relations),
                   spec.field_char());
}

IdealSpec opposite_ideal(const IdealSpec& spec) {
  std::set<ArrowPair> monomials;
  for (auto [a, b] : spec.monomials()) monomials.insert({b, a});
  return IdealSpec(opposite(spec.quiver()), spec.flavor(), std::move(monomials),
                   spec.relations(), spec.field_char());
}

bool is_square_free(const IdealSpec& spec) {
  for (auto [a, b] : spec.monomials())
    if (a == b) return false;
  return true;
}

bool contains_all_nonzero_squares(const IdealSpec& spec) {
  const auto& q = spec.quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).is_loop() && !spec.has_monomial(a, a)) return false;
  return true;
}

}  // namespace paqa
