#include "paqa/fingen.hpp"

#include <algorithm>
#include <functional>

namespace paqa {

std::string to_string(FinGenStatus s) {
  switch (s) {
    case FinGenStatus::finitely_generated: return "finitely-generated";
    case FinGenStatus::infinitely_generated: return "infinitely-generated";
    case FinGenStatus::trivial: return "trivial";
  }
  return "";
}

std::string to_string(SStatus s) {
  switch (s) {
    case SStatus::set: return "set";
    case SStatus::trivial: return "trivial";
    case SStatus::fail: return "fail";
  }
  return "";
}

namespace {

void require_orthogonal_admissible(const IdealSpec& spec) {
  if (!check_hypotheses(spec).orthogonal_admissible)
    throw HypothesisViolation("orthogonal ideal is not admissible (generator graph has a directed cycle)");
}

/// Whether `target` splits into disjoint members of `parts`.
bool partitions(const std::vector<ArrowId>& target, const std::vector<std::vector<ArrowId>>& parts) {
  std::function<bool(std::vector<ArrowId>)> rec = [&](std::vector<ArrowId> rest) {
    if (rest.empty()) return true;
    for (const auto& p : parts) {
      if (std::find(p.begin(), p.end(), rest.front()) == p.end()) continue;
      if (!std::includes(rest.begin(), rest.end(), p.begin(), p.end())) continue;
      std::vector<ArrowId> left;
      std::set_difference(rest.begin(), rest.end(), p.begin(), p.end(), std::back_inserter(left));
      if (rec(left)) return true;
    }
    return false;
  };
  return rec(target);
}

}  // namespace

SSet necessary_condition_S(const IdealSpec& spec, VertexId x) {
  require_orthogonal_admissible(spec);
  const auto& q = spec.quiver();
  SSet s;
  s.vertex = x;
  auto loops = q.loops_at(x);
  for (ArrowId a : loops) {
    bool ok = std::all_of(loops.begin(), loops.end(),
                          [&](ArrowId b) { return b == a || spec.has_relation(a, b); });
    for (ArrowId c = 0; ok && c < q.arrow_count(); ++c) {
      const auto& arrow = q.arrow(c);
      if (arrow.is_loop()) continue;
      if (arrow.target == x && !spec.has_monomial(c, a)) ok = false;
      if (arrow.origin == x && !spec.has_monomial(a, c)) ok = false;
    }
    if (ok) s.loops.push_back(a);
  }
  if (!s.loops.empty()) s.status = SStatus::set;
  else s.status = center_is_trivial_at(spec, x).trivial ? SStatus::trivial : SStatus::fail;
  return s;
}

FinGenVerdict center_finitely_generated(const IdealSpec& spec) {
  require_orthogonal_admissible(spec);
  const auto& q = spec.quiver();
  MixedGraph rel = relation_graph(spec);
  const bool anti = spec.transposition_sign() == -1;
  FinGenVerdict v;

  bool any_passing = false;
  for (const auto& c : enumerate_cliques(rel, true)) {
    if (!test_clique(rel, c.members).passes) continue;
    any_passing = true;
    if (v.witness) continue;
    for (ArrowId m : c.members) {
      std::vector<ArrowId> single{m};
      auto t = test_clique(rel, single);
      if (t.passes) continue;
      v.witness = FinGenWitness{c.members, m, *t.blocking_outsider, t.missing};
      break;
    }
  }
  for (VertexId x = 0; x < q.vertex_count(); ++x) v.s_sets.push_back(necessary_condition_S(spec, x));

  if (v.witness) {
    v.status = FinGenStatus::infinitely_generated;
    return v;
  }
  if (!any_passing) {
    v.status = FinGenStatus::trivial;
    return v;
  }
  v.status = FinGenStatus::finitely_generated;

  std::vector<std::vector<ArrowId>> odd_parts;
  for (const auto& c : enumerate_cliques(rel, true)) {
    const auto& k = c.members;
    if (k.size() == 1) {
      std::vector<ArrowId> single{k[0]};
      if (!test_clique(rel, single).passes) continue;
      if (!anti) {
        v.generators.push_back({k[0]});
      } else if (clique_annihilates_outsiders(rel, single)) {
        v.generators.push_back({k[0]});
        odd_parts.push_back(k);
      } else {
        v.generators.push_back({k[0], k[0]});
      }
      continue;
    }
    if (!anti || k.size() % 2 == 0 || !clique_annihilates_outsiders(rel, k)) continue;
    if (partitions(k, odd_parts)) continue;
    v.generators.push_back(k);
    odd_parts.push_back(k);
  }
  std::sort(v.generators.begin(), v.generators.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return v;
}

std::vector<Word> degree_generators(const IdealSpec& spec) {
  auto v = center_finitely_generated(spec);
  if (v.status == FinGenStatus::infinitely_generated)
    throw NotFinitelyGenerated("center is infinitely generated");
  return v.generators;
}

}  // namespace paqa
