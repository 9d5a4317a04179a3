#include "paqa/center.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "paqa/normal_form.hpp"

namespace paqa {

std::string to_string(MissingEdge m) {
  switch (m) {
    case MissingEdge::none: return "none";
    case MissingEdge::from_clique: return "clique-to-outsider";
    case MissingEdge::to_clique: return "outsider-to-clique";
  }
  return "none";
}

std::string to_string(CenterClause c) {
  switch (c) {
    case CenterClause::commutative_clique: return "commutative-clique";
    case CenterClause::anti_even: return "anti-even";
    case CenterClause::anti_odd: return "anti-odd";
  }
  return "";
}

Hypotheses check_hypotheses(const IdealSpec& spec) {
  Hypotheses h;
  h.square_free = is_square_free(spec);
  h.orthogonal_admissible = is_admissible(orthogonal(spec)).admissible;
  return h;
}

std::size_t CenterBasis::positive_dimension() const {
  std::size_t n = 0;
  for (const auto& slice : by_degree) n += slice.size();
  return n;
}

CliqueTest test_clique(const MixedGraph& relation, std::span<const ArrowId> clique) {
  CliqueTest t;
  auto in_clique = [&](std::size_t b) {
    return std::find(clique.begin(), clique.end(), b) != clique.end();
  };
  for (std::size_t b = 0; b < relation.size(); ++b) {
    if (in_clique(b)) continue;
    bool extends = std::all_of(clique.begin(), clique.end(),
                               [&](ArrowId a) { return relation.has_undirected(a, b); });
    if (extends) continue;
    bool out = std::any_of(clique.begin(), clique.end(),
                           [&](ArrowId a) { return relation.has_directed(a, b); });
    bool in = std::any_of(clique.begin(), clique.end(),
                          [&](ArrowId a) { return relation.has_directed(b, a); });
    if (out && in) continue;
    t.passes = false;
    t.blocking_outsider = b;
    t.missing = out ? MissingEdge::to_clique : MissingEdge::from_clique;
    return t;
  }
  t.passes = true;
  return t;
}

bool clique_annihilates_outsiders(const MixedGraph& relation, std::span<const ArrowId> clique) {
  for (std::size_t b = 0; b < relation.size(); ++b) {
    if (std::find(clique.begin(), clique.end(), b) != clique.end()) continue;
    bool out = std::any_of(clique.begin(), clique.end(),
                           [&](ArrowId a) { return relation.has_directed(a, b); });
    bool in = std::any_of(clique.begin(), clique.end(),
                          [&](ArrowId a) { return relation.has_directed(b, a); });
    if (!out || !in) return false;
  }
  return true;
}

namespace {

void require_hypotheses(const IdealSpec& spec) {
  auto h = check_hypotheses(spec);
  if (!h.square_free) throw HypothesisViolation("ideal is not square-free");
  if (!h.orthogonal_admissible)
    throw HypothesisViolation("orthogonal ideal is not admissible (generator graph has a directed cycle)");
}

bool is_clique(const MixedGraph& g, const std::vector<ArrowId>& support) {
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (!g.has_undirected(support[i], support[j])) return false;
  return true;
}

/// Calls emit(multiplicities) for every way to write degree as a sum of
/// parts.size() multiplicities each >= min_part with the given parity step.
void for_each_multiplicity(std::size_t parts, std::size_t degree, std::size_t min_part,
                           std::size_t step,
                           const std::function<void(const std::vector<std::size_t>&)>& emit) {
  std::vector<std::size_t> m(parts, min_part);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == parts) {
      if (left >= min_part && (left - min_part) % step == 0) {
        m[i] = left;
        emit(m);
      }
      return;
    }
    for (std::size_t v = min_part; v + min_part * (parts - i - 1) <= left; v += step) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts == 0 || degree < parts * min_part) return;
  rec(0, degree);
}

}  // namespace

CentralityVerdict is_central_monomial(const IdealSpec& spec, const Path& m) {
  require_hypotheses(spec);
  if (m.is_vertex()) return {false, "degree-0 paths are handled by the identity component"};
  const auto& q = spec.quiver();
  NormalForm nf(spec);
  if (nf.in_ideal(m.arrows())) return {false, "monomial is zero in KQ/I"};

  std::map<ArrowId, std::size_t> mult;
  for (ArrowId a : m.arrows()) ++mult[a];
  std::vector<ArrowId> support;
  for (auto [a, n] : mult) support.push_back(a);
  for (ArrowId a : support)
    if (!q.arrow(a).is_loop() || q.arrow(a).origin != m.origin())
      return {false, "arrow " + q.arrow_name(a) + " is not a loop at the basepoint"};

  MixedGraph rel = relation_graph(spec);
  if (!is_clique(rel, support)) return {false, "support is not a clique of loops in the relation graph"};

  auto describe_block = [&](const CliqueTest& t) {
    return "outsider " + q.arrow_name(*t.blocking_outsider) + " lacks the " +
           to_string(t.missing) + " edge and does not extend the clique";
  };

  if (spec.transposition_sign() == 1) {
    auto t = test_clique(rel, support);
    if (!t.passes) return {false, describe_block(t)};
    return {true, "support is a clique whose outsiders are annihilated or extend it"};
  }

  const bool odd_degree = m.degree() % 2 == 1;
  for (auto [a, n] : mult) {
    if ((n % 2 == 1) != odd_degree)
      return {false, std::string("multiplicity of ") + q.arrow_name(a) + " has the wrong parity for " +
                         (odd_degree ? "odd" : "even") + " degree"};
  }
  if (!odd_degree) {
    auto t = test_clique(rel, support);
    if (!t.passes) return {false, describe_block(t)};
    return {true, "even multiplicities; outsiders anticommute with the clique or are annihilated"};
  }
  if (!clique_annihilates_outsiders(rel, support))
    return {false, "odd degree requires every outsider to be annihilated from both sides"};
  return {true, "odd multiplicities; every outsider annihilated from both sides"};
}

CenterBasis central_monomials_upto(const IdealSpec& spec, std::size_t max_degree) {
  require_hypotheses(spec);
  const auto& q = spec.quiver();
  CenterBasis basis;
  basis.flavor = spec.flavor();
  basis.max_degree = max_degree;
  basis.by_degree.assign(max_degree + 1, {});

  auto comps = q.components();
  std::size_t n_comp = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
  basis.identity_components.assign(n_comp, {});
  for (VertexId v = 0; v < q.vertex_count(); ++v) basis.identity_components[comps[v]].push_back(v);

  MixedGraph rel = relation_graph(spec);
  const bool anti = spec.transposition_sign() == -1;

  auto emit_words = [&](const std::vector<ArrowId>& clique, std::size_t min_part, std::size_t step,
                        CenterClause clause) {
    VertexId base = q.arrow(clique.front()).origin;
    for (std::size_t d = 1; d <= max_degree; ++d) {
      for_each_multiplicity(clique.size(), d, min_part, step, [&](const std::vector<std::size_t>& m) {
        Word w;
        for (std::size_t i = 0; i < clique.size(); ++i) w.insert(w.end(), m[i], clique[i]);
        basis.by_degree[d].push_back({std::move(w), base, clause});
      });
    }
  };

  for (const auto& c : enumerate_cliques(rel, true)) {
    const auto& k = c.members;
    bool passes = test_clique(rel, k).passes;
    if (!anti) {
      if (passes) emit_words(k, 1, 1, CenterClause::commutative_clique);
      continue;
    }
    if (passes) emit_words(k, 2, 2, CenterClause::anti_even);
    if (k.size() % 2 == 1 && clique_annihilates_outsiders(rel, k))
      emit_words(k, 1, 2, CenterClause::anti_odd);
  }
  for (auto& slice : basis.by_degree)
    std::sort(slice.begin(), slice.end(),
              [](const CentralMonomial& a, const CentralMonomial& b) { return a.word < b.word; });
  return basis;
}

TrivialityVerdict center_is_trivial_at(const IdealSpec& spec, VertexId x) {
  if (!is_square_free(spec)) throw HypothesisViolation("ideal is not square-free");
  IdealSpec local = restrict_to_vertex(spec, x);
  const auto& lq = local.quiver();
  VertexId lx = lq.vertex_id(spec.quiver().vertex_name(x));
  MixedGraph rel = relation_graph(local);
  TrivialityVerdict v;
  for (const auto& c : enumerate_cliques(rel, true)) {
    if (lq.arrow(c.members.front()).origin != lx) continue;
    if (test_clique(rel, c.members).passes) {
      v.trivial = false;
      for (ArrowId a : c.members) v.block.push_back(spec.quiver().arrow_id(lq.arrow_name(a)));
      return v;
    }
  }
  return v;
}

CenterBasis even_center_upto(const IdealSpec& spec, std::size_t max_degree) {
  CenterBasis b = central_monomials_upto(spec, max_degree);
  for (std::size_t d = 1; d < b.by_degree.size(); d += 2) b.by_degree[d].clear();
  return b;
}

CenterBasis graded_center_upto(const IdealSpec& spec, std::size_t max_degree) {
  if (spec.field_char() == 2)
    throw HypothesisViolation("graded center identification needs characteristic different from 2");
  return even_center_upto(spec, max_degree);
}

std::optional<std::vector<VertexId>> non_loop_cycle(const Quiver& q) {
  MixedGraph g;
  g.names = q.vertices();
  g.loop_base.assign(q.vertex_count(), std::nullopt);
  for (const auto& a : q.arrows())
    if (!a.is_loop()) g.directed.insert({a.origin, a.target});
  auto c = find_directed_cycle(g);
  if (!c.found) return std::nullopt;
  return c.cycle;
}

}  // namespace paqa
