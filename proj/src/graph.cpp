#include "paqa/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace paqa {

namespace {

MixedGraph arrow_vertices(const Quiver& q, GraphKind kind) {
  MixedGraph g;
  g.kind = kind;
  for (const auto& a : q.arrows()) {
    g.names.push_back(a.name);
    g.loop_base.push_back(a.is_loop() ? std::optional<VertexId>(a.origin) : std::nullopt);
  }
  return g;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

MixedGraph generator_graph(const IdealSpec& spec) {
  MixedGraph g = arrow_vertices(spec.quiver(), GraphKind::generator);
  for (auto [a, b] : spec.monomials()) g.directed.insert({a, b});
  for (auto [a, b] : spec.relations()) g.undirected.insert({a, b});
  return g;
}

MixedGraph relation_graph(const IdealSpec& spec) {
  const auto& q = spec.quiver();
  MixedGraph g = arrow_vertices(q, GraphKind::relation);
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b = 0; b < q.arrow_count(); ++b)
      if (spec.pair_vanishes(a, b)) g.directed.insert({a, b});
  for (auto [a, b] : spec.relations()) g.undirected.insert({a, b});
  return g;
}

CycleSearch find_directed_cycle(const MixedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : g.directed) out[a].push_back(b);  // set order keeps these sorted

  enum class Mark { white, grey, black };
  std::vector<Mark> mark(n, Mark::white);
  std::vector<std::size_t> stack;
  CycleSearch result;

  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    mark[v] = Mark::grey;
    stack.push_back(v);
    for (std::size_t w : out[v]) {
      if (mark[w] == Mark::grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        result.cycle.assign(it, stack.end());
        result.cycle.push_back(w);
        result.found = true;
        return true;
      }
      if (mark[w] == Mark::white && visit(w)) return true;
    }
    stack.pop_back();
    mark[v] = Mark::black;
    return false;
  };

  for (std::size_t v = 0; v < n; ++v)
    if (mark[v] == Mark::white && visit(v)) break;
  return result;
}

AdmissibilityVerdict is_admissible(const IdealSpec& spec) {
  AdmissibilityVerdict v;
  auto search = find_directed_cycle(generator_graph(orthogonal(spec)));
  v.admissible = !search.found;
  v.cycle = search.cycle;
  v.nilpotency_bound = spec.quiver().arrow_count() + 1;
  return v;
}

std::vector<Clique> enumerate_cliques(const MixedGraph& g, bool loops_only) {
  const std::size_t n = g.size();
  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < n; ++v)
    if (!loops_only || g.loop_base[v]) eligible.push_back(v);

  std::vector<Clique> out;
  std::vector<std::size_t> current;
  // Extend only with larger vertices so every clique is produced once.
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < eligible.size(); ++i) {
      std::size_t v = eligible[i];
      bool adjacent = std::all_of(current.begin(), current.end(),
                                  [&](std::size_t u) { return g.has_undirected(u, v); });
      if (!adjacent) continue;
      current.push_back(v);
      out.push_back({current, loops_only, false});
      grow(i + 1);
      current.pop_back();
    }
  };
  grow(0);

  for (auto& c : out) {
    c.maximal = std::none_of(eligible.begin(), eligible.end(), [&](std::size_t v) {
      if (std::binary_search(c.members.begin(), c.members.end(), v)) return false;
      return std::all_of(c.members.begin(), c.members.end(),
                         [&](std::size_t u) { return g.has_undirected(u, v); });
    });
  }
  std::sort(out.begin(), out.end(), [](const Clique& a, const Clique& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::string to_dot(const MixedGraph& g, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  for (const auto& name : g.names) os << "  " << quoted(name) << ";\n";
  for (auto [a, b] : g.directed)
    os << "  " << quoted(g.names[a]) << " -> " << quoted(g.names[b]) << ";\n";
  for (auto [a, b] : g.undirected)
    os << "  " << quoted(g.names[a]) << " -> " << quoted(g.names[b]) << " [dir=none];\n";
  os << "}\n";
  return os.str();
}

std::string format_cycle(const MixedGraph& g, const std::vector<std::size_t>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += g.names.at(cycle[i]);
  }
  return out;
}

}  // namespace paqa
