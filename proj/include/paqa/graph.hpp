#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paqa/ideal.hpp"

namespace paqa {

enum class GraphKind { generator, relation };

/// Graph on the arrows of a quiver with directed and undirected edges.
/// Vertex i of the graph is arrow i of the underlying quiver.
struct MixedGraph {
  GraphKind kind = GraphKind::generator;
  std::vector<std::string> names;
  /// Basepoint for loops, nullopt for other arrows.
  std::vector<std::optional<VertexId>> loop_base;
  std::set<std::pair<std::size_t, std::size_t>> directed;
  /// Stored with first < second.
  std::set<std::pair<std::size_t, std::size_t>> undirected;

  std::size_t size() const { return names.size(); }
  bool has_directed(std::size_t a, std::size_t b) const { return directed.count({a, b}) != 0; }
  bool has_undirected(std::size_t a, std::size_t b) const {
    return undirected.count({std::min(a, b), std::max(a, b)}) != 0;
  }
  bool operator==(const MixedGraph&) const = default;
};

struct Clique {
  std::vector<std::size_t> members;  // ascending
  bool loops_only = false;
  bool maximal = false;
  bool operator==(const Clique&) const = default;
};

/// Directed edge a->b per monomial generator ab, undirected edge per relation.
MixedGraph generator_graph(const IdealSpec& spec);

/// Directed edge a->b whenever ab = 0 in KQ/I (not composable or a generator);
/// undirected edge per relation.
MixedGraph relation_graph(const IdealSpec& spec);

struct CycleSearch {
  bool found = false;
  /// Closed vertex sequence, first == last, when found.
  std::vector<std::size_t> cycle;
};

/// DFS over directed edges only, vertices and neighbours in ascending order.
CycleSearch find_directed_cycle(const MixedGraph& g);

struct AdmissibilityVerdict {
  bool admissible = false;
  /// Directed cycle in the generator graph of the orthogonal ideal.
  std::vector<ArrowId> cycle;
  /// Every path of this length lies in I when admissible.
  std::size_t nilpotency_bound = 0;
};

/// Admissible iff the generator graph of orthogonal(spec) has no directed cycle.
AdmissibilityVerdict is_admissible(const IdealSpec& spec);

/// All cliques of the undirected edge set, sorted by (size, members).
std::vector<Clique> enumerate_cliques(const MixedGraph& g, bool loops_only);

std::string to_dot(const MixedGraph& g, const std::string& graph_name = "G");

std::string format_cycle(const MixedGraph& g, const std::vector<std::size_t>& cycle);

}  // namespace paqa
