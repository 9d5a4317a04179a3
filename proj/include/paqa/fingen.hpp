#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paqa/center.hpp"

namespace paqa {

enum class FinGenStatus { finitely_generated, infinitely_generated, trivial };
std::string to_string(FinGenStatus s);

/// A clique passing the outsider test with a member that fails it alone.
struct FinGenWitness {
  std::vector<ArrowId> clique;
  ArrowId failing_member = 0;
  ArrowId blocking_outsider = 0;
  MissingEdge missing = MissingEdge::none;
};

enum class SStatus { set, trivial, fail };
std::string to_string(SStatus s);

struct SSet {
  VertexId vertex = 0;
  SStatus status = SStatus::trivial;
  std::vector<ArrowId> loops;
};

struct FinGenVerdict {
  FinGenStatus status = FinGenStatus::trivial;
  /// Minimal central generators of Z+ (empty unless finitely generated).
  std::vector<Word> generators;
  std::optional<FinGenWitness> witness;
  std::vector<SSet> s_sets;
};

/// Throws HypothesisViolation unless orthogonal(spec) is admissible.
FinGenVerdict center_finitely_generated(const IdealSpec& spec);

/// Loops at x related to every other loop at x whose products with incoming
/// and outgoing non-loop arrows lie in I. Status fail: the center at x is
/// nontrivial while no such loop exists.
SSet necessary_condition_S(const IdealSpec& spec, VertexId x);

class NotFinitelyGenerated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Generators of a finitely generated center; empty for a trivial one.
/// Throws NotFinitelyGenerated for an infinitely generated center.
std::vector<Word> degree_generators(const IdealSpec& spec);

}  // namespace paqa
