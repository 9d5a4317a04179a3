#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paqa/graph.hpp"
#include "paqa/ideal.hpp"

namespace paqa {

/// Raised when a theorem-mode computation is requested outside the
/// hypotheses it relies on.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Hypotheses {
  bool square_free = false;
  /// orthogonal(spec) admissible, i.e. the generator graph of spec is acyclic.
  bool orthogonal_admissible = false;
  bool hold() const { return square_free && orthogonal_admissible; }
};

Hypotheses check_hypotheses(const IdealSpec& spec);

enum class MissingEdge { none, from_clique, to_clique };
std::string to_string(MissingEdge m);

/// Outcome of the outsider test for a clique of loops in the relation graph:
/// every other arrow b is either hit by directed edges clique->b and b->clique,
/// or joins the clique.
struct CliqueTest {
  bool passes = false;
  std::optional<ArrowId> blocking_outsider;
  MissingEdge missing = MissingEdge::none;
};

CliqueTest test_clique(const MixedGraph& relation, std::span<const ArrowId> clique);

/// Stricter variant: every outsider is annihilated from both sides.
bool clique_annihilates_outsiders(const MixedGraph& relation, std::span<const ArrowId> clique);

enum class CenterClause { commutative_clique, anti_even, anti_odd };
std::string to_string(CenterClause c);

struct CentralMonomial {
  Word word;  // canonical (ascending arrow order)
  VertexId basepoint = 0;
  CenterClause clause = CenterClause::commutative_clique;
  bool operator==(const CentralMonomial&) const = default;
};

struct CenterBasis {
  Flavor flavor = Flavor::commutative;
  std::size_t max_degree = 0;
  /// Degree 0: one identity element per connected component of the quiver.
  std::vector<std::vector<VertexId>> identity_components;
  /// by_degree[d] lists the central monomials of degree d; by_degree[0] is empty.
  std::vector<std::vector<CentralMonomial>> by_degree;

  std::size_t positive_dimension() const;
};

struct CentralityVerdict {
  bool central = false;
  std::string reason;
};

/// Throws HypothesisViolation unless check_hypotheses(spec).hold().
CentralityVerdict is_central_monomial(const IdealSpec& spec, const Path& m);

/// All central monomials of degree 1..max_degree, built clique by clique.
/// Throws HypothesisViolation unless check_hypotheses(spec).hold().
CenterBasis central_monomials_upto(const IdealSpec& spec, std::size_t max_degree);

struct TrivialityVerdict {
  bool trivial = true;
  /// A clique of loops at the vertex supporting a central monomial.
  std::vector<ArrowId> block;
};

/// Whether Z(KQ_x/I_x) = K. Requires a square-free spec.
TrivialityVerdict center_is_trivial_at(const IdealSpec& spec, VertexId x);

CenterBasis even_center_upto(const IdealSpec& spec, std::size_t max_degree);
/// Equal to the even center for square-free ideals; unsupported in characteristic 2.
CenterBasis graded_center_upto(const IdealSpec& spec, std::size_t max_degree);

/// Oriented cycle of Q through arrows that are not loops, as a closed vertex
/// sequence. Central elements supported on such cycles are not loop monomials
/// and are missing from the theorem-mode basis.
std::optional<std::vector<VertexId>> non_loop_cycle(const Quiver& q);

}  // namespace paqa
