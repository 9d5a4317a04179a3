#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "paqa/quiver.hpp"

namespace paqa {

enum class Flavor { commutative, anticommutative };

std::string to_string(Flavor f);
Flavor flipped(Flavor f);

class IdealError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered pair of arrows; as a monomial generator it is the length-2 path first*second.
struct ArrowPair {
  ArrowId first;
  ArrowId second;
  auto operator<=>(const ArrowPair&) const = default;
};

/// Generators as written by a user, before validation.
struct RawRelation {
  std::vector<std::string> word;  // must have length 2: ab means ab -/+ ba
  Flavor flavor;
};

struct RawGenerators {
  std::optional<Flavor> declared_flavor;
  std::vector<std::vector<std::string>> zero_words;
  std::vector<RawRelation> relations;
  unsigned field_char = 0;
};

/// Quadratic ideal generated by monomials ab and relations ab -/+ ba between
/// distinct loops at one vertex, kept as a minimal generating set.
class IdealSpec {
 public:
  IdealSpec() = default;
  IdealSpec(Quiver quiver, Flavor flavor, std::set<ArrowPair> monomials,
            std::set<ArrowPair> relations, unsigned field_char = 0);

  const Quiver& quiver() const { return quiver_; }
  Flavor flavor() const { return flavor_; }
  unsigned field_char() const { return field_char_; }
  const std::set<ArrowPair>& monomials() const { return monomials_; }
  /// Unordered pairs stored with first < second.
  const std::set<ArrowPair>& relations() const { return relations_; }
  const std::vector<std::string>& notices() const { return notices_; }
  void add_notice(std::string n);

  bool has_monomial(ArrowId a, ArrowId b) const { return monomials_.count({a, b}) != 0; }
  bool has_relation(ArrowId a, ArrowId b) const;
  /// ab = 0 in KQ/I: not composable, or a monomial generator.
  bool pair_vanishes(ArrowId a, ArrowId b) const;
  bool is_monomial_ideal() const { return relations_.empty(); }

  /// -1 for the anticommutative flavor in odd characteristic, else +1.
  int transposition_sign() const;

  bool operator==(const IdealSpec& o) const {
    return quiver_ == o.quiver_ && flavor_ == o.flavor_ && monomials_ == o.monomials_ &&
           relations_ == o.relations_ && field_char_ == o.field_char_;
  }

 private:
  Quiver quiver_;
  Flavor flavor_ = Flavor::commutative;
  std::set<ArrowPair> monomials_;
  std::set<ArrowPair> relations_;
  unsigned field_char_ = 0;
  std::vector<std::string> notices_;
};

enum class KoszulBasis { asserted, auto_certified_monomial, unknown };
std::string to_string(KoszulBasis k);

struct AlgebraPresentation {
  IdealSpec ideal;
  KoszulBasis koszul = KoszulBasis::unknown;

  const Quiver& quiver() const { return ideal.quiver(); }
};

/// Checks and normalizes raw generators into a minimal generating set.
/// A relation ab -/+ ba together with a monomial ab or ba is replaced by both
/// monomials. Characteristic 2 folds the anticommutative flavor into the
/// commutative one (recorded as a notice).
IdealSpec validate_ideal(const Quiver& q, const RawGenerators& raw);

/// Orthogonal ideal: flavor flipped, relations kept, and every nonzero
/// length-2 path outside I and outside the relations becomes a monomial
/// generator. Nonzero squares outside I are included (see notices).
IdealSpec orthogonal(const IdealSpec& spec);

/// Loops a whose square orthogonal() adds, i.e. a*a not in I.
std::vector<ArrowId> squares_added_by_orthogonal(const IdealSpec& spec);

/// I_x over vertex_subquiver(Q, x).
IdealSpec restrict_to_vertex(const IdealSpec& spec, VertexId x);

/// I_o over opposite(Q): ab becomes b°a°, relations keep their pair.
IdealSpec opposite_ideal(const IdealSpec& spec);

bool is_square_free(const IdealSpec& spec);
bool contains_all_nonzero_squares(const IdealSpec& spec);

}  // namespace paqa
