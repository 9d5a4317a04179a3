#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paqa/center.hpp"
#include "paqa/field.hpp"
#include "paqa/ideal.hpp"
#include "paqa/linear.hpp"

namespace paqa {

/// Raised when a truncation would enumerate more paths than the configured cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear combination of words.
using LinComb = std::map<Word, Scalar>;

inline constexpr std::size_t kDefaultMaxDegree = 8;
inline constexpr std::size_t kDefaultPathCap = 400000;

/// Number of composable paths of each length 0..d.
std::vector<double> path_counts(const Quiver& q, std::size_t d);

/// KQ/I truncated at a degree, computed by exact elimination over all paths
/// with a fixed arrow multiset. Standard (non-pivot) words form the basis.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(const IdealSpec& spec, std::size_t max_degree,
                   std::size_t path_cap = kDefaultPathCap);
  ~TruncatedAlgebra();
  TruncatedAlgebra(TruncatedAlgebra&&) noexcept;
  TruncatedAlgebra& operator=(TruncatedAlgebra&&) noexcept;

  const IdealSpec& spec() const { return spec_; }
  std::size_t max_degree() const { return max_degree_; }
  unsigned characteristic() const { return spec_.field_char(); }

  /// Standard words of degree d, lexicographically sorted. d <= max_degree.
  std::vector<Word> basis(std::size_t d);
  std::size_t dimension(std::size_t d) { return basis(d).size(); }
  /// Standard words of degree d grouped by arrow multiset, in key order.
  std::vector<std::vector<Word>> basis_blocks(std::size_t d);

  /// Normal form of a word or combination in terms of standard words.
  LinComb reduce(const Word& w);
  LinComb reduce(const LinComb& c);
  bool in_ideal(const Word& w) { return reduce(w).empty(); }
  LinComb multiply(const LinComb& x, const LinComb& y);

  struct Block;

 private:
  using Key = std::vector<std::size_t>;
  Block& block(const Key& key);
  Key key_of(const Word& w) const;
  const std::vector<Key>& keys(std::size_t d);
  void check_degree(std::size_t d) const;

  IdealSpec spec_;
  std::size_t max_degree_;
  std::map<Key, std::unique_ptr<Block>> blocks_;
  std::map<std::size_t, std::vector<Key>> keys_cache_;
};

/// Central elements of one degree; each basis vector is in reduced form.
struct OracleCenterSlice {
  std::vector<LinComb> basis;
  bool monomial = true;  // every basis vector is a single word
};

struct OracleCenter {
  std::size_t components = 0;  // degree-0 dimension
  std::vector<OracleCenterSlice> by_degree;  // index 0 unused
  bool graded = false;
};

/// Solves az = za (graded: az = (-1)^d za) for every arrow, and ez = ze for
/// every vertex, degree by degree. Uses an algebra truncated at max_degree + 1.
OracleCenter oracle_center_upto(const IdealSpec& spec, std::size_t max_degree);
OracleCenter oracle_graded_center_upto(const IdealSpec& spec, std::size_t max_degree);
OracleCenter oracle_center_upto(TruncatedAlgebra& algebra, std::size_t max_degree, bool graded);

/// Degree-by-degree bases of KQ/I.
struct QuotientBasis {
  std::vector<std::size_t> dims;              // dims[0] = number of vertices
  std::vector<std::vector<Word>> by_degree;   // by_degree[0] is empty
  /// Every path reduces to its signed normal-form canonical word (or to zero
  /// exactly when the normal form says so).
  bool normal_form_agrees = true;
};
QuotientBasis quotient_basis_upto(const IdealSpec& spec, std::size_t max_degree);

struct NilpotenceFailure {
  Word monomial;
  std::size_t power = 0;
};
struct NilpotenceReport {
  std::size_t checked = 0;
  std::vector<NilpotenceFailure> failures;
  bool pass() const { return failures.empty(); }
};
/// Each listed monomial p satisfies p^floor(D/deg p) != 0.
NilpotenceReport oracle_nilpotence_check(const IdealSpec& spec, const CenterBasis& basis,
                                         std::size_t max_degree);

struct FgEvidence {
  std::size_t max_degree = 0;
  std::vector<std::size_t> new_generator_degrees;
  /// Per degree: center dimension and dimension of products of lower degrees.
  std::vector<std::size_t> center_dims;
  std::vector<std::size_t> decomposable_dims;
};
/// Flags degrees whose central elements are not all products of lower-degree ones.
FgEvidence oracle_fg_evidence(const IdealSpec& spec, std::size_t max_degree);

struct GenerationCheck {
  bool generates = true;
  std::optional<std::size_t> first_gap_degree;
};
/// Whether the given central words generate every oracle central element of degree <= D.
GenerationCheck oracle_generation_check(const IdealSpec& spec, const std::vector<Word>& generators,
                                        std::size_t max_degree);

/// Span equality of the theorem-mode monomials and the oracle center, per degree.
struct CenterComparison {
  bool agree = true;
  std::vector<std::size_t> disagreeing_degrees;
};
CenterComparison compare_centers(TruncatedAlgebra& algebra, const CenterBasis& theorem,
                                 const OracleCenter& oracle);

/// Rank-based span helper over words.
class WordSpan {
 public:
  explicit WordSpan(unsigned characteristic) : elim_(characteristic) {}
  bool add(const LinComb& c);
  bool contains(const LinComb& c);
  std::size_t rank() const { return elim_.rank(); }

 private:
  SparseVec encode(const LinComb& c);
  std::map<Word, std::size_t> index_;
  Eliminator elim_;
};

}  // namespace paqa
