#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "paqa/field.hpp"

namespace paqa {

/// Sparse vector: (column, nonzero coefficient), columns strictly ascending.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// a + factor * b
SparseVec axpy(const SparseVec& a, const Scalar& factor, const SparseVec& b);

/// Incremental row echelon form. The pivot of a row is its largest column and
/// pivot rows are scaled so that entry is 1.
class Eliminator {
 public:
  explicit Eliminator(unsigned characteristic = 0) : p_(characteristic) {}

  /// Remainder of v after clearing every pivot column.
  SparseVec reduce(SparseVec v) const;
  /// True when v was independent of the rows so far.
  bool insert(SparseVec v);
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  std::size_t rank() const { return rows_.size(); }
  unsigned characteristic() const { return p_; }

  /// Kernel basis of the inserted rows over columns [0, n). The vector for a
  /// free column f has a 1 at f and entries only at larger pivot columns.
  std::vector<SparseVec> nullspace(std::size_t n) const;

 private:
  unsigned p_;
  std::map<std::size_t, SparseVec> rows_;
};

}  // namespace paqa
