#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paqa/fingen.hpp"
#include "paqa/ideal.hpp"

namespace paqa {

class KoszulError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Asserted stays asserted; otherwise quadratic monomial ideals are certified.
KoszulBasis effective_koszul_basis(const AlgebraPresentation& pres);

/// KQ^op / (I_o)^perp. Throws KoszulError when I is not admissible.
AlgebraPresentation koszul_dual(const AlgebraPresentation& pres);

enum class HochschildStatus { finitely_generated, infinitely_generated, undecided };
std::string to_string(HochschildStatus s);

struct HochschildVerdict {
  AlgebraPresentation dual;
  KoszulBasis koszul = KoszulBasis::unknown;
  HochschildStatus status = HochschildStatus::undecided;
  /// HH*/N is K: the dual's center is trivial at every vertex.
  bool trivial = false;
  std::optional<FinGenVerdict> dual_center;
  std::vector<std::string> evidence;
};

/// Finite generation of HH*(L)/N through the center of the Koszul dual.
HochschildVerdict hochschild_fg(const AlgebraPresentation& pres);

}  // namespace paqa
