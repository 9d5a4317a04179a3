#include "paqa/koszul.hpp"

#include "paqa/graph.hpp"

namespace paqa {

std::string to_string(HochschildStatus s) {
  switch (s) {
    case HochschildStatus::finitely_generated: return "finitely-generated";
    case HochschildStatus::infinitely_generated: return "infinitely-generated";
    case HochschildStatus::undecided: return "undecided";
  }
  return "";
}

KoszulBasis effective_koszul_basis(const AlgebraPresentation& pres) {
  if (pres.koszul == KoszulBasis::asserted) return KoszulBasis::asserted;
  if (pres.ideal.is_monomial_ideal()) return KoszulBasis::auto_certified_monomial;
  return KoszulBasis::unknown;
}

AlgebraPresentation koszul_dual(const AlgebraPresentation& pres) {
  auto adm = is_admissible(pres.ideal);
  if (!adm.admissible)
    throw KoszulError("Koszul dual requires an admissible ideal; cycle: " +
                      format_cycle(generator_graph(orthogonal(pres.ideal)), adm.cycle));
  AlgebraPresentation dual;
  dual.ideal = orthogonal(opposite_ideal(pres.ideal));
  KoszulBasis k = effective_koszul_basis(pres);
  dual.koszul = k == KoszulBasis::unknown && dual.ideal.is_monomial_ideal()
                    ? KoszulBasis::auto_certified_monomial
                    : k;
  return dual;
}

HochschildVerdict hochschild_fg(const AlgebraPresentation& pres) {
  HochschildVerdict v;
  v.dual = koszul_dual(pres);
  v.koszul = effective_koszul_basis(pres);
  if (v.koszul == KoszulBasis::unknown) {
    v.status = HochschildStatus::undecided;
    v.evidence.push_back("Koszulity unknown: assert it with 'koszul: asserted' to obtain a verdict");
    return v;
  }
  v.dual_center = center_finitely_generated(v.dual.ideal);
  switch (v.dual_center->status) {
    case FinGenStatus::finitely_generated:
      v.status = HochschildStatus::finitely_generated;
      break;
    case FinGenStatus::trivial:
      v.status = HochschildStatus::finitely_generated;
      v.trivial = true;
      break;
    case FinGenStatus::infinitely_generated:
      v.status = HochschildStatus::infinitely_generated;
      break;
  }
  v.evidence = {
      "HH*(L)/N is isomorphic to Z_gr(L!)/N_Z for Koszul L",
      "Z_gr(L!)/N_Z = Z^ev(L!) since the dual ideal has an admissible orthogonal",
      "Z^ev(L!) is finitely generated iff Z(L!) is",
      "Z(L!) is " + to_string(v.dual_center->status),
  };
  return v;
}

}  // namespace paqa
