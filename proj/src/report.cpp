#include "paqa/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "paqa/center.hpp"
#include "paqa/fingen.hpp"
#include "paqa/graph.hpp"
#include "paqa/koszul.hpp"
#include "paqa/normal_form.hpp"

namespace paqa {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "admissible", "orthogonal",
                                              "center",   "fingen",     "dual",
                                              "hochschild", "oracle-check", "dot"};
  return names;
}

std::string format_monomial(const Quiver& q, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += q.arrow_name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_lincomb(const Quiver& q, const LinComb& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [w, x] : c) {
    std::string coeff = x.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (coeff != "1") out += coeff + "*";
    out += format_monomial(q, w);
  }
  return out;
}

namespace {

struct Outcome {
  Json result = Json::object();
  std::string text;
  std::vector<std::string> notices;
  int exit_code = kExitOk;
};

std::vector<std::string> arrow_names(const Quiver& q, const std::vector<ArrowId>& ids) {
  std::vector<std::string> out;
  for (ArrowId a : ids) out.push_back(q.arrow_name(a));
  return out;
}

std::string brace(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> pair_strings(const Quiver& q, const std::set<ArrowPair>& pairs) {
  std::vector<std::string> out;
  for (auto [a, b] : pairs) out.push_back(q.arrow_name(a) + "*" + q.arrow_name(b));
  return out;
}

Json ideal_json(const IdealSpec& spec) {
  const auto& q = spec.quiver();
  Json j;
  j["flavor"] = to_string(spec.flavor());
  j["char"] = spec.field_char();
  j["monomials"] = pair_strings(q, spec.monomials());
  j["relations"] = pair_strings(q, spec.relations());
  return j;
}

Json quiver_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"origin", q.vertex_name(a.origin)},
                      {"target", q.vertex_name(a.target)}});
  j["arrows"] = arrows;
  return j;
}

Json presentation_json(const AlgebraPresentation& pres) {
  Json j = quiver_json(pres.quiver());
  j["ideal"] = ideal_json(pres.ideal);
  j["koszul"] = to_string(pres.koszul);
  return j;
}

Json hypotheses_json(const Hypotheses& h) {
  return {{"square_free", h.square_free}, {"orthogonal_admissible", h.orthogonal_admissible}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string hypotheses_line(const Hypotheses& h) {
  return "hypotheses: square-free " + yes_no(h.square_free) + ", orthogonal admissible " +
         yes_no(h.orthogonal_admissible) + "\n";
}

std::string hypothesis_banner(const Hypotheses& h) {
  std::string why = !h.square_free ? "ideal is not square-free"
                                   : "orthogonal ideal is not admissible";
  return "outside theorem hypotheses (" + why + "); results are oracle-only";
}

void append_notices(Outcome& o, const std::vector<std::string>& ns) {
  for (const auto& n : ns)
    if (std::find(o.notices.begin(), o.notices.end(), n) == o.notices.end()) o.notices.push_back(n);
}

/// Loops whose square is central while the loop itself is not.
void cycle_notice(const Quiver& q, Outcome& o) {
  auto c = non_loop_cycle(q);
  if (!c) return;
  std::vector<std::string> names;
  for (VertexId v : *c) names.push_back(q.vertex_name(v));
  append_notices(o, {"oriented cycle " + join(names, " -> ") +
                     " through non-loop arrows: central elements supported on it are not loop monomials "
                     "and are not listed in theorem mode (compare with oracle-check)"});
}

void parity_notices(const IdealSpec& spec, Outcome& o) {
  if (spec.transposition_sign() != -1) return;
  const auto& q = spec.quiver();
  MixedGraph rel = relation_graph(spec);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (!q.arrow(a).is_loop()) continue;
    std::vector<ArrowId> single{a};
    if (!test_clique(rel, single).passes || clique_annihilates_outsiders(rel, single)) continue;
    std::string outsider;
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
      if (b == a) continue;
      if (!(rel.has_directed(a, b) && rel.has_directed(b, a))) {
        outsider = q.arrow_name(b);
        break;
      }
    }
    const std::string n = q.arrow_name(a);
    append_notices(o, {"parity discrepancy: " + n + "^2 is central but odd powers of " + n +
                       " are not; outsider " + outsider + " does not annihilate " + n +
                       " from both sides"});
  }
}

Json words_json(const Quiver& q, const std::vector<Word>& words) {
  Json arr = Json::array();
  for (const auto& w : words) arr.push_back(format_monomial(q, w));
  return arr;
}

Json witness_json(const Quiver& q, const FinGenWitness& w) {
  return {{"clique", arrow_names(q, w.clique)},
          {"failing_member", q.arrow_name(w.failing_member)},
          {"blocking_outsider", q.arrow_name(w.blocking_outsider)},
          {"missing_edge", to_string(w.missing)}};
}

std::string witness_text(const Quiver& q, const FinGenWitness& w) {
  return "clique " + brace(arrow_names(q, w.clique)) + " passes, member " +
         q.arrow_name(w.failing_member) + " fails alone: outsider " +
         q.arrow_name(w.blocking_outsider) + " lacks the " + to_string(w.missing) + " edge";
}

Json fingen_json(const Quiver& q, const FinGenVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["generators"] = words_json(q, v.generators);
  j["witness"] = v.witness ? witness_json(q, *v.witness) : Json(nullptr);
  Json s = Json::array();
  for (const auto& set : v.s_sets)
    s.push_back({{"vertex", q.vertex_name(set.vertex)},
                 {"status", to_string(set.status)},
                 {"loops", arrow_names(q, set.loops)}});
  j["s_sets"] = s;
  return j;
}

std::string fingen_text(const Quiver& q, const FinGenVerdict& v) {
  std::string t;
  switch (v.status) {
    case FinGenStatus::trivial: t += "center is trivial (Z = K)\n"; break;
    case FinGenStatus::finitely_generated: {
      std::vector<std::string> g;
      for (const auto& w : v.generators) g.push_back(format_monomial(q, w));
      t += "finitely generated by " + join(g) + "\n";
      break;
    }
    case FinGenStatus::infinitely_generated:
      t += "infinitely generated\nwitness: " + witness_text(q, *v.witness) + "\n";
      break;
  }
  for (const auto& s : v.s_sets) {
    t += "S(" + q.vertex_name(s.vertex) + "): ";
    if (s.status == SStatus::set) t += brace(arrow_names(q, s.loops)) + "\n";
    else t += to_string(s.status) + "\n";
  }
  return t;
}

Json center_basis_json(const Quiver& q, const CenterBasis& b) {
  Json degrees = Json::array();
  for (std::size_t d = 1; d < b.by_degree.size(); ++d) {
    Json elems = Json::array();
    for (const auto& m : b.by_degree[d])
      elems.push_back({{"monomial", format_monomial(q, m.word)},
                       {"basepoint", q.vertex_name(m.basepoint)},
                       {"clause", to_string(m.clause)}});
    degrees.push_back({{"degree", d}, {"elements", elems}});
  }
  return degrees;
}

std::string center_basis_text(const Quiver& q, const CenterBasis& b, const std::string& label) {
  std::string t;
  for (std::size_t d = 1; d < b.by_degree.size(); ++d) {
    std::vector<std::string> names;
    for (const auto& m : b.by_degree[d]) names.push_back(format_monomial(q, m.word));
    t += label + "degree " + std::to_string(d) + ": " + (names.empty() ? "-" : join(names)) + "\n";
  }
  return t;
}

Json identity_json(const Quiver& q, const std::vector<std::vector<VertexId>>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) {
    Json names = Json::array();
    for (VertexId v : c) names.push_back(q.vertex_name(v));
    arr.push_back(names);
  }
  return arr;
}

Json oracle_center_json(const Quiver& q, const OracleCenter& z) {
  Json degrees = Json::array();
  for (std::size_t d = 1; d < z.by_degree.size(); ++d) {
    Json elems = Json::array();
    for (const auto& c : z.by_degree[d].basis) elems.push_back(format_lincomb(q, c));
    degrees.push_back({{"degree", d}, {"elements", elems}, {"monomial", z.by_degree[d].monomial}});
  }
  return degrees;
}

// ---- commands ----

Outcome cmd_validate(const SpecDocument& doc) {
  Outcome o;
  const auto& spec = doc.ideal();
  const auto& q = doc.quiver();
  o.result["valid"] = true;
  o.result["connected"] = q.is_connected();
  o.result["square_free"] = is_square_free(spec);
  o.result["contains_all_nonzero_squares"] = contains_all_nonzero_squares(spec);
  o.result["normalized"] = print(doc.presentation);
  std::ostringstream t;
  t << "valid: " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows, "
    << to_string(spec.flavor()) << " ideal with " << spec.monomials().size() << " monomial and "
    << spec.relations().size() << " relation generators\n";
  t << "square-free: " << yes_no(is_square_free(spec)) << "\n";
  o.text = t.str();
  append_notices(o, spec.notices());
  return o;
}

Outcome cmd_admissible(const SpecDocument& doc) {
  Outcome o;
  const auto& spec = doc.ideal();
  auto v = is_admissible(spec);
  IdealSpec perp = orthogonal(spec);
  MixedGraph g = generator_graph(perp);
  o.result["admissible"] = v.admissible;
  if (v.admissible) {
    o.result["cycle"] = nullptr;
    o.result["nilpotency_bound"] = v.nilpotency_bound;
    o.text = "ADMISSIBLE, every path of length " + std::to_string(v.nilpotency_bound) +
             " lies in I\n";
  } else {
    o.result["cycle"] = arrow_names(spec.quiver(), v.cycle);
    o.result["nilpotency_bound"] = nullptr;
    o.text = "NOT ADMISSIBLE, cycle: " + format_cycle(g, v.cycle) + "\n";
  }
  append_notices(o, spec.notices());
  append_notices(o, perp.notices());
  return o;
}

Outcome cmd_orthogonal(const SpecDocument& doc) {
  Outcome o;
  IdealSpec perp = orthogonal(doc.ideal());
  o.result["ideal"] = ideal_json(perp);
  o.result["squares_added"] = arrow_names(doc.quiver(), squares_added_by_orthogonal(doc.ideal()));
  o.result["presentation"] = print({perp, KoszulBasis::unknown});
  o.text = print({perp, KoszulBasis::unknown});
  append_notices(o, doc.ideal().notices());
  append_notices(o, perp.notices());
  return o;
}

Outcome cmd_center(const SpecDocument& doc, std::size_t D, bool verify) {
  Outcome o;
  const auto& spec = doc.ideal();
  const auto& q = doc.quiver();
  Hypotheses h = check_hypotheses(spec);
  o.result["hypotheses"] = hypotheses_json(h);
  o.result["max_degree"] = D;
  std::string t = hypotheses_line(h);
  append_notices(o, spec.notices());

  if (!h.hold()) {
    OracleCenter z = oracle_center_upto(spec, D);
    o.result["mode"] = "oracle-only";
    o.result["components"] = z.components;
    o.result["degrees"] = oracle_center_json(q, z);
    append_notices(o, {hypothesis_banner(h)});
    t += "center (oracle-only, degrees 1.." + std::to_string(D) + ")\n";
    t += "degree 0: " + std::to_string(z.components) + " identity element(s)\n";
    for (std::size_t d = 1; d <= D; ++d) {
      std::vector<std::string> e;
      for (const auto& c : z.by_degree[d].basis) e.push_back(format_lincomb(q, c));
      t += "degree " + std::to_string(d) + ": " + (e.empty() ? "-" : join(e)) + "\n";
    }
    o.text = t;
    return o;
  }

  CenterBasis b = central_monomials_upto(spec, D);
  o.result["mode"] = "theorem";
  o.result["identity_components"] = identity_json(q, b.identity_components);
  o.result["degrees"] = center_basis_json(q, b);
  CenterBasis even = even_center_upto(spec, D);
  o.result["even_center"] = center_basis_json(q, even);
  if (spec.field_char() != 2) {
    o.result["graded_center"] = center_basis_json(q, graded_center_upto(spec, D));
  } else {
    o.result["graded_center"] = nullptr;
    append_notices(o, {"graded center not identified in characteristic 2"});
  }
  Json triv = Json::array();
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    auto tv = center_is_trivial_at(spec, x);
    triv.push_back({{"vertex", q.vertex_name(x)}, {"trivial", tv.trivial},
                    {"block", arrow_names(q, tv.block)}});
  }
  o.result["local_triviality"] = triv;

  t += "center (theorem mode, degrees 1.." + std::to_string(D) + ")\n";
  t += "degree 0: " + std::to_string(b.identity_components.size()) + " identity element(s)\n";
  t += center_basis_text(q, b, "");
  for (const auto& x : triv)
    t += "vertex " + x["vertex"].get<std::string>() + ": " +
         (x["trivial"].get<bool>() ? std::string("trivial")
                                   : "nontrivial, block " +
                                         brace(x["block"].get<std::vector<std::string>>())) +
         "\n";
  if (verify) {
    TruncatedAlgebra alg(spec, D + 1);
    OracleCenter z = oracle_center_upto(alg, D, false);
    bool agree = compare_centers(alg, b, z).agree;
    o.result["oracle"] = {{"components", z.components}, {"degrees", oracle_center_json(q, z)},
                          {"agrees", agree}};
    t += std::string("oracle: ") + (agree ? "agrees" : "DISAGREES") + " with the theorem-mode basis\n";
    if (!agree) o.exit_code = kExitDisagreement;
  }
  o.text = t;
  parity_notices(spec, o);
  cycle_notice(q, o);
  return o;
}

Outcome cmd_fingen(const SpecDocument& doc, std::size_t D) {
  Outcome o;
  const auto& spec = doc.ideal();
  const auto& q = doc.quiver();
  Hypotheses h = check_hypotheses(spec);
  o.result["hypotheses"] = hypotheses_json(h);
  std::string t = hypotheses_line(h);
  append_notices(o, spec.notices());

  if (!h.orthogonal_admissible) {
    FgEvidence ev = oracle_fg_evidence(spec, D);
    o.result["mode"] = "oracle-only";
    o.result["max_degree"] = D;
    o.result["new_generator_degrees"] = ev.new_generator_degrees;
    o.result["center_dims"] = ev.center_dims;
    o.result["decomposable_dims"] = ev.decomposable_dims;
    append_notices(o, {hypothesis_banner(h)});
    std::vector<std::string> ds;
    for (auto d : ev.new_generator_degrees) ds.push_back(std::to_string(d));
    t += "oracle evidence up to degree " + std::to_string(D) + ": new generators in degrees " +
         (ds.empty() ? "-" : join(ds)) + "\n";
    o.text = t;
    return o;
  }

  FinGenVerdict v = center_finitely_generated(spec);
  o.result["mode"] = "theorem";
  Json fj = fingen_json(q, v);
  for (auto it = fj.begin(); it != fj.end(); ++it) o.result[it.key()] = it.value();
  if (spec.transposition_sign() == -1 && v.status == FinGenStatus::finitely_generated) {
    bool even = std::all_of(v.generators.begin(), v.generators.end(),
                            [](const Word& w) { return w.size() % 2 == 0; });
    o.result["even_center_is_center"] = even;
    if (even) t += "Z^ev = Z\n";
  } else {
    o.result["even_center_is_center"] = nullptr;
  }
  o.text = t + fingen_text(q, v);
  parity_notices(spec, o);
  cycle_notice(q, o);
  return o;
}

Outcome cmd_dual(const SpecDocument& doc) {
  Outcome o;
  AlgebraPresentation dual = koszul_dual(doc.presentation);
  o.result["dual"] = presentation_json(dual);
  o.result["presentation"] = print(dual);
  o.text = print(dual);
  append_notices(o, doc.ideal().notices());
  append_notices(o, dual.ideal.notices());
  return o;
}

Outcome cmd_hochschild(const SpecDocument& doc) {
  Outcome o;
  HochschildVerdict v = hochschild_fg(doc.presentation);
  const auto& dq = v.dual.quiver();
  o.result["status"] = to_string(v.status);
  o.result["trivial"] = v.trivial;
  o.result["koszul"] = to_string(v.koszul);
  o.result["hypotheses"] = {{"admissible", true},
                            {"dual_square_free", is_square_free(v.dual.ideal)},
                            {"koszul", to_string(v.koszul)}};
  o.result["dual"] = presentation_json(v.dual);
  o.result["dual_center"] = v.dual_center ? fingen_json(dq, *v.dual_center) : Json(nullptr);
  o.result["evidence"] = v.evidence;

  std::string t;
  switch (v.status) {
    case HochschildStatus::finitely_generated:
      if (v.trivial) {
        t = "finitely generated; HH*/N is trivial\n";
      } else {
        std::vector<std::string> g;
        for (const auto& w : v.dual_center->generators) g.push_back(format_monomial(dq, w));
        t = "finitely generated; dual center generated by " + join(g) + "\n";
      }
      break;
    case HochschildStatus::infinitely_generated:
      t = "infinitely generated; witness in the dual: " +
          witness_text(dq, *v.dual_center->witness) + "\n";
      break;
    case HochschildStatus::undecided:
      t = "undecided: Koszulity unknown\n";
      break;
  }
  t += "koszul: " + to_string(v.koszul) + "\n";
  o.text = t;
  append_notices(o, doc.ideal().notices());
  append_notices(o, v.dual.ideal.notices());
  if (v.dual_center) parity_notices(v.dual.ideal, o);
  return o;
}

Outcome cmd_dot(const SpecDocument& doc, const std::string& graph) {
  Outcome o;
  const auto& spec = doc.ideal();
  MixedGraph g;
  if (graph == "gen") g = generator_graph(spec);
  else if (graph == "gen-perp") g = generator_graph(orthogonal(spec));
  else if (graph == "rel") g = relation_graph(spec);
  else throw std::invalid_argument("unknown graph '" + graph + "' (expected gen, gen-perp or rel)");
  o.text = to_dot(g, graph);
  o.result["graph"] = graph;
  o.result["dot"] = o.text;
  return o;
}

/// Degrees where the witness clique forces an indecomposable central monomial.
std::vector<std::size_t> forced_new_degrees(const IdealSpec& spec, const FinGenWitness& w,
                                            std::size_t D) {
  const std::size_t k = w.clique.size();
  std::vector<std::size_t> out;
  if (spec.transposition_sign() == 1) {
    for (std::size_t d = k; d <= D; ++d) out.push_back(d);
    return out;
  }
  MixedGraph rel = relation_graph(spec);
  if (k % 2 == 1 && clique_annihilates_outsiders(rel, w.clique)) {
    for (std::size_t d = k; d <= D; d += 2) out.push_back(d);
  } else {
    for (std::size_t d = 2 * k; d <= D; d += 2) out.push_back(d);
  }
  return out;
}

Outcome cmd_oracle_check(const SpecDocument& doc, std::size_t D) {
  Outcome o;
  const auto& spec = doc.ideal();
  const auto& q = doc.quiver();
  Hypotheses h = check_hypotheses(spec);
  o.result["hypotheses"] = hypotheses_json(h);
  o.result["max_degree"] = D;
  Json checks = Json::array();
  bool any_fail = false;
  std::string t;

  auto record = [&](const std::string& name, const std::function<std::pair<std::string, std::string>()>& f) {
    std::string status, detail;
    try {
      std::tie(status, detail) = f();
    } catch (const OracleLimitError& e) {
      status = "skipped";
      detail = e.what();
    }
    if (status == "fail") any_fail = true;
    checks.push_back({{"name", name}, {"status", status}, {"detail", detail}});
    t += name + ": " + status + (detail.empty() ? "" : " (" + detail + ")") + "\n";
  };
  auto verdict = [](bool ok, std::string detail = "") {
    return std::make_pair(std::string(ok ? "pass" : "fail"), std::move(detail));
  };

  record("normal-form-vs-elimination", [&] {
    auto qb = quotient_basis_upto(spec, D);
    std::vector<std::string> dims;
    for (auto d : qb.dims) dims.push_back(std::to_string(d));
    return verdict(qb.normal_form_agrees, "dims " + join(dims, ","));
  });
  record("admissibility-vs-nilpotency", [&] {
    const std::size_t L = q.arrow_count() + 1;
    TruncatedAlgebra alg(spec, L);
    bool vanishes = alg.dimension(L) == 0;
    bool adm = is_admissible(spec).admissible;
    return verdict(vanishes == adm, "degree " + std::to_string(L) + (vanishes ? " vanishes" : " survives"));
  });
  record("orthogonal-involution", [&] {
    IdealSpec back = orthogonal(orthogonal(spec));
    return verdict(back.monomials() == spec.monomials() && back.relations() == spec.relations() &&
                   back.flavor() == spec.flavor());
  });
  record("center-theorem-vs-oracle", [&]() -> std::pair<std::string, std::string> {
    if (!h.hold()) return {"skipped", "outside theorem hypotheses"};
    TruncatedAlgebra alg(spec, D + 1);
    OracleCenter z = oracle_center_upto(alg, D, false);
    auto cmp = compare_centers(alg, central_monomials_upto(spec, D), z);
    bool monomial = std::all_of(z.by_degree.begin(), z.by_degree.end(),
                                [](const OracleCenterSlice& s) { return s.monomial; });
    std::string detail = monomial ? "oracle basis is monomial" : "oracle basis is not monomial";
    return verdict(cmp.agree && monomial, detail);
  });
  record("graded-center-vs-even-center", [&]() -> std::pair<std::string, std::string> {
    if (!h.hold()) return {"skipped", "outside theorem hypotheses"};
    if (spec.field_char() == 2) return {"skipped", "characteristic 2"};
    TruncatedAlgebra alg(spec, D + 1);
    OracleCenter zg = oracle_center_upto(alg, D, true);
    return verdict(compare_centers(alg, even_center_upto(spec, D), zg).agree);
  });
  record("fingen-vs-oracle", [&]() -> std::pair<std::string, std::string> {
    if (!h.hold()) return {"skipped", "outside theorem hypotheses"};
    FinGenVerdict v = center_finitely_generated(spec);
    if (v.status == FinGenStatus::infinitely_generated) {
      FgEvidence ev = oracle_fg_evidence(spec, D);
      auto need = forced_new_degrees(spec, *v.witness, D);
      bool ok = std::includes(ev.new_generator_degrees.begin(), ev.new_generator_degrees.end(),
                              need.begin(), need.end());
      std::vector<std::string> ds;
      for (auto d : ev.new_generator_degrees) ds.push_back(std::to_string(d));
      return verdict(ok, "new generators in degrees " + (ds.empty() ? std::string("-") : join(ds, ",")));
    }
    auto g = oracle_generation_check(spec, v.generators, D);
    return verdict(g.generates, g.generates ? "generators span the oracle center"
                                            : "gap at degree " + std::to_string(*g.first_gap_degree));
  });
  record("nilpotence", [&]() -> std::pair<std::string, std::string> {
    if (!h.hold()) return {"skipped", "outside theorem hypotheses"};
    auto r = oracle_nilpotence_check(spec, central_monomials_upto(spec, D), D);
    return verdict(r.pass(), std::to_string(r.checked) + " monomials checked");
  });

  o.result["checks"] = checks;
  o.result["all_agree"] = !any_fail;
  t += any_fail ? "DISAGREEMENT between engines\n" : "all engines agree\n";
  o.text = t;
  if (any_fail) o.exit_code = kExitDisagreement;
  append_notices(o, spec.notices());
  if (!h.hold()) append_notices(o, {hypothesis_banner(h)});
  return o;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

RunResult run(const std::string& command, const SpecDocument& doc, const RunOptions& options) {
  RunResult r;
  Outcome o;
  Json error = nullptr;
  try {
    if (command == "validate") o = cmd_validate(doc);
    else if (command == "admissible") o = cmd_admissible(doc);
    else if (command == "orthogonal") o = cmd_orthogonal(doc);
    else if (command == "center") o = cmd_center(doc, options.max_degree, options.verify);
    else if (command == "fingen") o = cmd_fingen(doc, options.max_degree);
    else if (command == "dual") o = cmd_dual(doc);
    else if (command == "hochschild") o = cmd_hochschild(doc);
    else if (command == "oracle-check") o = cmd_oracle_check(doc, options.max_degree);
    else if (command == "dot") o = cmd_dot(doc, options.graph);
    else throw std::invalid_argument("unknown command '" + command + "'");
  } catch (const InternalConsistencyError& e) {
    o = Outcome{};
    o.exit_code = kExitDisagreement;
    error = error_json("internal-consistency", e.what());
  } catch (const HypothesisViolation& e) {
    o = Outcome{};
    o.exit_code = kExitInputError;
    error = error_json("hypothesis", e.what());
  } catch (const OracleLimitError& e) {
    o = Outcome{};
    o.exit_code = kExitInputError;
    error = error_json("oracle-limit", std::string(e.what()) + "; lower --max-degree");
  } catch (const std::exception& e) {
    o = Outcome{};
    o.exit_code = kExitInputError;
    error = error_json("input", e.what());
  }
  r.exit_code = o.exit_code;

  if (options.json) {
    Json j;
    j["tool"] = "paqa";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = presentation_json(doc.presentation);
    j["exit_code"] = o.exit_code;
    if (!error.is_null()) j["error"] = error;
    else j["result"] = o.result;
    j["notices"] = o.notices;
    j["warnings"] = doc.warnings;
    r.out = j.dump(2) + "\n";
  } else if (!error.is_null()) {
    r.err = "error: " + error["message"].get<std::string>() + "\n";
  } else {
    r.out = o.text;
    // DOT output must stay parseable, so its diagnostics go to stderr.
    std::string& diag = command == "dot" ? r.err : r.out;
    for (const auto& n : o.notices) diag += "notice: " + n + "\n";
    for (const auto& w : doc.warnings) diag += "warning: " + w + "\n";
  }
  if (options.json && !error.is_null()) r.err = "error: " + error["message"].get<std::string>() + "\n";
  return r;
}

}  // namespace paqa
