#include "paqa/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "paqa/normal_form.hpp"

namespace paqa {

struct TruncatedAlgebra::Block {
  std::vector<Word> words;  // sorted
  Eliminator elim;
  std::vector<Word> standard;

  std::size_t index(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    return static_cast<std::size_t>(it - words.begin());
  }
};

std::vector<double> path_counts(const Quiver& q, std::size_t d) {
  std::vector<double> out{static_cast<double>(q.vertex_count())};
  std::vector<double> ending(q.arrow_count(), 1.0);
  for (std::size_t len = 1; len <= d; ++len) {
    if (len > 1) {
      std::vector<double> next(q.arrow_count(), 0.0);
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        for (ArrowId b = 0; b < q.arrow_count(); ++b)
          if (q.composable(b, a)) next[a] += ending[b];
      ending = std::move(next);
    }
    double total = 0;
    for (double x : ending) total += x;
    out.push_back(total);
  }
  return out;
}

TruncatedAlgebra::TruncatedAlgebra(const IdealSpec& spec, std::size_t max_degree,
                                   std::size_t path_cap)
    : spec_(spec), max_degree_(max_degree) {
  auto counts = path_counts(spec.quiver(), max_degree);
  double total = 0;
  for (double c : counts) total += c;
  if (total > static_cast<double>(path_cap))
    throw OracleLimitError("truncation at degree " + std::to_string(max_degree) + " needs about " +
                           std::to_string(static_cast<long long>(total)) + " paths (cap " +
                           std::to_string(path_cap) + ")");
}

TruncatedAlgebra::~TruncatedAlgebra() = default;
TruncatedAlgebra::TruncatedAlgebra(TruncatedAlgebra&&) noexcept = default;
TruncatedAlgebra& TruncatedAlgebra::operator=(TruncatedAlgebra&&) noexcept = default;

void TruncatedAlgebra::check_degree(std::size_t d) const {
  if (d > max_degree_)
    throw std::out_of_range("degree " + std::to_string(d) + " beyond truncation " +
                            std::to_string(max_degree_));
}

TruncatedAlgebra::Key TruncatedAlgebra::key_of(const Word& w) const {
  Key k(spec_.quiver().arrow_count(), 0);
  for (ArrowId a : w) ++k[a];
  return k;
}

const std::vector<TruncatedAlgebra::Key>& TruncatedAlgebra::keys(std::size_t d) {
  check_degree(d);
  if (auto it = keys_cache_.find(d); it != keys_cache_.end()) return it->second;
  const auto& q = spec_.quiver();
  std::set<Key> found;
  Key counts(q.arrow_count(), 0);
  std::function<void(std::optional<ArrowId>, std::size_t)> walk = [&](std::optional<ArrowId> last,
                                                                       std::size_t left) {
    if (left == 0) {
      found.insert(counts);
      return;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      if (last && !q.composable(*last, a)) continue;
      ++counts[a];
      walk(a, left - 1);
      --counts[a];
    }
  };
  if (d > 0) walk(std::nullopt, d);
  return keys_cache_[d] = std::vector<Key>(found.begin(), found.end());
}

TruncatedAlgebra::Block& TruncatedAlgebra::block(const Key& key) {
  if (auto it = blocks_.find(key); it != blocks_.end()) return *it->second;
  const auto& q = spec_.quiver();
  auto b = std::make_unique<Block>();
  b->elim = Eliminator(spec_.field_char());

  std::size_t degree = 0;
  for (auto c : key) degree += c;
  Key left = key;
  Word w;
  std::function<void()> walk = [&]() {
    if (w.size() == degree) {
      b->words.push_back(w);
      return;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      if (left[a] == 0 || (!w.empty() && !q.composable(w.back(), a))) continue;
      --left[a];
      w.push_back(a);
      walk();
      w.pop_back();
      ++left[a];
    }
  };
  walk();

  const unsigned p = spec_.field_char();
  const Scalar one(1, p);
  const Scalar partner(-spec_.transposition_sign(), p);
  for (std::size_t i = 0; i < b->words.size(); ++i) {
    const Word& x = b->words[i];
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
      if (spec_.has_monomial(x[j], x[j + 1])) {
        b->elim.insert({{i, one}});
      } else if (x[j] != x[j + 1] && spec_.has_relation(x[j], x[j + 1])) {
        Word y = x;
        std::swap(y[j], y[j + 1]);
        std::size_t k = b->index(y);
        if (k < i) b->elim.insert({{k, partner}, {i, one}});
        else b->elim.insert({{i, one}, {k, partner}});
      }
    }
  }
  for (std::size_t i = 0; i < b->words.size(); ++i)
    if (!b->elim.is_pivot(i)) b->standard.push_back(b->words[i]);
  return *(blocks_[key] = std::move(b));
}

std::vector<std::vector<Word>> TruncatedAlgebra::basis_blocks(std::size_t d) {
  std::vector<std::vector<Word>> out;
  for (const auto& k : keys(d)) {
    const auto& s = block(k).standard;
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::vector<Word> TruncatedAlgebra::basis(std::size_t d) {
  std::vector<Word> out;
  for (auto& s : basis_blocks(d)) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

LinComb TruncatedAlgebra::reduce(const Word& w) {
  if (w.empty()) throw std::invalid_argument("vertex paths are not reduced by the oracle");
  check_degree(w.size());
  if (!spec_.quiver().is_path(w)) return {};
  Block& b = block(key_of(w));
  SparseVec r = b.elim.reduce({{b.index(w), Scalar(1, spec_.field_char())}});
  LinComb out;
  for (auto& [i, c] : r) out.emplace(b.words[i], c);
  return out;
}

LinComb TruncatedAlgebra::reduce(const LinComb& c) {
  LinComb out;
  for (const auto& [w, coeff] : c) {
    for (const auto& [v, x] : reduce(w)) {
      auto [it, inserted] = out.emplace(v, coeff * x);
      if (!inserted) {
        it->second = it->second + coeff * x;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

LinComb TruncatedAlgebra::multiply(const LinComb& x, const LinComb& y) {
  const auto& q = spec_.quiver();
  LinComb raw;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      if (!q.composable(u.back(), v.front())) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto [it, inserted] = raw.emplace(std::move(w), cu * cv);
      if (!inserted) it->second = it->second + cu * cv;
    }
  }
  std::erase_if(raw, [](const auto& e) { return e.second.is_zero(); });
  return reduce(raw);
}

SparseVec WordSpan::encode(const LinComb& c) {
  SparseVec v;
  for (const auto& [w, x] : c) {
    auto [it, inserted] = index_.emplace(w, index_.size());
    v.emplace_back(it->second, x);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

bool WordSpan::add(const LinComb& c) { return elim_.insert(encode(c)); }

bool WordSpan::contains(const LinComb& c) {
  for (const auto& [w, x] : c)
    if (!index_.count(w)) return false;
  return elim_.reduce(encode(c)).empty();
}

OracleCenter oracle_center_upto(TruncatedAlgebra& alg, std::size_t max_degree, bool graded) {
  const auto& q = alg.spec().quiver();
  const unsigned p = alg.characteristic();
  if (alg.max_degree() < max_degree + 1)
    throw std::invalid_argument("center needs the algebra truncated one degree higher");
  OracleCenter out;
  out.graded = graded;
  auto comps = q.components();
  out.components = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
  out.by_degree.resize(max_degree + 1);

  for (std::size_t d = 1; d <= max_degree; ++d) {
    auto& slice = out.by_degree[d];
    const Scalar twist(graded && d % 2 == 1 ? -1 : 1, p);
    for (const auto& standard : alg.basis_blocks(d)) {
      std::vector<Word> unknowns;
      for (const auto& w : standard)
        if (q.arrow(w.front()).origin == q.arrow(w.back()).target) unknowns.push_back(w);
      if (unknowns.empty()) continue;

      Eliminator eqs(p);
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        std::map<Word, SparseVec> rows;
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
          const Word& s = unknowns[i];
          LinComb diff;
          if (q.composable(a, s.front())) {
            Word as{a};
            as.insert(as.end(), s.begin(), s.end());
            diff = alg.reduce(as);
          }
          if (q.composable(s.back(), a)) {
            Word sa = s;
            sa.push_back(a);
            for (const auto& [w, c] : alg.reduce(sa)) {
              auto [it, inserted] = diff.emplace(w, -(twist * c));
              if (!inserted) it->second = it->second - twist * c;
            }
          }
          for (const auto& [w, c] : diff)
            if (!c.is_zero()) rows[w].emplace_back(i, c);
        }
        for (auto& [w, row] : rows) eqs.insert(std::move(row));
      }
      for (const auto& v : eqs.nullspace(unknowns.size())) {
        LinComb z;
        for (const auto& [i, c] : v) z.emplace(unknowns[i], c);
        if (z.size() != 1) slice.monomial = false;
        slice.basis.push_back(std::move(z));
      }
    }
    std::sort(slice.basis.begin(), slice.basis.end(),
              [](const LinComb& x, const LinComb& y) { return x.begin()->first < y.begin()->first; });
  }
  return out;
}

OracleCenter oracle_center_upto(const IdealSpec& spec, std::size_t max_degree) {
  TruncatedAlgebra alg(spec, max_degree + 1);
  return oracle_center_upto(alg, max_degree, false);
}

OracleCenter oracle_graded_center_upto(const IdealSpec& spec, std::size_t max_degree) {
  TruncatedAlgebra alg(spec, max_degree + 1);
  return oracle_center_upto(alg, max_degree, true);
}

QuotientBasis quotient_basis_upto(const IdealSpec& spec, std::size_t max_degree) {
  const auto& q = spec.quiver();
  TruncatedAlgebra alg(spec, max_degree);
  NormalForm nf(spec);
  QuotientBasis out;
  out.dims.push_back(q.vertex_count());
  out.by_degree.emplace_back();
  for (std::size_t d = 1; d <= max_degree; ++d) {
    out.by_degree.push_back(alg.basis(d));
    out.dims.push_back(out.by_degree.back().size());

    std::set<Word> canonical;
    Word w;
    std::function<void()> walk = [&]() {
      if (w.size() == d) {
        auto c = nf.canonical(w);
        LinComb r = alg.reduce(w);
        if (c) {
          canonical.insert(c->word);
          if (r.size() != 1 || r.begin()->first != c->word ||
              !(r.begin()->second == Scalar(c->sign, spec.field_char())))
            out.normal_form_agrees = false;
        } else if (!r.empty()) {
          out.normal_form_agrees = false;
        }
        return;
      }
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (!w.empty() && !q.composable(w.back(), a)) continue;
        w.push_back(a);
        walk();
        w.pop_back();
      }
    };
    walk();
    if (!std::equal(canonical.begin(), canonical.end(), out.by_degree.back().begin(),
                    out.by_degree.back().end()))
      out.normal_form_agrees = false;
  }
  return out;
}

NilpotenceReport oracle_nilpotence_check(const IdealSpec& spec, const CenterBasis& basis,
                                         std::size_t max_degree) {
  TruncatedAlgebra alg(spec, max_degree);
  NilpotenceReport report;
  for (std::size_t d = 1; d < basis.by_degree.size() && d <= max_degree; ++d) {
    for (const auto& m : basis.by_degree[d]) {
      std::size_t k = max_degree / d;
      Word power;
      for (std::size_t i = 0; i < k; ++i) power.insert(power.end(), m.word.begin(), m.word.end());
      ++report.checked;
      if (alg.in_ideal(power)) report.failures.push_back({m.word, k});
    }
  }
  return report;
}

FgEvidence oracle_fg_evidence(const IdealSpec& spec, std::size_t max_degree) {
  TruncatedAlgebra alg(spec, max_degree + 1);
  OracleCenter z = oracle_center_upto(alg, max_degree, false);
  FgEvidence ev;
  ev.max_degree = max_degree;
  ev.center_dims.assign(max_degree + 1, 0);
  ev.decomposable_dims.assign(max_degree + 1, 0);
  ev.center_dims[0] = z.components;
  ev.decomposable_dims[0] = z.components;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    WordSpan products(spec.field_char());
    for (std::size_t i = 1; i < d; ++i)
      for (const auto& x : z.by_degree[i].basis)
        for (const auto& y : z.by_degree[d - i].basis) {
          auto xy = alg.multiply(x, y);
          if (!xy.empty()) products.add(xy);
        }
    ev.center_dims[d] = z.by_degree[d].basis.size();
    ev.decomposable_dims[d] = products.rank();
    if (ev.center_dims[d] > ev.decomposable_dims[d]) ev.new_generator_degrees.push_back(d);
  }
  return ev;
}

GenerationCheck oracle_generation_check(const IdealSpec& spec, const std::vector<Word>& generators,
                                        std::size_t max_degree) {
  TruncatedAlgebra alg(spec, max_degree + 1);
  OracleCenter z = oracle_center_upto(alg, max_degree, false);
  const Scalar one(1, spec.field_char());
  std::vector<std::vector<LinComb>> sub(max_degree + 1);
  GenerationCheck out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    WordSpan span(spec.field_char());
    auto keep = [&](LinComb c) {
      if (!c.empty() && span.add(c)) sub[d].push_back(std::move(c));
    };
    for (const auto& g : generators) {
      if (g.size() == d) keep(alg.reduce(g));
      if (g.size() >= d) continue;
      LinComb gc{{g, one}};
      for (const auto& rest : sub[d - g.size()]) keep(alg.multiply(gc, rest));
    }
    for (const auto& c : z.by_degree[d].basis) {
      if (!span.contains(c)) {
        out.generates = false;
        if (!out.first_gap_degree) out.first_gap_degree = d;
      }
    }
  }
  return out;
}

CenterComparison compare_centers(TruncatedAlgebra& alg, const CenterBasis& theorem,
                                 const OracleCenter& oracle) {
  CenterComparison out;
  const std::size_t top = std::min(theorem.by_degree.size(), oracle.by_degree.size());
  for (std::size_t d = 1; d < top; ++d) {
    WordSpan t(alg.characteristic()), o(alg.characteristic()), both(alg.characteristic());
    for (const auto& m : theorem.by_degree[d]) {
      auto r = alg.reduce(m.word);
      t.add(r);
      both.add(r);
    }
    for (const auto& c : oracle.by_degree[d].basis) {
      o.add(c);
      both.add(c);
    }
    bool same = t.rank() == o.rank() && both.rank() == o.rank() &&
                t.rank() == theorem.by_degree[d].size();
    if (!same) {
      out.agree = false;
      out.disagreeing_degrees.push_back(d);
    }
  }
  return out;
}

}  // namespace paqa
