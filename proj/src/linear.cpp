#include "paqa/linear.hpp"

namespace paqa {

SparseVec axpy(const SparseVec& a, const Scalar& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Scalar s = a[i].second + factor * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec Eliminator::reduce(SparseVec v) const {
  std::size_t i = v.size();
  while (i > 0) {
    --i;
    auto it = rows_.find(v[i].first);
    if (it == rows_.end()) continue;
    const std::size_t col = v[i].first;
    v = axpy(v, -v[i].second, it->second);
    // Everything at or above col is settled; resume below it.
    i = 0;
    while (i < v.size() && v[i].first < col) ++i;
  }
  return v;
}

bool Eliminator::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = v.back().second.inverse();
  for (auto& e : v) e.second = e.second * inv;
  const std::size_t col = v.back().first;
  rows_.emplace(col, std::move(v));
  return true;
}

std::vector<SparseVec> Eliminator::nullspace(std::size_t n) const {
  // Fully reduce every pivot row; rows only reference smaller columns, so
  // ascending order sees each referenced row already reduced.
  std::map<std::size_t, SparseVec> reduced;
  for (const auto& [col, row] : rows_) {
    SparseVec r(row.begin(), row.end() - 1);
    std::size_t i = r.size();
    while (i > 0) {
      --i;
      auto it = reduced.find(r[i].first);
      if (it == reduced.end()) continue;
      const std::size_t c = r[i].first;
      Scalar f = -r[i].second;
      SparseVec tail(it->second.begin(), it->second.end() - 1);
      SparseVec without;
      for (auto& e : r)
        if (e.first != c) without.push_back(e);
      r = axpy(without, f, tail);
      i = 0;
      while (i < r.size() && r[i].first < c) ++i;
    }
    r.emplace_back(col, Scalar(1, p_));
    reduced.emplace(col, std::move(r));
  }

  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (rows_.count(f)) continue;
    SparseVec v{{f, Scalar(1, p_)}};
    for (const auto& [col, row] : reduced) {
      for (const auto& e : row) {
        if (e.first == f) {
          v.emplace_back(col, -e.second);
          break;
        }
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace paqa
