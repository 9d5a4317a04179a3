#include "paqa/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace paqa {

Quiver Quiver::build(std::vector<std::string> vertices,
                     const std::vector<ArrowDecl>& arrows) {
  Quiver q;
  std::set<std::string> seen;
  for (auto& v : vertices) {
    if (v.empty()) throw QuiverError("empty vertex name");
    if (!seen.insert(v).second) throw QuiverError("duplicate vertex name '" + v + "'");
  }
  q.vertices_ = std::move(vertices);
  std::set<std::string> arrow_names;
  for (const auto& decl : arrows) {
    if (decl.name.empty()) throw QuiverError("empty arrow name");
    if (seen.count(decl.name) || !arrow_names.insert(decl.name).second)
      throw QuiverError("duplicate name '" + decl.name + "'");
    auto o = q.find_vertex(decl.origin);
    auto t = q.find_vertex(decl.target);
    if (!o) throw QuiverError("arrow '" + decl.name + "' starts at undeclared vertex '" + decl.origin + "'");
    if (!t) throw QuiverError("arrow '" + decl.name + "' ends at undeclared vertex '" + decl.target + "'");
    q.arrows_.push_back({decl.name, *o, *t});
  }
  return q;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(),
                         [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

VertexId Quiver::vertex_id(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw QuiverError("unknown vertex '" + std::string(name) + "'");
}

ArrowId Quiver::arrow_id(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw QuiverError("unknown arrow '" + std::string(name) + "'");
}

bool Quiver::is_path(const Word& w) const {
  if (w.empty()) return false;
  for (ArrowId a : w)
    if (a >= arrows_.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!composable(w[i], w[i + 1])) return false;
  return true;
}

std::vector<ArrowId> Quiver::loops_at(VertexId v) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].origin == v && arrows_[a].target == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::components() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& a : arrows_) {
    auto ra = find(a.origin), rb = find(a.target);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> label(vertices_.size());
  std::vector<std::size_t> root_label(vertices_.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto r = find(v);
    if (root_label[r] == SIZE_MAX) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

bool Quiver::is_connected() const {
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](std::size_t l) { return l == 0; });
}

std::string Quiver::word_string(const Word& w, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += arrows_.at(w[i]).name;
  }
  return out;
}

Path Path::word(const Quiver& q, Word w) {
  if (w.empty()) throw QuiverError("arrow path must be nonempty");
  if (!q.is_path(w)) throw QuiverError("word '" + q.word_string(w, "*") + "' is not a path");
  VertexId o = q.arrow(w.front()).origin;
  VertexId t = q.arrow(w.back()).target;
  return Path(o, t, std::move(w));
}

std::string Path::to_string(const Quiver& q) const {
  if (is_vertex()) return "e_" + q.vertex_name(origin_);
  return q.word_string(arrows_);
}

std::optional<Path> compose(const Quiver& q, const Path& first, const Path& second) {
  if (first.target() != second.origin()) return std::nullopt;
  if (first.is_vertex()) return second;
  if (second.is_vertex()) return first;
  Word w = first.arrows();
  w.insert(w.end(), second.arrows().begin(), second.arrows().end());
  return Path::word(q, std::move(w));
}

std::string opposite_name(std::string_view name) {
  if (name.size() >= kOppositeMark.size() &&
      name.substr(name.size() - kOppositeMark.size()) == kOppositeMark)
    return std::string(name.substr(0, name.size() - kOppositeMark.size()));
  return std::string(name) + std::string(kOppositeMark);
}

Quiver opposite(const Quiver& q) {
  std::vector<ArrowDecl> decls;
  decls.reserve(q.arrow_count());
  for (const auto& a : q.arrows())
    decls.push_back({opposite_name(a.name), q.vertex_name(a.target), q.vertex_name(a.origin)});
  return Quiver::build(q.vertices(), decls);
}

Quiver vertex_subquiver(const Quiver& q, VertexId x) {
  if (x >= q.vertex_count()) throw QuiverError("unknown vertex index");
  std::vector<bool> keep_vertex(q.vertex_count(), false);
  keep_vertex[x] = true;
  std::vector<const Arrow*> kept;
  for (const auto& a : q.arrows()) {
    if (a.origin == x || a.target == x) {
      kept.push_back(&a);
      keep_vertex[a.origin] = keep_vertex[a.target] = true;
    }
  }
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (keep_vertex[v]) vertices.push_back(q.vertex_name(v));
  std::vector<ArrowDecl> decls;
  for (const Arrow* a : kept)
    decls.push_back({a->name, q.vertex_name(a->origin), q.vertex_name(a->target)});
  return Quiver::build(std::move(vertices), decls);
}

}  // namespace paqa
