#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paqa {

using VertexId = std::size_t;
using ArrowId = std::size_t;

/// Arrow word read left to right: {a, c} is "a then c".
using Word = std::vector<ArrowId>;

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  VertexId origin;
  VertexId target;

  bool is_loop() const { return origin == target; }
  bool operator==(const Arrow&) const = default;
};

struct ArrowDecl {
  std::string name;
  std::string origin;
  std::string target;
};

/// Suffix marking an arrow of the opposite quiver. opposite() toggles it.
inline constexpr std::string_view kOppositeMark = "°";

/// Finite quiver with a fixed declaration order on vertices and arrows.
/// Arrow ids are declaration indices; that order is the total order used for
/// canonical words and every deterministic listing downstream.
class Quiver {
 public:
  Quiver() = default;

  /// Throws QuiverError on empty/duplicate names or undeclared endpoints.
  static Quiver build(std::vector<std::string> vertices,
                      const std::vector<ArrowDecl>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::string& arrow_name(ArrowId a) const { return arrows_.at(a).name; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;
  VertexId vertex_id(std::string_view name) const;
  ArrowId arrow_id(std::string_view name) const;

  bool composable(ArrowId first, ArrowId second) const {
    return arrows_[first].target == arrows_[second].origin;
  }
  bool is_path(const Word& w) const;

  std::vector<ArrowId> loops_at(VertexId v) const;

  /// Component index per vertex, numbered by first vertex in declaration order.
  std::vector<std::size_t> components() const;
  bool is_connected() const;

  std::string word_string(const Word& w, std::string_view sep = "") const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Either a vertex (degree 0) or a nonempty composable arrow word.
class Path {
 public:
  static Path vertex(VertexId v) { return Path(v, {}); }
  /// Throws QuiverError if the word is empty or not composable.
  static Path word(const Quiver& q, Word w);

  bool is_vertex() const { return arrows_.empty(); }
  std::size_t degree() const { return arrows_.size(); }
  VertexId origin() const { return origin_; }
  VertexId target() const { return target_; }
  const Word& arrows() const { return arrows_; }

  std::string to_string(const Quiver& q) const;

  bool operator==(const Path&) const = default;

 private:
  Path(VertexId v, Word w) : origin_(v), target_(v), arrows_(std::move(w)) {}
  Path(VertexId o, VertexId t, Word w) : origin_(o), target_(t), arrows_(std::move(w)) {}

  VertexId origin_ = 0;
  VertexId target_ = 0;
  Word arrows_;
};

/// pq = p then q; nullopt when the junction does not match (zero in KQ).
std::optional<Path> compose(const Quiver& q, const Path& first, const Path& second);

/// Same vertices, each arrow reversed and its name toggled with kOppositeMark.
Quiver opposite(const Quiver& q);

/// Toggles the opposite mark on one arrow name.
std::string opposite_name(std::string_view name);

/// x, all arrows incident to x, and their endpoints; declaration order kept.
Quiver vertex_subquiver(const Quiver& q, VertexId x);

}  // namespace paqa
