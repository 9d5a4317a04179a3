#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paqa/ideal.hpp"

namespace paqa {

struct SourcePos {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based byte column
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

struct SpecDocument {
  std::string source;
  AlgebraPresentation presentation;
  std::vector<std::string> warnings;

  const Quiver& quiver() const { return presentation.quiver(); }
  const IdealSpec& ideal() const { return presentation.ideal; }
};

/// Line-oriented spec format:
///   vertices: x, y
///   arrows: a: x->x, c: x->y
///   ideal commutative|anticommutative
///   zero: a*a, a*c
///   comm: a*b        (or anti: a*b)
///   char: 0|p
///   koszul: asserted
/// '#' starts a comment. Semantic errors carry the position of the offending item.
SpecDocument parse_spec(std::string_view text);

/// Canonical text that parses back to the same presentation.
std::string print(const AlgebraPresentation& pres);

}  // namespace paqa
