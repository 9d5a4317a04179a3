#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "paqa/ideal.hpp"

namespace paqa {

/// Raised when a rewrite reaches the same word with two different signs.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SignedWord {
  int sign = 1;
  Word word;
  bool operator==(const SignedWord&) const = default;
};

/// Words reachable by swapping adjacent related loops. Signs are relative to
/// the word the class was first built from (flipped per swap in the anti
/// flavor); only ratios of member signs are meaningful.
struct SignedClass {
  Word representative;  // lexicographically smallest member
  std::map<Word, int> members;
  bool zero = false;    // some member contains a monomial generator
};

/// Memoizing rewrite engine for one ideal. Not thread-safe; use one per thread.
class NormalForm {
 public:
  explicit NormalForm(const IdealSpec& spec) : spec_(&spec) {}

  /// Throws std::invalid_argument for an empty word. The returned class is
  /// shared by all of its members.
  const SignedClass& class_of(const Word& w);
  bool in_ideal(const Word& w);
  /// nullopt when the word lies in I.
  std::optional<SignedWord> canonical(const Word& w);

 private:
  std::shared_ptr<const SignedClass> build(const Word& w);

  const IdealSpec* spec_;
  std::map<Word, std::shared_ptr<const SignedClass>> cache_;
};

SignedClass equivalence_class(const IdealSpec& spec, const Path& m);
bool monomial_in_ideal(const IdealSpec& spec, const Path& m);
/// Vertex paths are their own canonical form.
std::optional<SignedWord> canonical_form(const IdealSpec& spec, const Path& m);

}  // namespace paqa
