#include "paqa/normal_form.hpp"

#include <deque>

namespace paqa {

std::shared_ptr<const SignedClass> NormalForm::build(const Word& start) {
  const int swap_sign = spec_->transposition_sign();
  auto cls = std::make_shared<SignedClass>();
  cls->members.emplace(start, 1);
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    const int sign = cls->members.at(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (spec_->has_monomial(w[i], w[i + 1])) cls->zero = true;
      if (w[i] == w[i + 1] || !spec_->has_relation(w[i], w[i + 1])) continue;
      Word next = w;
      std::swap(next[i], next[i + 1]);
      const int next_sign = sign * swap_sign;
      auto [it, inserted] = cls->members.emplace(next, next_sign);
      if (inserted) {
        queue.push_back(std::move(next));
      } else if (it->second != next_sign) {
        throw InternalConsistencyError("word reached with two signs during rewriting");
      }
    }
  }
  cls->representative = cls->members.begin()->first;
  return cls;
}

const SignedClass& NormalForm::class_of(const Word& w) {
  if (w.empty()) throw std::invalid_argument("equivalence class of an empty word");
  if (auto it = cache_.find(w); it != cache_.end()) return *it->second;
  auto cls = build(w);
  for (const auto& entry : cls->members) cache_.emplace(entry.first, cls);
  return *cls;
}

bool NormalForm::in_ideal(const Word& w) { return class_of(w).zero; }

std::optional<SignedWord> NormalForm::canonical(const Word& w) {
  const auto& cls = class_of(w);
  if (cls.zero) return std::nullopt;
  const int sign = cls.members.at(w) * cls.members.at(cls.representative);
  return SignedWord{sign, cls.representative};
}

SignedClass equivalence_class(const IdealSpec& spec, const Path& m) {
  if (m.is_vertex()) throw std::invalid_argument("equivalence classes are defined for arrow paths");
  NormalForm nf(spec);
  return nf.class_of(m.arrows());
}

bool monomial_in_ideal(const IdealSpec& spec, const Path& m) {
  if (m.is_vertex()) return false;
  NormalForm nf(spec);
  return nf.in_ideal(m.arrows());
}

std::optional<SignedWord> canonical_form(const IdealSpec& spec, const Path& m) {
  if (m.is_vertex()) return SignedWord{1, {}};
  NormalForm nf(spec);
  return nf.canonical(m.arrows());
}

}  // namespace paqa
