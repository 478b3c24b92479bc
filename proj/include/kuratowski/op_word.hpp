#pragma once

#include <string>
#include <string_view>

#include "kuratowski/error.hpp"

namespace kuratowski {

/// A word over {C, K} listing operations in the order they are applied to a
/// set: "KC" means take the closure, then the complement. C is complement,
/// K is closure (or the abstract closure-like operator).
class OpWord {
 public:
  OpWord() = default;
  explicit OpWord(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
      if (c != 'C' && c != 'K') {
        throw InputError(std::string("invalid letter '") + c + "' in operation word");
      }
    }
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Apply *this first, then next.
  OpWord then(const OpWord& next) const {
    OpWord w;
    w.letters_ = letters_ + next.letters_;
    return w;
  }

  /// "ε" for the empty word.
  std::string to_string() const { return letters_.empty() ? "ε" : letters_; }

  auto operator<=>(const OpWord&) const = default;

 private:
  std::string letters_;
};

/// Rewriting rules of the closure-complement monoid: CC -> ε (complement is
/// an involution), KK -> K (closure is idempotent) and KCKCKCK -> KCK.
struct RewriteRule {
  std::string_view lhs;
  std::string_view rhs;
};

inline constexpr RewriteRule kRewriteRules[] = {
    {"CC", ""},
    {"KK", "K"},
    {"KCKCKCK", "KCK"},
};

/// Normal form: repeatedly rewrites the leftmost match of the first
/// applicable rule.
inline OpWord reduce_word(const OpWord& w) {
  std::string s = w.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : kRewriteRules) {
      if (auto pos = s.find(rule.lhs); pos != std::string::npos) {
        s.replace(pos, rule.lhs.size(), rule.rhs);
        changed = true;
        break;
      }
    }
  }
  return OpWord(s);
}

inline bool is_reduced(const OpWord& w) {
  for (const auto& rule : kRewriteRules) {
    if (w.letters().find(rule.lhs) != std::string::npos) return false;
  }
  return true;
}

}  // namespace kuratowski
