#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "kuratowski/algebra.hpp"
#include "kuratowski/op_word.hpp"

namespace kuratowski {

inline constexpr std::size_t kOperationCount = 14;

/// The monoid of all closure-complement operations: fourteen reduced words
/// numbered s0..s13 and their composition table.
struct KuratowskiMonoid {
  MagmaTable table;
  std::vector<OpWord> words;

  ElementId id_of(const OpWord& w) const {
    const auto r = reduce_word(w);
    for (ElementId i = 0; i < words.size(); ++i) {
      if (words[i] == r) return i;
    }
    throw ConstructionError("word " + r.to_string() + " has no operation id");
  }
};

/// Reduced words reachable from the empty word by appending C or K, in
/// breadth-first discovery order.
inline std::vector<OpWord> reduced_word_closure(std::size_t limit = 64) {
  std::vector<OpWord> found{OpWord{}};
  std::deque<OpWord> queue{OpWord{}};
  while (!queue.empty()) {
    const OpWord w = queue.front();
    queue.pop_front();
    for (const char* letter : {"C", "K"}) {
      OpWord next = reduce_word(w.then(OpWord(letter)));
      if (std::find(found.begin(), found.end(), next) == found.end()) {
        if (found.size() >= limit) {
          throw ConstructionError("rewriting closure exceeds " + std::to_string(limit) +
                                  " words");
        }
        found.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return found;
}

/// Builds the monoid from the rewriting system alone. Operations are numbered
/// by word length, and among words of equal length the one starting with C
/// comes first; this reproduces the s0..s13 listing.
inline KuratowskiMonoid build_monoid() {
  auto words = reduced_word_closure();
  if (words.size() != kOperationCount) {
    throw ConstructionError("rewriting closure produced " + std::to_string(words.size()) +
                            " words, expected 14");
  }
  std::sort(words.begin(), words.end(), [](const OpWord& a, const OpWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.letters() < b.letters();
  });
  std::map<OpWord, ElementId> index;
  for (ElementId i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::vector<ElementId>> rows(kOperationCount,
                                           std::vector<ElementId>(kOperationCount));
  for (ElementId i = 0; i < kOperationCount; ++i) {
    for (ElementId k = 0; k < kOperationCount; ++k) {
      // i∘k applies k first.
      const auto it = index.find(reduce_word(words[k].then(words[i])));
      if (it == index.end()) throw ConstructionError("product left the word set");
      rows[i][k] = it->second;
    }
  }
  return KuratowskiMonoid{MagmaTable(std::move(rows)), std::move(words)};
}

/// Shared instance; construction is deterministic and the result immutable.
inline const KuratowskiMonoid& kuratowski_monoid() {
  static const KuratowskiMonoid m = build_monoid();
  return m;
}

/// The words assigned to s0..s13 in the classical listing.
inline const std::array<std::string_view, kOperationCount> kListedWords = {
    "",     "C",      "K",      "CK",      "KC",      "CKC",     "KCK",
    "CKCK", "KCKC",   "CKCKC",  "KCKCK",   "CKCKCK",  "KCKCKC",  "CKCKCKC"};

/// The nontrivial automorphism A of M (swaps s3 and s4).
inline const std::vector<ElementId> kAutomorphismA = {0, 1, 5, 4, 3, 2, 9,
                                                      8, 7, 6, 13, 12, 11, 10};

/// Anti-automorphism I of the idempotent monoid <0,2,5>: swaps s7 and s8.
/// Elements outside the idempotents are fixed so the array covers all of M.
inline const std::vector<ElementId> kAntiAutomorphismI = {0, 1, 2, 3, 4, 5, 6,
                                                          8, 7, 9, 10, 11, 12, 13};

/// Isomorphism M/(s2=s7) -> M/(s2=s8), both labelled by class representatives
/// s0..s5.
inline const std::vector<ElementId> kQuotientIsomorphism27to28 = {0, 1, 5, 4, 3, 2};

/// Display name for machine formats ("s7") and for ascii output ("σ7").
inline std::string sigma_name(ElementId id) { return "s" + std::to_string(id); }
inline std::string sigma_symbol(ElementId id) { return "σ" + std::to_string(id); }

}  // namespace kuratowski
