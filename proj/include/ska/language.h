// Copyright 2026 The ska Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Synchronous languages truncated at a word-length bound.
//
// The regular operations are generic in the letter type so the same code
// serves synchronous strings (letters are SymSets) and their images under pi
// (letters are semilattice terms).  The synchronous product is specific to
// SymSet letters.

#ifndef SKA_LANGUAGE_H_
#define SKA_LANGUAGE_H_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ska/semilattice.h"
#include "ska/term.h"

namespace ska {

class BoundMismatchError : public std::invalid_argument {
 public:
  BoundMismatchError(std::size_t a, std::size_t b)
      : std::invalid_argument("bounded languages have different bounds: " +
                              std::to_string(a) + " vs " + std::to_string(b)) {}
};

// Shorter words first, then lexicographic by letter.
template <class Symbol, class Less = std::less<Symbol>>
struct ShortLex {
  bool operator()(const std::vector<Symbol>& a,
                  const std::vector<Symbol>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        Less{});
  }
};

template <class Symbol, class Less = std::less<Symbol>>
class BoundedLanguage {
 public:
  using Word = std::vector<Symbol>;
  using WordSet = std::set<Word, ShortLex<Symbol, Less>>;

  explicit BoundedLanguage(std::size_t bound) : bound_(bound) {}
  BoundedLanguage(std::size_t bound, std::initializer_list<Word> words)
      : bound_(bound) {
    for (const Word& w : words) insert(w);
  }

  static BoundedLanguage epsilon(std::size_t bound) {
    BoundedLanguage l(bound);
    l.insert(Word{});
    return l;
  }

  std::size_t bound() const { return bound_; }
  const WordSet& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const { return words_.count(w) != 0; }

  // Words longer than the bound are dropped.  Returns true if `w` was added.
  bool insert(Word w) {
    if (w.size() > bound_) return false;
    return words_.insert(std::move(w)).second;
  }

  // The words of length at most `m`, re-bounded at `m` (m <= bound()).
  BoundedLanguage truncated(std::size_t m) const {
    BoundedLanguage out(m);
    for (const Word& w : words_) {
      if (w.size() > m) break;
      out.words_.insert(out.words_.end(), w);
    }
    return out;
  }

  friend bool operator==(const BoundedLanguage& a, const BoundedLanguage& b) {
    return a.bound_ == b.bound_ && a.words_ == b.words_;
  }

 private:
  std::size_t bound_;
  WordSet words_;
};

namespace internal {
template <class L>
void check_bounds(const L& a, const L& b) {
  if (a.bound() != b.bound()) throw BoundMismatchError(a.bound(), b.bound());
}
}  // namespace internal

template <class S, class C>
BoundedLanguage<S, C> lang_union(const BoundedLanguage<S, C>& k,
                                 const BoundedLanguage<S, C>& l) {
  internal::check_bounds(k, l);
  BoundedLanguage<S, C> out = k;
  for (const auto& w : l.words()) out.insert(w);
  return out;
}

template <class S, class C>
BoundedLanguage<S, C> lang_concat(const BoundedLanguage<S, C>& k,
                                  const BoundedLanguage<S, C>& l) {
  internal::check_bounds(k, l);
  BoundedLanguage<S, C> out(k.bound());
  for (const auto& u : k.words()) {
    for (const auto& v : l.words()) {
      if (u.size() + v.size() > k.bound()) break;  // shortlex: rest are longer
      auto w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.insert(std::move(w));
    }
  }
  return out;
}

// Least fixed point of L = {eps} + K.L, computed with a frontier of words
// added in the previous round.  Terminates even when eps is in K.
template <class S, class C>
BoundedLanguage<S, C> lang_star(const BoundedLanguage<S, C>& k) {
  using Word = typename BoundedLanguage<S, C>::Word;
  BoundedLanguage<S, C> out = BoundedLanguage<S, C>::epsilon(k.bound());
  std::vector<Word> frontier = {Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& u : k.words()) {
      if (u.empty()) continue;
      for (const Word& v : frontier) {
        if (u.size() + v.size() > k.bound()) continue;
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        if (out.insert(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// K intersected with {eps}.
template <class S, class C>
BoundedLanguage<S, C> lang_h(const BoundedLanguage<S, C>& k) {
  BoundedLanguage<S, C> out(k.bound());
  if (k.contains({})) out.insert({});
  return out;
}

// ---------------------------------------------------------------------------
// Synchronous strings.

using SyncWord = std::vector<SymSet>;
using BoundedLang = BoundedLanguage<SymSet>;

// Letterwise union; the tail of the longer word survives.
SyncWord word_sync(const SyncWord& u, const SyncWord& v);

BoundedLang lang_sync(const BoundedLang& k, const BoundedLang& l);

// Exactly the words of the language of t with length at most n.
BoundedLang sem_bounded(Term t, std::size_t n);

// Every synchronous string over nonempty subsets of `alphabet` with length at
// most n.
BoundedLang all_words(LetterMask alphabet, std::size_t n);

// "eps" or a concatenation of letter sets, e.g. "{a,b}{c}".
std::string print_word(const SyncWord& w);
SyncWord parse_word(std::string_view text);
// One word per line, in shortlex order.
std::string print_lang(const BoundedLang& l);

// pi applied letterwise.
using PiWord = std::vector<Term>;
using PiLang = BoundedLanguage<Term, TermLess>;

PiWord pi_word(const SyncWord& w);
PiLang pi_lang(const BoundedLang& l);

}  // namespace ska

#endif  // SKA_LANGUAGE_H_
