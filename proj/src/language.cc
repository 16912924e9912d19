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

#include "ska/language.h"

#include <unordered_map>

namespace ska {

SyncWord word_sync(const SyncWord& u, const SyncWord& v) {
  const SyncWord& longer = u.size() >= v.size() ? u : v;
  const SyncWord& shorter = u.size() >= v.size() ? v : u;
  SyncWord out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = out[i] | shorter[i];
  return out;
}

BoundedLang lang_sync(const BoundedLang& k, const BoundedLang& l) {
  internal::check_bounds(k, l);
  BoundedLang out(k.bound());
  for (const SyncWord& u : k.words()) {
    for (const SyncWord& v : l.words()) out.insert(word_sync(u, v));
  }
  return out;
}

namespace {

// Operands of ; and & are evaluated at the full bound: concatenation never
// shortens words and |u & v| = max(|u|, |v|), so no word of length <= n is
// built from an operand word longer than n.
class BoundedEvaluator {
 public:
  explicit BoundedEvaluator(std::size_t n) : n_(n) {}

  const BoundedLang& eval(Term t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    BoundedLang result = compute(t);
    return memo_.emplace(t, std::move(result)).first->second;
  }

 private:
  BoundedLang compute(Term t) {
    switch (t.kind()) {
      case Kind::kZero:
        return BoundedLang(n_);
      case Kind::kOne:
        return BoundedLang::epsilon(n_);
      case Kind::kLetter: {
        BoundedLang l(n_);
        l.insert({SymSet(letter_bit(t.letter()))});
        return l;
      }
      case Kind::kPlus:
        return lang_union(eval(t.left()), eval(t.right()));
      case Kind::kSeq:
        return lang_concat(eval(t.left()), eval(t.right()));
      case Kind::kSync:
        return lang_sync(eval(t.left()), eval(t.right()));
      case Kind::kStar:
        return lang_star(eval(t.inner()));
      case Kind::kH:
        return lang_h(eval(t.inner()));
    }
    return BoundedLang(n_);
  }

  std::size_t n_;
  std::unordered_map<Term, BoundedLang> memo_;
};

}  // namespace

BoundedLang sem_bounded(Term t, std::size_t n) {
  BoundedEvaluator ev(n);
  return ev.eval(t);
}

BoundedLang all_words(LetterMask alphabet, std::size_t n) {
  BoundedLang out = BoundedLang::epsilon(n);
  if (alphabet == 0) return out;
  std::vector<SymSet> letters = nonempty_subsets(alphabet);
  std::vector<SyncWord> layer = {SyncWord{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<SyncWord> next;
    for (const SyncWord& w : layer) {
      for (SymSet s : letters) {
        SyncWord x = w;
        x.push_back(s);
        out.insert(x);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::string print_word(const SyncWord& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (SymSet s : w) out += print_symset(s);
  return out;
}

SyncWord parse_word(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw SyntaxError(0, "empty word");
  std::string_view body = text.substr(begin, end - begin + 1);
  if (body == "eps") return {};
  SyncWord w;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t local = pos;
    try {
      w.push_back(parse_symset(body, local));
    } catch (const SyntaxError& e) {
      throw SyntaxError(begin + e.offset(), e.detail());
    }
    pos = local;
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
  }
  return w;
}

std::string print_lang(const BoundedLang& l) {
  std::string out;
  for (const SyncWord& w : l.words()) {
    out += print_word(w);
    out.push_back('\n');
  }
  return out;
}

PiWord pi_word(const SyncWord& w) {
  PiWord out;
  out.reserve(w.size());
  for (SymSet s : w) out.push_back(pi(s).term());
  return out;
}

PiLang pi_lang(const BoundedLang& l) {
  PiLang out(l.bound());
  for (const SyncWord& w : l.words()) out.insert(pi_word(w));
  return out;
}

}  // namespace ska
