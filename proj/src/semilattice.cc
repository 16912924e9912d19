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

#include "ska/semilattice.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ska {

SymSet::SymSet(LetterMask mask) : mask_(mask) {
  if (mask == 0) throw std::invalid_argument("SymSet must be nonempty");
  if (mask >> kMaxLetters) throw std::invalid_argument("SymSet: bad letter");
}

SymSet SymSet::of(std::string_view letters) {
  return SymSet(parse_alphabet(letters));
}

int SymSet::size() const { return std::popcount(mask_); }

std::strong_ordering operator<=>(SymSet a, SymSet b) {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Both sequences agree on every letter below the lowest differing one.  The
  // set owning that letter is smaller unless the other sequence ends there.
  LetterMask diff = a.mask_ ^ b.mask_;
  LetterMask low = diff & (~diff + 1);
  LetterMask above = ~((low << 1) - 1);
  if (a.mask_ & low) {
    return (b.mask_ & above) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return (a.mask_ & above) ? std::strong_ordering::greater
                           : std::strong_ordering::less;
}

std::string print_symset(SymSet s) {
  std::string out = "{";
  bool first = true;
  for (char c : s.letters()) {
    if (!first) out.push_back(',');
    out.push_back(c);
    first = false;
  }
  out.push_back('}');
  return out;
}

SymSet parse_symset(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') {
    throw SyntaxError(pos, "expected '{'");
  }
  ++pos;
  LetterMask mask = 0;
  bool expect_letter = true;
  for (;;) {
    skip();
    if (pos >= text.size()) throw SyntaxError(pos, "unterminated letter set");
    char c = text[pos];
    if (c == '}' && !expect_letter) {
      ++pos;
      break;
    }
    if (expect_letter && is_letter(c)) {
      mask |= letter_bit(c);
      expect_letter = false;
    } else if (!expect_letter && c == ',') {
      expect_letter = true;
    } else {
      throw SyntaxError(pos, std::string("unexpected '") + c + "' in letter set");
    }
    ++pos;
  }
  return SymSet(mask);
}

SymSet parse_symset(std::string_view text) {
  std::size_t pos = 0;
  SymSet s = parse_symset(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw SyntaxError(pos, "trailing input");
  return s;
}

std::vector<SymSet> nonempty_subsets(LetterMask support) {
  std::vector<SymSet> out;
  for (LetterMask sub = support; sub != 0; sub = (sub - 1) & support) {
    out.emplace_back(sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SlTerm::SlTerm(Term t) : term_(t) {
  if (!t.is_sl()) throw std::invalid_argument("not a semilattice term");
}

SymSet sl_sem(SlTerm e) { return SymSet(e.term().support()); }

SlTerm pi(SymSet a) {
  std::string letters = a.letters();
  Term acc = Term::letter(letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) {
    acc = Term::sync(acc, Term::letter(letters[i]));
  }
  return SlTerm(acc);
}

SlTerm normalize_sl(SlTerm e) { return pi(sl_sem(e)); }

bool sl_equiv(SlTerm e, SlTerm f) { return sl_sem(e) == sl_sem(f); }

bool is_canonical_atom(Term t) {
  return t.is_sl() && pi(SymSet(t.support())).term() == t;
}

}  // namespace ska
