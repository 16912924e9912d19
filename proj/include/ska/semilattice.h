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

#ifndef SKA_SEMILATTICE_H_
#define SKA_SEMILATTICE_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ska/term.h"

namespace ska {

// A nonempty set of letters: one letter of a synchronous string.
class SymSet {
 public:
  // Throws std::invalid_argument on an empty mask.
  explicit SymSet(LetterMask mask);
  static SymSet of(std::string_view letters);

  LetterMask mask() const { return mask_; }
  int size() const;
  bool contains(char c) const { return (mask_ & letter_bit(c)) != 0; }
  std::string letters() const { return alphabet_string(mask_); }

  SymSet operator|(SymSet other) const { return SymSet(mask_ | other.mask_); }

  friend bool operator==(SymSet a, SymSet b) { return a.mask_ == b.mask_; }
  // Lexicographic on the sorted letter sequences: {a} < {a,b} < {b}.
  friend std::strong_ordering operator<=>(SymSet a, SymSet b);

 private:
  LetterMask mask_;
};

// "{a,b}"
std::string print_symset(SymSet s);
// Parses "{a,b}" starting at `pos`; advances `pos` past the closing brace.
SymSet parse_symset(std::string_view text, std::size_t& pos);
SymSet parse_symset(std::string_view text);

// Every nonempty subset of `support`, in SymSet order.
std::vector<SymSet> nonempty_subsets(LetterMask support);

// A term known to be built from letters and & only.
class SlTerm {
 public:
  // Throws std::invalid_argument unless t.is_sl().
  explicit SlTerm(Term t);
  static SlTerm letter(char c) { return SlTerm(Term::letter(c)); }
  static SlTerm cross(SlTerm l, SlTerm r) {
    return SlTerm(Term::sync(l.term(), r.term()));
  }

  Term term() const { return term_; }
  friend bool operator==(SlTerm a, SlTerm b) { return a.term_ == b.term_; }

 private:
  Term term_;
};

// The set of letters occurring in e.
SymSet sl_sem(SlTerm e);

// Canonical right inverse of sl_sem: letters in order, combined left-nested,
// ((l1 & l2) & l3) ...
SlTerm pi(SymSet a);

// pi(sl_sem(e)).
SlTerm normalize_sl(SlTerm e);

bool sl_equiv(SlTerm e, SlTerm f);

// True iff t is an SL term that is its own normal form.
bool is_canonical_atom(Term t);

}  // namespace ska

#endif  // SKA_SEMILATTICE_H_
