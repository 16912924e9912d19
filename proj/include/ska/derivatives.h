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

// Partial derivatives of synchronous terms and the syntactic automaton.

#ifndef SKA_DERIVATIVES_H_
#define SKA_DERIVATIVES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ska/language.h"
#include "ska/semilattice.h"
#include "ska/term.h"

namespace ska {

// Supports larger than this make the 2^n - 1 letter sets expensive.
inline constexpr int kSupportWarnLetters = 8;

// Termination map: 1 iff the empty word is in the language of t.
bool out(Term t);

// Memoizing evaluator for delta.  Results are sorted by node id and
// duplicate-free.  Not thread-safe; use one per thread.
class Deriver {
 public:
  const std::vector<Term>& delta(Term t, SymSet a);

 private:
  std::vector<Term> compute(Term t, SymSet a);

  struct KeyHash {
    std::size_t operator()(const std::pair<Term, LetterMask>& k) const {
      return k.first.hash() * 31 + k.second;
    }
  };
  std::unordered_map<std::pair<Term, LetterMask>, std::vector<Term>, KeyHash>
      memo_;
};

// Partial derivative of t by the letter a, in structural order.
std::vector<Term> delta(Term t, SymSet a);

// The reach set rho(t), in structural order.  t itself is not always a member.
std::vector<Term> reach(Term t);

// The syntactic automaton restricted to reach(t) + {t}.
struct Automaton {
  Term initial;
  // states[0] is the initial term; the rest follow in structural order.
  std::vector<Term> states;
  std::vector<bool> accepting;
  // Letters of the initial term; every transition letter is a subset.
  LetterMask alphabet = 0;
  // transitions[i] maps a letter set to target state indices (ascending).
  std::vector<std::map<SymSet, std::vector<std::size_t>>> transitions;

  std::optional<std::size_t> index_of(Term t) const;
  std::size_t transition_count() const;
};

Automaton build_automaton(Term t);

bool accepts(const Automaton& aut, const SyncWord& w);

// DOT rendering: states labeled with printed terms, accepting states double
// circled, edges labeled with letter sets.
std::string to_dot(const Automaton& aut);

// One-step unfolding o(t) + sum over A and t' in delta(t, A) of pi(A) ; t'.
struct Unfold {
  bool out = false;
  // Sorted by (letter set, printed term).
  std::vector<std::pair<SymSet, Term>> summands;
};

Unfold fundamental_unfold(Term t);
Term reassemble(const Unfold& u);

// Writes a warning to stderr when a support is too large for desk use.
void warn_if_large_support(LetterMask support);

}  // namespace ska

#endif  // SKA_DERIVATIVES_H_
