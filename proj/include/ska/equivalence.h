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

#ifndef SKA_EQUIVALENCE_H_
#define SKA_EQUIVALENCE_H_

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "ska/language.h"
#include "ska/term.h"

namespace ska {

inline constexpr std::size_t kDefaultPairCap = 1'000'000;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EquivOptions {
  // Maximum number of determinized state pairs explored.
  std::size_t pair_cap = kDefaultPairCap;
};

struct EquivResult {
  bool equivalent = true;
  // A shortest word in exactly one of the two languages; set iff
  // !equivalent.
  std::optional<SyncWord> witness;
  // Number of determinized state pairs visited.
  std::size_t pairs_explored = 0;
};

// Decides whether e and f denote the same synchronous language by walking the
// determinized syntactic automata of both in lock step, merging pairs with a
// union-find (Hopcroft-Karp).  Breadth-first, so the first mismatch found
// gives a shortest distinguishing word.  Throws ResourceLimitError when more
// than options.pair_cap pairs are needed.
EquivResult equiv(Term e, Term f, const EquivOptions& options = {});

// w in the language of e, by iterated derivatives.
bool member(const SyncWord& w, Term e);

}  // namespace ska

#endif  // SKA_EQUIVALENCE_H_
