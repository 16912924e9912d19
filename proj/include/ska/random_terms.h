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

#ifndef SKA_RANDOM_TERMS_H_
#define SKA_RANDOM_TERMS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ska/countermodel.h"
#include "ska/language.h"
#include "ska/semilattice.h"
#include "ska/term.h"

namespace ska {

struct TermShape {
  LetterMask alphabet = 0b111;  // {a, b, c}
  std::size_t max_size = 8;     // AST nodes
  bool allow_h = true;
  bool allow_sync = true;
  bool allow_star = true;
};

// Seeded generator of random terms and related values.
class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, TermShape shape);

  // A term with between 1 and shape.max_size nodes.
  Term next();
  // A term with exactly `size` nodes.
  Term of_size(std::size_t size);
  // A semilattice term with between 1 and max_letters letter occurrences.
  SlTerm sl_term(std::size_t max_letters = 4);
  SymSet symset();
  SyncWord word(std::size_t max_length);
  BoundedLang language(std::size_t bound, std::size_t max_words);
  UnaryLang unary(std::size_t max_threshold = 6, std::size_t max_period = 4);

  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return rng_; }
  const TermShape& shape() const { return shape_; }

 private:
  Term leaf();
  char letter();

  std::mt19937_64 rng_;
  TermShape shape_;
  std::vector<char> letters_;
};

}  // namespace ska

#endif  // SKA_RANDOM_TERMS_H_
