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

#include "ska/random_terms.h"

#include <stdexcept>

namespace ska {

TermGenerator::TermGenerator(std::uint64_t seed, TermShape shape)
    : rng_(seed), shape_(shape) {
  for (char c : alphabet_string(shape_.alphabet)) letters_.push_back(c);
  if (letters_.empty()) throw std::invalid_argument("empty alphabet");
  if (shape_.max_size == 0) shape_.max_size = 1;
}

std::size_t TermGenerator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool TermGenerator::coin(double p) {
  return std::bernoulli_distribution(p)(rng_);
}

char TermGenerator::letter() { return letters_[uniform(0, letters_.size() - 1)]; }

Term TermGenerator::leaf() {
  // Letters dominate; constants keep appearing.
  switch (uniform(0, 5)) {
    case 0:
      return Term::zero();
    case 1:
      return Term::one();
    default:
      return Term::letter(letter());
  }
}

Term TermGenerator::next() { return of_size(uniform(1, shape_.max_size)); }

Term TermGenerator::of_size(std::size_t size) {
  if (size <= 1) return leaf();
  const bool unary_ok = shape_.allow_star || shape_.allow_h;
  const bool binary_ok = size >= 3;
  if (!binary_ok && !unary_ok) return leaf();
  if (unary_ok && (!binary_ok || coin(0.25))) {
    Term inner = of_size(size - 1);
    if (shape_.allow_star && (!shape_.allow_h || coin(0.8))) {
      return Term::star(inner);
    }
    return Term::h(inner);
  }
  std::size_t left = uniform(1, size - 2);
  Term l = of_size(left);
  Term r = of_size(size - 1 - left);
  std::size_t pick = uniform(0, shape_.allow_sync ? 2 : 1);
  switch (pick) {
    case 0:
      return Term::plus(l, r);
    case 1:
      return Term::seq(l, r);
    default:
      return Term::sync(l, r);
  }
}

SlTerm TermGenerator::sl_term(std::size_t max_letters) {
  std::size_t n = uniform(1, std::max<std::size_t>(1, max_letters));
  std::vector<Term> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back(Term::letter(letter()));
  // Random bracketing.
  while (parts.size() > 1) {
    std::size_t i = uniform(0, parts.size() - 2);
    Term merged = coin() ? Term::sync(parts[i], parts[i + 1])
                         : Term::sync(parts[i + 1], parts[i]);
    parts[i] = merged;
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  return SlTerm(parts.front());
}

SymSet TermGenerator::symset() {
  for (;;) {
    LetterMask m = 0;
    for (char c : letters_) {
      if (coin()) m |= letter_bit(c);
    }
    if (m != 0) return SymSet(m);
  }
}

SyncWord TermGenerator::word(std::size_t max_length) {
  SyncWord w;
  std::size_t n = uniform(0, max_length);
  for (std::size_t i = 0; i < n; ++i) w.push_back(symset());
  return w;
}

BoundedLang TermGenerator::language(std::size_t bound, std::size_t max_words) {
  BoundedLang l(bound);
  std::size_t n = uniform(0, max_words);
  for (std::size_t i = 0; i < n; ++i) l.insert(word(bound));
  return l;
}

UnaryLang TermGenerator::unary(std::size_t max_threshold,
                               std::size_t max_period) {
  std::size_t t = uniform(0, max_threshold);
  std::size_t p = uniform(1, max_period);
  std::vector<bool> low(t);
  for (std::size_t i = 0; i < t; ++i) low[i] = coin();
  std::vector<bool> cycle(p);
  // Finite about half the time.
  const bool infinite = coin();
  for (std::size_t i = 0; i < p; ++i) cycle[i] = infinite && coin(0.6);
  return UnaryLang(std::move(low), std::move(cycle));
}

}  // namespace ska
