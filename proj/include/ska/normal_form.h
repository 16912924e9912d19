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

// Linear systems over terms and their solution by state elimination.
//
// A system (M, x) over states Q has a solution y when, for every q,
//   x(q) + sum_j M(q, j) ; y(j)  ==  y(q).
// build_system() turns the syntactic automaton of e into such a system; its
// matrix has only sums of canonical atoms and its vector only 0 and 1, so the
// solution produced by solve() is built from 0, 1, canonical atoms, +, ; and *
// alone.

#ifndef SKA_NORMAL_FORM_H_
#define SKA_NORMAL_FORM_H_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ska/equivalence.h"
#include "ska/term.h"

namespace ska {

class UnguardedSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LinSystem {
  std::vector<Term> states;
  // matrix[i][j] is the coefficient of the unknown for states[j] in row i.
  std::vector<std::vector<Term>> matrix;
  std::vector<Term> constant;

  std::size_t size() const { return states.size(); }
  // No matrix entry accepts the empty word.
  bool guarded() const;
  // Every entry classifies as NSF.
  bool in_normal_form() const;
};

// An empty system over `states`: all entries 0.
LinSystem zero_system(std::vector<Term> states);

// States are reach(e) + {e} with e first; constant(q) = o(q); matrix(q, q')
// is the sum of pi(A) over the letter sets A with q' in delta(q, A), in
// letter-set order.
LinSystem build_system(Term e);

// Removes states[k], folding its equation into the others:
//   M'(i,j) = M(i,k) ; M(k,k)* ; M(k,j) + M(i,j)
//   x'(i)   = x(i) + M(i,k) ; M(k,k)* ; x(k)
LinSystem eliminate(const LinSystem& sys, std::size_t k);

struct Solution {
  // assignment[i] solves for sys.states[i].
  std::vector<Term> assignment;
};

// Eliminates states last to first and back-substitutes.  `observer`, when
// set, sees every intermediate system.  Throws UnguardedSystemError if some
// matrix entry accepts the empty word.
Solution solve(const LinSystem& sys,
               const std::function<void(const LinSystem&)>& observer = {});

// x(q) + sum_j M(q, j) ; y(j), with unit simplification.
Term equation_rhs(const LinSystem& sys, const std::vector<Term>& y,
                  std::size_t q);

// For each state, whether y satisfies its equation (decided semantically).
std::vector<bool> check_solution(const LinSystem& sys,
                                 const std::vector<Term>& y,
                                 const EquivOptions& options = {});

// A term in normal form equivalent to e: the solution of build_system(e) at
// e.  Only the unit laws are used to simplify.
Term to_normal_form(Term e);

// Tab-separated table: one row per state with its term, constant and matrix
// row.
std::string print_system(const LinSystem& sys);

}  // namespace ska

#endif  // SKA_NORMAL_FORM_H_
