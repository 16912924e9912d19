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

#include "ska/normal_form.h"

#include <sstream>

#include "ska/derivatives.h"
#include "ska/semilattice.h"

namespace ska {

bool LinSystem::guarded() const {
  for (const auto& row : matrix) {
    for (Term m : row) {
      if (out(m)) return false;
    }
  }
  return true;
}

bool LinSystem::in_normal_form() const {
  for (const auto& row : matrix) {
    for (Term m : row) {
      if (!classify(m).nsf) return false;
    }
  }
  for (Term c : constant) {
    if (!classify(c).nsf) return false;
  }
  return true;
}

LinSystem zero_system(std::vector<Term> states) {
  LinSystem sys;
  const std::size_t n = states.size();
  sys.states = std::move(states);
  sys.matrix.assign(n, std::vector<Term>(n, Term::zero()));
  sys.constant.assign(n, Term::zero());
  return sys;
}

LinSystem build_system(Term e) {
  const Automaton aut = build_automaton(e);
  LinSystem sys = zero_system(aut.states);
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    sys.constant[i] = aut.accepting[i] ? Term::one() : Term::zero();
    // transitions are keyed in letter-set order, so each sum comes out sorted.
    std::vector<std::vector<Term>> atoms(aut.states.size());
    for (const auto& [letter, targets] : aut.transitions[i]) {
      for (std::size_t j : targets) atoms[j].push_back(pi(letter).term());
    }
    for (std::size_t j = 0; j < aut.states.size(); ++j) {
      sys.matrix[i][j] = sum_of(atoms[j]);
    }
  }
  return sys;
}

namespace {

void require_guarded(const LinSystem& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (out(sys.matrix[i][j])) {
        throw UnguardedSystemError("matrix entry (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") = " +
                                   print_term(sys.matrix[i][j]) +
                                   " accepts the empty word");
      }
    }
  }
}

}  // namespace

LinSystem eliminate(const LinSystem& sys, std::size_t k) {
  const std::size_t n = sys.size();
  if (k >= n) throw std::out_of_range("eliminate: no such state");
  const Term loop = star_units(sys.matrix[k][k]);

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k) keep.push_back(i);
  }
  std::vector<Term> kept_states;
  for (std::size_t i : keep) kept_states.push_back(sys.states[i]);
  LinSystem out = zero_system(std::move(kept_states));

  for (std::size_t a = 0; a < keep.size(); ++a) {
    const std::size_t i = keep[a];
    // M(i,k) ; M(k,k)*, shared by the whole row.
    const Term via = seq_units(sys.matrix[i][k], loop);
    for (std::size_t b = 0; b < keep.size(); ++b) {
      const std::size_t j = keep[b];
      out.matrix[a][b] =
          plus_units(seq_units(via, sys.matrix[k][j]), sys.matrix[i][j]);
    }
    out.constant[a] = plus_units(sys.constant[i], seq_units(via, sys.constant[k]));
  }
  return out;
}

Solution solve(const LinSystem& sys,
               const std::function<void(const LinSystem&)>& observer) {
  require_guarded(sys);
  const std::size_t n = sys.size();

  // rows[k] is the equation of state k just before it is eliminated; at that
  // point only states 0..k remain, in their original order.
  std::vector<std::vector<Term>> rows(n);
  std::vector<Term> constants(n);
  LinSystem current = sys;
  if (observer) observer(current);
  for (std::size_t k = n; k-- > 0;) {
    rows[k] = current.matrix[k];
    constants[k] = current.constant[k];
    current = eliminate(current, k);
    if (observer) observer(current);
  }

  // x(k) = M(k,k)* ; (x(k) + sum_{j<k} M(k,j) ; x(j))
  Solution solution;
  solution.assignment.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Term acc = constants[k];
    for (std::size_t j = 0; j < k; ++j) {
      acc = plus_units(acc, seq_units(rows[k][j], solution.assignment[j]));
    }
    solution.assignment[k] = seq_units(star_units(rows[k][k]), acc);
  }
  return solution;
}

Term equation_rhs(const LinSystem& sys, const std::vector<Term>& y,
                  std::size_t q) {
  Term acc = sys.constant[q];
  for (std::size_t j = 0; j < sys.size(); ++j) {
    acc = plus_units(acc, seq_units(sys.matrix[q][j], y[j]));
  }
  return acc;
}

std::vector<bool> check_solution(const LinSystem& sys,
                                 const std::vector<Term>& y,
                                 const EquivOptions& options) {
  if (y.size() != sys.size()) {
    throw std::invalid_argument("check_solution: vector size mismatch");
  }
  std::vector<bool> ok(sys.size());
  for (std::size_t q = 0; q < sys.size(); ++q) {
    ok[q] = equiv(equation_rhs(sys, y, q), y[q], options).equivalent;
  }
  return ok;
}

Term to_normal_form(Term e) {
  // The initial term is states[0], which is eliminated last, so its value is
  // available without back-substitution: M(0,0)* ; x(0) in the 1-state
  // system that remains.
  LinSystem current = build_system(e);
  require_guarded(current);
  while (current.size() > 1) current = eliminate(current, current.size() - 1);
  return seq_units(star_units(current.matrix[0][0]), current.constant[0]);
}

std::string print_system(const LinSystem& sys) {
  std::ostringstream os;
  os << "state\tterm\tconstant";
  for (std::size_t j = 0; j < sys.size(); ++j) os << "\tq" << j;
  os << '\n';
  for (std::size_t i = 0; i < sys.size(); ++i) {
    os << 'q' << i << '\t' << print_term(sys.states[i]) << '\t'
       << print_term(sys.constant[i]);
    for (std::size_t j = 0; j < sys.size(); ++j) {
      os << '\t' << print_term(sys.matrix[i][j]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ska
