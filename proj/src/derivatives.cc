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

#include "ska/derivatives.h"

#include <algorithm>
#include <bit>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace ska {
namespace {

void sort_unique(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(), TermIdLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_structural(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(), TermLess{});
}

}  // namespace

bool out(Term t) { return t.nullable(); }

const std::vector<Term>& Deriver::delta(Term t, SymSet a) {
  auto key = std::make_pair(t, a.mask());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<Term> result = compute(t, a);
  return memo_.emplace(key, std::move(result)).first->second;
}

// Derivatives only consume letters that occur in the term: delta(a, A) is
// nonempty only for A = {a}, and every other case either forwards A to a
// subterm or splits it as B1 + B2 over the two operands of &.  So
// delta(t, A) is empty unless A is a subset of support(t).
std::vector<Term> Deriver::compute(Term t, SymSet a) {
  std::vector<Term> out;
  if (a.mask() & ~t.support()) return out;
  switch (t.kind()) {
    case Kind::kZero:
    case Kind::kOne:
    case Kind::kH:
      break;
    case Kind::kLetter:
      if (a.mask() == letter_bit(t.letter())) out.push_back(Term::one());
      break;
    case Kind::kPlus: {
      const auto& l = delta(t.left(), a);
      out = l;
      const auto& r = delta(t.right(), a);
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Kind::kSeq: {
      for (Term d : delta(t.left(), a)) out.push_back(Term::seq(d, t.right()));
      if (t.left().nullable()) {
        const auto& r = delta(t.right(), a);
        out.insert(out.end(), r.begin(), r.end());
      }
      break;
    }
    case Kind::kStar:
      for (Term d : delta(t.inner(), a)) out.push_back(Term::seq(d, t));
      break;
    case Kind::kSync: {
      Term e = t.left();
      Term f = t.right();
      // Delta(e, f, A) and Delta(f, e, A).
      if (f.nullable()) {
        const auto& l = delta(e, a);
        out.insert(out.end(), l.begin(), l.end());
      }
      if (e.nullable()) {
        const auto& r = delta(f, a);
        out.insert(out.end(), r.begin(), r.end());
      }
      // All ordered (B1, B2) of nonempty sets with B1 + B2 = A.
      const LetterMask all = a.mask();
      for (LetterMask b1 = all; b1 != 0; b1 = (b1 - 1) & all) {
        const LetterMask forced = all & ~b1;
        for (LetterMask extra = b1;; extra = (extra - 1) & b1) {
          const LetterMask b2 = forced | extra;
          if (b2 != 0) {
            const auto& dl = delta(e, SymSet(b1));
            if (!dl.empty()) {
              const auto& dr = delta(f, SymSet(b2));
              for (Term x : dl) {
                for (Term y : dr) out.push_back(Term::sync(x, y));
              }
            }
          }
          if (extra == 0) break;
        }
      }
      break;
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Term> delta(Term t, SymSet a) {
  Deriver d;
  std::vector<Term> v = d.delta(t, a);
  sort_structural(v);
  return v;
}

namespace {

class ReachEvaluator {
 public:
  const std::vector<Term>& reach(Term t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    std::vector<Term> result = compute(t);
    sort_unique(result);
    return memo_.emplace(t, std::move(result)).first->second;
  }

 private:
  std::vector<Term> compute(Term t) {
    std::vector<Term> out;
    switch (t.kind()) {
      case Kind::kZero:
        break;
      case Kind::kOne:
      case Kind::kH:
        out.push_back(Term::one());
        break;
      case Kind::kLetter:
        out = {Term::one(), t};
        break;
      case Kind::kPlus: {
        out = reach(t.left());
        const auto& r = reach(t.right());
        out.insert(out.end(), r.begin(), r.end());
        break;
      }
      case Kind::kSeq: {
        for (Term d : reach(t.left())) out.push_back(Term::seq(d, t.right()));
        const auto& r = reach(t.right());
        out.insert(out.end(), r.begin(), r.end());
        break;
      }
      case Kind::kStar:
        out.push_back(Term::one());
        for (Term d : reach(t.inner())) out.push_back(Term::seq(d, t));
        break;
      case Kind::kSync: {
        const auto& l = reach(t.left());
        const auto& r = reach(t.right());
        for (Term x : l) {
          for (Term y : r) out.push_back(Term::sync(x, y));
        }
        out.insert(out.end(), l.begin(), l.end());
        out.insert(out.end(), r.begin(), r.end());
        break;
      }
    }
    return out;
  }

  std::unordered_map<Term, std::vector<Term>> memo_;
};

}  // namespace

std::vector<Term> reach(Term t) {
  ReachEvaluator ev;
  std::vector<Term> v = ev.reach(t);
  sort_structural(v);
  return v;
}

std::optional<std::size_t> Automaton::index_of(Term t) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == t) return i;
  }
  return std::nullopt;
}

std::size_t Automaton::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : transitions) {
    for (const auto& [letter, targets] : row) n += targets.size();
  }
  return n;
}

Automaton build_automaton(Term t) {
  warn_if_large_support(t.support());
  Automaton aut;
  aut.initial = t;
  aut.alphabet = t.support();

  std::vector<Term> rho = reach(t);
  aut.states.push_back(t);
  for (Term q : rho) {
    if (q != t) aut.states.push_back(q);
  }
  std::unordered_map<Term, std::size_t> index;
  for (std::size_t i = 0; i < aut.states.size(); ++i) index[aut.states[i]] = i;
  std::unordered_map<Term, bool> in_rho;
  for (Term q : rho) in_rho[q] = true;

  Deriver deriver;
  const std::vector<SymSet> letters = nonempty_subsets(aut.alphabet);
  aut.accepting.resize(aut.states.size());
  aut.transitions.resize(aut.states.size());
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    Term q = aut.states[i];
    aut.accepting[i] = out(q);
    for (SymSet a : letters) {
      const auto& targets = deriver.delta(q, a);
      if (targets.empty()) continue;
      std::vector<std::size_t> ids;
      for (Term target : targets) {
        // Every derivative of t, and of every member of rho(t), lies in rho(t).
        if (!in_rho.count(target)) {
          throw std::logic_error("derivative " + print_term(target) + " of " +
                                 print_term(q) + " escapes the reach set");
        }
        ids.push_back(index.at(target));
      }
      std::sort(ids.begin(), ids.end());
      aut.transitions[i].emplace(a, std::move(ids));
    }
  }
  return aut;
}

bool accepts(const Automaton& aut, const SyncWord& w) {
  std::vector<bool> current(aut.states.size(), false);
  current[0] = true;
  for (SymSet s : w) {
    if (s.mask() & ~aut.alphabet) return false;
    std::vector<bool> next(aut.states.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!current[i]) continue;
      auto it = aut.transitions[i].find(s);
      if (it == aut.transitions[i].end()) continue;
      for (std::size_t j : it->second) next[j] = any = true;
    }
    if (!any) return false;
    current = std::move(next);
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] && aut.accepting[i]) return true;
  }
  return false;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Automaton& aut) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  start [shape=point];\n";
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    os << "  q" << i << " [label=\"" << dot_escape(print_term(aut.states[i]))
       << "\", shape=" << (aut.accepting[i] ? "doublecircle" : "circle")
       << "];\n";
  }
  os << "  start -> q0;\n";
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    for (const auto& [letter, targets] : aut.transitions[i]) {
      for (std::size_t j : targets) {
        os << "  q" << i << " -> q" << j << " [label=\""
           << print_symset(letter) << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

Unfold fundamental_unfold(Term t) {
  Unfold u;
  u.out = out(t);
  Deriver deriver;
  for (SymSet a : nonempty_subsets(t.support())) {
    std::vector<std::pair<std::string, Term>> row;
    for (Term d : deriver.delta(t, a)) row.emplace_back(print_term(d), d);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [text, d] : row) u.summands.emplace_back(a, d);
  }
  return u;
}

Term reassemble(const Unfold& u) {
  std::vector<Term> parts = {u.out ? Term::one() : Term::zero()};
  for (const auto& [a, d] : u.summands) {
    parts.push_back(Term::seq(pi(a).term(), d));
  }
  return sum_of(parts);
}

void warn_if_large_support(LetterMask support) {
  int n = std::popcount(support);
  if (n > kSupportWarnLetters) {
    std::cerr << "warning: term mentions " << n << " letters; derivatives range"
              << " over " << ((1ULL << n) - 1) << " letter sets\n";
  }
}

}  // namespace ska
