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

#include "ska/equivalence.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "ska/derivatives.h"

namespace ska {
namespace {

using TermSet = std::vector<Term>;  // sorted by id, unique

struct TermSetHash {
  std::size_t operator()(const TermSet& s) const {
    std::size_t h = s.size();
    for (Term t : s) h = h * 1000003u ^ t.hash();
    return h;
  }
};

TermSet step(Deriver& deriver, const TermSet& from, SymSet a) {
  TermSet out;
  for (Term t : from) {
    const auto& d = deriver.delta(t, a);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end(), TermIdLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool accepting(const TermSet& s) {
  return std::any_of(s.begin(), s.end(), [](Term t) { return out(t); });
}

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class PairSearch {
 public:
  PairSearch(Term e, Term f, const EquivOptions& options)
      : e_(e), f_(f), options_(options) {}

  EquivResult run() {
    // Derivatives by letter sets outside either support are empty on both
    // sides, so the subsets of the joint support are a complete alphabet.
    const LetterMask support = e_.support() | f_.support();
    warn_if_large_support(support);
    const std::vector<SymSet> letters = nonempty_subsets(support);

    std::size_t x0 = state_id({e_});
    std::size_t y0 = state_id({f_});
    sets_.unite(x0, y0);
    pairs_.push_back({x0, y0, kNoParent, 0});

    EquivResult result;
    for (std::size_t head = 0; head < pairs_.size(); ++head) {
      const Pair p = pairs_[head];
      if (accepting(states_[p.x]) != accepting(states_[p.y])) {
        result.equivalent = false;
        result.witness = path_to(head);
        result.pairs_explored = head + 1;
        return result;
      }
      for (SymSet a : letters) {
        // Copies: state_id may grow states_.
        TermSet nx = step(deriver_, states_[p.x], a);
        TermSet ny = step(deriver_, states_[p.y], a);
        std::size_t x = state_id(std::move(nx));
        std::size_t y = state_id(std::move(ny));
        if (sets_.find(x) == sets_.find(y)) continue;
        sets_.unite(x, y);
        if (pairs_.size() >= options_.pair_cap) {
          throw ResourceLimitError(
              "equivalence check exceeded the state-pair cap of " +
              std::to_string(options_.pair_cap));
        }
        pairs_.push_back({x, y, head, a.mask()});
      }
    }
    result.pairs_explored = pairs_.size();
    return result;
  }

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  struct Pair {
    std::size_t x;
    std::size_t y;
    std::size_t parent;
    LetterMask letter;
  };

  std::size_t state_id(TermSet s) {
    auto [it, inserted] = ids_.try_emplace(s, states_.size());
    if (inserted) {
      states_.push_back(std::move(s));
      sets_.add();
    }
    return it->second;
  }

  SyncWord path_to(std::size_t index) const {
    SyncWord w;
    while (pairs_[index].parent != kNoParent) {
      w.push_back(SymSet(pairs_[index].letter));
      index = pairs_[index].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  Term e_;
  Term f_;
  EquivOptions options_;
  Deriver deriver_;
  std::vector<TermSet> states_;
  std::unordered_map<TermSet, std::size_t, TermSetHash> ids_;
  DisjointSets sets_;
  std::vector<Pair> pairs_;
};

}  // namespace

EquivResult equiv(Term e, Term f, const EquivOptions& options) {
  if (e == f) return EquivResult{true, std::nullopt, 1};
  return PairSearch(e, f, options).run();
}

bool member(const SyncWord& w, Term e) {
  Deriver deriver;
  TermSet current = {e};
  for (SymSet a : w) {
    current = step(deriver, current, a);
    if (current.empty()) return false;
  }
  return accepting(current);
}

}  // namespace ska
