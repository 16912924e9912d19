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

// A synchronous Kleene algebra in which a* & a* differs from a*.
//
// The carrier is every synchronous language over the one-letter alphabet
// {{s}}, plus an extra element "dagger".  Over one letter a word is determined
// by its length, so a language is a set of naturals; every value reachable
// from {{s}} is eventually periodic, which is how UnaryLang stores it.  The
// synchronous product of two infinite languages collapses to dagger.

#ifndef SKA_COUNTERMODEL_H_
#define SKA_COUNTERMODEL_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ska/term.h"

namespace ska {

// An eventually periodic set of naturals: n < threshold is a member iff
// low[n]; n >= threshold is a member iff cycle[(n - threshold) % period].
// Always canonical (minimal period, then minimal threshold), so structural
// equality is set equality.
class UnaryLang {
 public:
  UnaryLang();  // the empty set

  // Builds from an arbitrary (not necessarily minimal) description.
  UnaryLang(std::vector<bool> low, std::vector<bool> cycle);

  static UnaryLang empty() { return UnaryLang(); }
  static UnaryLang epsilon() { return finite({0}); }  // {0}
  static UnaryLang generator() { return finite({1}); }  // {{s}}
  static UnaryLang naturals() { return UnaryLang({}, {true}); }
  static UnaryLang finite(const std::vector<std::size_t>& members);

  std::size_t threshold() const { return low_.size(); }
  std::size_t period() const { return cycle_.size(); }
  const std::vector<bool>& low() const { return low_; }
  const std::vector<bool>& cycle() const { return cycle_; }

  bool contains(std::size_t n) const;
  bool is_empty() const;
  bool is_infinite() const;
  // Smallest member; undefined on the empty set.
  std::size_t min_member() const;
  // Members up to and including n.
  std::vector<std::size_t> members_up_to(std::size_t n) const;

  friend bool operator==(const UnaryLang& a, const UnaryLang& b) {
    return a.low_ == b.low_ && a.cycle_ == b.cycle_;
  }

 private:
  std::vector<bool> low_;
  std::vector<bool> cycle_;
};

bool is_infinite(const UnaryLang& l);

UnaryLang unary_union(const UnaryLang& k, const UnaryLang& l);
// {i + j : i in K, j in L}: concatenation of unary languages.
UnaryLang unary_sum(const UnaryLang& k, const UnaryLang& l);
// {max(i, j) : i in K, j in L}: synchronous product of unary languages.
UnaryLang unary_max(const UnaryLang& k, const UnaryLang& l);
// Closure of K + {0} under addition: Kleene star of a unary language.
UnaryLang unary_star(const UnaryLang& k);

struct Dagger {
  friend bool operator==(Dagger, Dagger) { return true; }
};

class ModelElement {
 public:
  ModelElement(UnaryLang l) : value_(std::move(l)) {}  // NOLINT
  ModelElement(Dagger d) : value_(d) {}                // NOLINT
  static ModelElement dagger() { return ModelElement(Dagger{}); }

  bool is_dagger() const { return std::holds_alternative<Dagger>(value_); }
  // Throws std::logic_error on dagger.
  const UnaryLang& lang() const;
  bool is_empty_lang() const { return !is_dagger() && lang().is_empty(); }
  // Dagger is not an infinite language.
  bool is_infinite() const { return !is_dagger() && lang().is_infinite(); }

  friend bool operator==(const ModelElement& a, const ModelElement& b) {
    return a.value_ == b.value_;
  }

 private:
  std::variant<Dagger, UnaryLang> value_;
};

// The operators, each case tried in order.
//   K + L: dagger if either is dagger; else union.
//   K ; L: empty if either is empty; dagger if either is dagger; else sum.
//   K & L: empty if either is empty; dagger if either is dagger or both are
//          infinite; else pointwise max.
//   K*   : dagger if K is dagger; else the star.
ModelElement cm_plus(const ModelElement& k, const ModelElement& l);
ModelElement cm_dot(const ModelElement& k, const ModelElement& l);
ModelElement cm_sync(const ModelElement& k, const ModelElement& l);
ModelElement cm_star(const ModelElement& k);

// K <= L iff K + L = L.
bool cm_leq(const ModelElement& k, const ModelElement& l);

class CountermodelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters must map to the only semilattice element, {{s}} (= generator()).
// Letters absent from the valuation default to it.
using Valuation = std::map<char, ModelElement>;

// Interprets an H-free term.  Throws CountermodelError on H or on a letter
// valued outside the semilattice.
ModelElement eval_cm(Term t, const Valuation& valuation = {});

// "{n1,n2} + {r1,r2} mod p from t", members below t then residues mod p of
// the members from t on; dagger prints as "dagger".
std::string print_unary(const UnaryLang& l);
std::string print_element(const ModelElement& m);

}  // namespace ska

#endif  // SKA_COUNTERMODEL_H_
