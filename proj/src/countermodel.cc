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

#include "ska/countermodel.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ska {
namespace {

// bits[0 .. t+p) describes a set that is p-periodic from t on.  Returns the
// canonical (minimal period, then minimal threshold) split.
std::pair<std::vector<bool>, std::vector<bool>> canonical(
    const std::vector<bool>& bits, std::size_t t, std::size_t p) {
  std::size_t d = p;
  for (std::size_t cand = 1; cand < p; ++cand) {
    if (p % cand != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < p && ok; ++i) {
      ok = bits[t + i] == bits[t + (i + cand) % p];
    }
    if (ok) {
      d = cand;
      break;
    }
  }
  while (t > 0 && bits[t - 1] == bits[t - 1 + d]) --t;
  std::vector<bool> low(bits.begin(), bits.begin() + t);
  std::vector<bool> cycle(bits.begin() + t, bits.begin() + t + d);
  return {std::move(low), std::move(cycle)};
}

std::vector<bool> prefix(const UnaryLang& l, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = l.contains(i);
  return bits;
}

UnaryLang from_bits(const std::vector<bool>& bits, std::size_t t,
                    std::size_t p) {
  auto [low, cycle] = canonical(bits, t, p);
  return UnaryLang(std::move(low), std::move(cycle));
}

}  // namespace

UnaryLang::UnaryLang() : cycle_{false} {}

UnaryLang::UnaryLang(std::vector<bool> low, std::vector<bool> cycle) {
  if (cycle.empty()) throw std::invalid_argument("UnaryLang: empty cycle");
  const std::size_t t = low.size();
  const std::size_t p = cycle.size();
  std::vector<bool> bits = std::move(low);
  bits.insert(bits.end(), cycle.begin(), cycle.end());
  auto [l, c] = canonical(bits, t, p);
  low_ = std::move(l);
  cycle_ = std::move(c);
}

UnaryLang UnaryLang::finite(const std::vector<std::size_t>& members) {
  std::size_t t = 0;
  for (std::size_t m : members) t = std::max(t, m + 1);
  std::vector<bool> low(t, false);
  for (std::size_t m : members) low[m] = true;
  return UnaryLang(std::move(low), {false});
}

bool UnaryLang::contains(std::size_t n) const {
  if (n < low_.size()) return low_[n];
  return cycle_[(n - low_.size()) % cycle_.size()];
}

bool UnaryLang::is_empty() const {
  return !is_infinite() &&
         std::none_of(low_.begin(), low_.end(), [](bool b) { return b; });
}

bool UnaryLang::is_infinite() const {
  return std::any_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; });
}

std::size_t UnaryLang::min_member() const {
  for (std::size_t n = 0;; ++n) {
    if (contains(n)) return n;
  }
}

std::vector<std::size_t> UnaryLang::members_up_to(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool is_infinite(const UnaryLang& l) { return l.is_infinite(); }

UnaryLang unary_union(const UnaryLang& k, const UnaryLang& l) {
  const std::size_t t = std::max(k.threshold(), l.threshold());
  const std::size_t p = std::lcm(k.period(), l.period());
  std::vector<bool> bits(t + p);
  for (std::size_t n = 0; n < t + p; ++n) bits[n] = k.contains(n) || l.contains(n);
  return from_bits(bits, t, p);
}

// With P = lcm of the periods, n is in K + L iff n + P is, for every
// n >= tK + tL + P: a decomposition i + j of one side shifts by P in
// whichever summand already lies past its own threshold.
UnaryLang unary_sum(const UnaryLang& k, const UnaryLang& l) {
  if (k.is_empty() || l.is_empty()) return UnaryLang::empty();
  const std::size_t p = std::lcm(k.period(), l.period());
  const std::size_t t = k.threshold() + l.threshold() + p;
  const std::vector<bool> kb = prefix(k, t + p);
  const std::vector<bool> lb = prefix(l, t + p);
  std::vector<bool> bits(t + p, false);
  for (std::size_t i = 0; i < t + p; ++i) {
    if (!kb[i]) continue;
    for (std::size_t j = 0; i + j < t + p; ++j) {
      if (lb[j]) bits[i + j] = true;
    }
  }
  return from_bits(bits, t, p);
}

// Past both thresholds and both minima, every member of either operand pairs
// with a smaller member of the other, so K & L agrees with K + L from there.
UnaryLang unary_max(const UnaryLang& k, const UnaryLang& l) {
  if (k.is_empty() || l.is_empty()) return UnaryLang::empty();
  const std::size_t p = std::lcm(k.period(), l.period());
  const std::size_t t = std::max({k.threshold(), l.threshold(),
                                  k.min_member() + 1, l.min_member() + 1});
  std::vector<bool> bits(t + p, false);
  bool k_seen = false;
  bool l_seen = false;
  for (std::size_t n = 0; n < t + p; ++n) {
    const bool in_k = k.contains(n);
    const bool in_l = l.contains(n);
    k_seen = k_seen || in_k;
    l_seen = l_seen || in_l;
    bits[n] = (in_k && l_seen) || (in_l && k_seen);
  }
  return from_bits(bits, t, p);
}

// K* lies inside gZ, g the gcd of the positive members, and contains every
// multiple of g past the Frobenius number of the members below t + 2p.  Those
// members already have gcd g (a cycle member n comes with n + p), and with
// smallest m and largest M the Frobenius number is below m * M.
UnaryLang unary_star(const UnaryLang& k) {
  const std::size_t scan = k.threshold() + 2 * k.period();
  std::size_t g = 0;
  std::size_t smallest = 0;
  std::size_t largest = 0;
  for (std::size_t n = 1; n < scan; ++n) {
    if (!k.contains(n)) continue;
    g = std::gcd(g, n);
    if (smallest == 0) smallest = n;
    largest = n;
  }
  if (g == 0) return UnaryLang::epsilon();

  const std::size_t t = smallest * largest + 1;
  const std::size_t p = g;
  const std::vector<bool> kb = prefix(k, t + p);
  std::vector<std::size_t> positive;
  for (std::size_t n = 1; n < t + p; ++n) {
    if (kb[n]) positive.push_back(n);
  }
  std::vector<bool> bits(t + p, false);
  bits[0] = true;
  for (std::size_t n = 1; n < t + p; ++n) {
    for (std::size_t m : positive) {
      if (m > n) break;
      if (bits[n - m]) {
        bits[n] = true;
        break;
      }
    }
  }
  return from_bits(bits, t, p);
}

const UnaryLang& ModelElement::lang() const {
  if (is_dagger()) throw std::logic_error("dagger is not a language");
  return std::get<UnaryLang>(value_);
}

ModelElement cm_plus(const ModelElement& k, const ModelElement& l) {
  if (k.is_dagger() || l.is_dagger()) return Dagger{};
  return unary_union(k.lang(), l.lang());
}

ModelElement cm_dot(const ModelElement& k, const ModelElement& l) {
  if (k.is_empty_lang() || l.is_empty_lang()) return UnaryLang::empty();
  if (k.is_dagger() || l.is_dagger()) return Dagger{};
  return unary_sum(k.lang(), l.lang());
}

ModelElement cm_sync(const ModelElement& k, const ModelElement& l) {
  if (k.is_empty_lang() || l.is_empty_lang()) return UnaryLang::empty();
  if (k.is_dagger() || l.is_dagger()) return Dagger{};
  if (k.is_infinite() && l.is_infinite()) return Dagger{};
  return unary_max(k.lang(), l.lang());
}

ModelElement cm_star(const ModelElement& k) {
  if (k.is_dagger()) return Dagger{};
  return unary_star(k.lang());
}

bool cm_leq(const ModelElement& k, const ModelElement& l) {
  return cm_plus(k, l) == l;
}

namespace {

class ModelEvaluator {
 public:
  explicit ModelEvaluator(const Valuation& valuation) {
    for (const auto& [letter, value] : valuation) {
      if (!(value == ModelElement(UnaryLang::generator()))) {
        throw CountermodelError(std::string("letter '") + letter +
                                "' must be valued in the semilattice {{s}}, "
                                "got " + print_element(value));
      }
    }
  }

  ModelElement eval(Term t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    ModelElement result = compute(t);
    memo_.emplace(t, result);
    return result;
  }

 private:
  ModelElement compute(Term t) {
    switch (t.kind()) {
      case Kind::kZero:
        return UnaryLang::empty();
      case Kind::kOne:
        return UnaryLang::epsilon();
      case Kind::kLetter:
        return UnaryLang::generator();
      case Kind::kPlus:
        return cm_plus(eval(t.left()), eval(t.right()));
      case Kind::kSeq:
        return cm_dot(eval(t.left()), eval(t.right()));
      case Kind::kSync:
        return cm_sync(eval(t.left()), eval(t.right()));
      case Kind::kStar:
        return cm_star(eval(t.inner()));
      case Kind::kH:
        break;
    }
    throw CountermodelError(
        "H has no interpretation in the countermodel: " + print_term(t));
  }

  std::unordered_map<Term, ModelElement> memo_;
};

}  // namespace

ModelElement eval_cm(Term t, const Valuation& valuation) {
  return ModelEvaluator(valuation).eval(t);
}

std::string print_unary(const UnaryLang& l) {
  std::string out = "{";
  bool first = true;
  for (std::size_t n = 0; n < l.threshold(); ++n) {
    if (!l.low()[n]) continue;
    if (!first) out.push_back(',');
    out += std::to_string(n);
    first = false;
  }
  out += "} + {";
  std::vector<std::size_t> residues;
  for (std::size_t i = 0; i < l.period(); ++i) {
    if (l.cycle()[i]) residues.push_back((l.threshold() + i) % l.period());
  }
  std::sort(residues.begin(), residues.end());
  first = true;
  for (std::size_t r : residues) {
    if (!first) out.push_back(',');
    out += std::to_string(r);
    first = false;
  }
  out += "} mod " + std::to_string(l.period()) + " from " +
         std::to_string(l.threshold());
  return out;
}

std::string print_element(const ModelElement& m) {
  return m.is_dagger() ? "dagger" : print_unary(m.lang());
}

}  // namespace ska
