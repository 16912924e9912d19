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

// Acceptance suite.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "ska/checks.h"
#include "ska/countermodel.h"
#include "ska/derivatives.h"
#include "ska/equivalence.h"
#include "ska/language.h"
#include "ska/normal_form.h"
#include "ska/random_terms.h"
#include "ska/semilattice.h"

namespace {

using namespace ska;  // NOLINT

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;  // 0 for none
  std::function<Outcome()> run;
};

TermGenerator generator(std::uint64_t seed, LetterMask alphabet,
                        std::size_t max_size) {
  TermShape shape;
  shape.alphabet = alphabet;
  shape.max_size = max_size;
  return TermGenerator(seed, shape);
}

Outcome incompleteness() {
  Outcome o;
  const Term astar = parse_term("a*");
  const Term both = parse_term("a* & a*");
  if (!eval_cm(both).is_dagger()) o.fail("a* & a* is not dagger");
  if (!(eval_cm(astar) == ModelElement(UnaryLang::naturals()))) {
    o.fail("a* is " + print_element(eval_cm(astar)));
  }
  if (!equiv(both, astar).equivalent) o.fail("a* & a* not equivalent to a*");
  o.detail = o.pass ? "eval-cm(a* & a*) = dagger, eval-cm(a*) = N, equivalent"
                    : o.detail;
  return o;
}

Outcome derivative_soundness() {
  Outcome o;
  TermGenerator g = generator(2024, 0b111, 12);
  const BoundedLang words = all_words(0b111, 4);
  std::size_t checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Term t = g.next();
    const Automaton aut = build_automaton(t);
    const BoundedLang sem = sem_bounded(t, 4);
    for (const SyncWord& w : words.words()) {
      ++checked;
      if (accepts(aut, w) != sem.contains(w)) {
        o.fail(print_term(t) + " on " + print_word(w));
      }
    }
  }
  if (o.pass) o.detail = "300 terms, " + std::to_string(checked) + " words, 0 mismatches";
  return o;
}

Outcome fundamental() {
  Outcome o;
  TermGenerator g = generator(2025, 0b111, 12);
  for (int i = 0; i < 300; ++i) {
    const Term t = g.next();
    const Term r = reassemble(fundamental_unfold(t));
    if (!(sem_bounded(r, 4) == sem_bounded(t, 4))) o.fail(print_term(t));
  }
  if (o.pass) o.detail = "300 terms at bound 4, 0 mismatches";
  return o;
}

Outcome from_report(const CheckReport& r, std::size_t min_instances) {
  Outcome o;
  for (const auto& p : r.properties) {
    if (!p.ok()) o.fail(p.name + ": " + p.first_failure);
    if (p.instances < min_instances) {
      o.fail(p.name + " has only " + std::to_string(p.instances) + " instances");
    }
  }
  return o;
}

Outcome axioms() {
  CheckConfig c;
  c.seed = 2026;
  c.iters = 100;
  const CheckReport r = run_check("axioms", c);
  Outcome o = from_report(r, 100);
  if (o.pass) {
    o.detail = std::to_string(r.properties.size()) +
               " schemas, >= 100 instances each, 0 failures";
  }
  return o;
}

Outcome normal_form() {
  Outcome o;
  TermGenerator g = generator(2027, 0b111, 8);
  for (int i = 0; i < 200; ++i) {
    const Term t = g.next();
    const Term nf = to_normal_form(t);
    if (!classify(nf).nsf) o.fail("not NSF: " + print_term(nf));
    if (!equiv(nf, t).equivalent) o.fail("not equivalent: " + print_term(t));
    const LinSystem sys = build_system(t);
    const std::vector<bool> ok = check_solution(sys, sys.states);
    if (std::find(ok.begin(), ok.end(), false) != ok.end()) {
      o.fail("identity vector is not a solution for " + print_term(t));
    }
  }
  if (o.pass) o.detail = "200 terms: NSF, equivalent, identity solves the system";
  return o;
}

Outcome countermodel() {
  CheckConfig c;
  c.seed = 2028;
  c.iters = 100;  // 50 sampled elements
  const CheckReport r = run_check("countermodel", c);
  Outcome o = from_report(r, 1);
  const PropertyTally* inf = r.find("finite-sync-infinite-is-infinite");
  if (inf == nullptr || inf->instances == 0) o.fail("no finite x infinite pairs");
  if (o.pass) {
    o.detail = "50 elements, " + std::to_string(r.properties.size()) +
               " properties, " + std::to_string(inf->instances) +
               " finite x infinite pairs";
  }
  return o;
}

Outcome known_answers() {
  Outcome o;
  if (!equiv(parse_term("(a;b)* & (a;b)*"), parse_term("(a;b)*")).equivalent) {
    o.fail("(a;b)* & (a;b)* not equivalent to (a;b)*");
  }
  const Term lhs = parse_term("(a+b)* & (a+b)*");
  const Term rhs = parse_term("(a+b)*");
  const EquivResult r = equiv(lhs, rhs);
  if (r.equivalent || !r.witness) {
    o.fail("(a+b)* & (a+b)* reported equivalent to (a+b)*");
  } else {
    if (print_word(*r.witness) != "{a,b}") {
      o.fail("witness " + print_word(*r.witness));
    }
    if (!member(*r.witness, lhs) || member(*r.witness, rhs)) {
      o.fail("witness membership is wrong");
    }
  }
  if (o.pass) o.detail = "equivalent; not equivalent with witness {a,b}";
  return o;
}

Outcome semilattice_layer() {
  Outcome o;
  TermGenerator g = generator(2029, 0b1111, 4);
  constexpr int kN = 200;
  for (int i = 0; i < kN; ++i) {
    const SymSet a = g.symset();
    if (!(sl_sem(pi(a)) == a)) o.fail("right inverse at " + print_symset(a));
  }
  for (int i = 0; i < kN; ++i) {
    const SlTerm e = g.sl_term(6);
    if (!(normalize_sl(normalize_sl(e)) == normalize_sl(e))) {
      o.fail("idempotence at " + print_term(e.term()));
    }
  }
  for (int i = 0; i < kN; ++i) {
    const SlTerm e = g.sl_term(4);
    const SlTerm f = g.sl_term(4);
    const bool same = oracle::letters_in(print_term(e.term())) ==
                      oracle::letters_in(print_term(f.term()));
    if (sl_equiv(e, f) != same) {
      o.fail("sl_equiv at " + print_term(e.term()) + ", " + print_term(f.term()));
    }
  }
  for (int i = 0; i < kN; ++i) {
    const BoundedLang k = g.language(3, 6);
    const BoundedLang l = g.language(3, 6);
    if (!(pi_lang(lang_union(k, l)) == lang_union(pi_lang(k), pi_lang(l)))) {
      o.fail("pi over union");
    }
    if (!(pi_lang(lang_concat(k, l)) == lang_concat(pi_lang(k), pi_lang(l)))) {
      o.fail("pi over concatenation");
    }
    if (!(pi_lang(lang_star(k)) == lang_star(pi_lang(k)))) o.fail("pi over star");
  }
  if (o.pass) o.detail = "200 instances per law, 0 failures";
  return o;
}

Outcome oracle_cross_check() {
  Outcome o;
  std::vector<Term> terms;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto layer = oracle::terms_of_size(n, {'a', 'b'});
    terms.insert(terms.end(), layer.begin(), layer.end());
  }
  // Buckets of terms with equal languages up to length 2, so that half of
  // the pairs are likely equivalent.
  std::map<std::set<oracle::Word>, std::vector<Term>> buckets;
  for (Term t : terms) buckets[oracle::language(t, 0b11, 2)].push_back(t);
  std::vector<const std::vector<Term>*> rich;
  for (const auto& [lang, members] : buckets) {
    if (members.size() > 1) rich.push_back(&members);
  }

  std::mt19937_64 rng(2030);
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  constexpr std::size_t kPairs = 3000;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < kPairs; ++i) {
    Term e;
    Term f;
    if (i % 2 == 0) {
      e = terms[pick(terms.size())];
      f = terms[pick(terms.size())];
    } else {
      const std::vector<Term>& b = *rich[pick(rich.size())];
      e = b[pick(b.size())];
      f = b[pick(b.size())];
    }
    const bool fast = equiv(e, f).equivalent;
    const bool slow = oracle::equivalent(e, f, 0b11);
    equal += slow;
    if (fast != slow) o.fail(print_term(e) + " vs " + print_term(f));
  }
  if (o.pass) {
    o.detail = std::to_string(kPairs) + " pairs from " +
               std::to_string(terms.size()) + " terms (" + std::to_string(equal) +
               " equivalent), 0 disagreements";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "incompleteness reproduction", 1, incompleteness},
      {2, "derivative soundness", 60, derivative_soundness},
      {3, "fundamental theorem", 0, fundamental},
      {4, "axiom soundness", 0, axioms},
      {5, "normal form", 300, normal_form},
      {6, "countermodel axioms", 0, countermodel},
      {7, "known-answer equivalences", 0, known_answers},
      {8, "semilattice layer", 0, semilattice_layer},
      {9, "oracle cross-check", 0, oracle_cross_check},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(c.time_limit_s) + " s");
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
