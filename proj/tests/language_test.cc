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

#include <gtest/gtest.h>

#include "oracles.h"
#include "ska/language.h"
#include "ska/random_terms.h"

namespace ska {
namespace {

SyncWord W(const char* text) { return parse_word(text); }

BoundedLang lang(std::size_t bound, std::initializer_list<const char*> words) {
  BoundedLang l(bound);
  for (const char* w : words) l.insert(W(w));
  return l;
}

oracle::Word to_oracle(const SyncWord& w) {
  oracle::Word out;
  for (SymSet a : w) out.push_back(a.mask());
  return out;
}

TEST(Word, ParsePrint) {
  EXPECT_EQ(print_word(W("{b,a}{c}")), "{a,b}{c}");
  EXPECT_EQ(print_word(W("eps")), "eps");
  EXPECT_TRUE(W("eps").empty());
  EXPECT_THROW(W("{a}x"), SyntaxError);
  EXPECT_THROW(W("{}"), SyntaxError);
}

TEST(WordSync, Examples) {
  EXPECT_EQ(word_sync(W("{a}{b}"), W("{c}")), W("{a,c}{b}"));
  EXPECT_EQ(word_sync(W("eps"), W("{a}{b}")), W("{a}{b}"));
  EXPECT_EQ(word_sync(W("{a}"), W("{a}")), W("{a}"));
}

TEST(WordSync, Laws) {
  TermGenerator g(2, TermShape{0b111, 4});
  for (int i = 0; i < 500; ++i) {
    SyncWord u = g.word(5), v = g.word(5), x = g.word(5);
    EXPECT_EQ(word_sync(u, v), word_sync(v, u));
    EXPECT_EQ(word_sync(u, word_sync(v, x)), word_sync(word_sync(u, v), x));
    EXPECT_EQ(word_sync(u, {}), u);
    EXPECT_EQ(word_sync(u, v).size(), std::max(u.size(), v.size()));
  }
}

TEST(LangOps, Examples) {
  EXPECT_EQ(lang_sync(lang(4, {"{a}{b}"}), lang(4, {"{c}"})), lang(4, {"{a,c}{b}"}));
  EXPECT_EQ(lang_star(lang(2, {"{a}"})), lang(2, {"eps", "{a}", "{a}{a}"}));
  EXPECT_EQ(lang_h(lang(3, {"eps", "{a}"})), lang(3, {"eps"}));
  EXPECT_EQ(lang_union(lang(2, {"{a}"}), lang(2, {"{b}"})), lang(2, {"{a}", "{b}"}));
  EXPECT_EQ(lang_concat(lang(2, {"{a}", "eps"}), lang(2, {"{b}{b}"})),
            lang(2, {"{b}{b}"}));
}

TEST(LangOps, StarTerminatesWithEpsilon) {
  EXPECT_EQ(lang_star(lang(3, {"eps"})), lang(3, {"eps"}));
  EXPECT_EQ(lang_star(lang(3, {"eps", "{a}{a}"})),
            lang(3, {"eps", "{a}{a}"}));
}

TEST(LangOps, BoundMismatch) {
  EXPECT_THROW(lang_union(BoundedLang(2), BoundedLang(3)), BoundMismatchError);
  EXPECT_THROW(lang_sync(BoundedLang(2), BoundedLang(3)), BoundMismatchError);
}

TEST(LangOps, InsertDropsLongWords) {
  BoundedLang l(1);
  EXPECT_FALSE(l.insert(W("{a}{a}")));
  EXPECT_TRUE(l.empty());
}

TEST(SemBounded, Examples) {
  EXPECT_EQ(sem_bounded(parse_term("a ; b"), 2), lang(2, {"{a}{b}"}));
  EXPECT_TRUE(sem_bounded(parse_term("(a+b)* & (a+b)*"), 1).contains(W("{a,b}")));
  EXPECT_FALSE(sem_bounded(parse_term("(a+b)*"), 1).contains(W("{a,b}")));
  const BoundedLang astar = lang(3, {"eps", "{a}", "{a}{a}", "{a}{a}{a}"});
  EXPECT_EQ(sem_bounded(parse_term("a* & a*"), 3), astar);
  EXPECT_EQ(sem_bounded(parse_term("a*"), 3), astar);
  EXPECT_EQ(sem_bounded(parse_term("H(a* ; b)"), 3), lang(3, {}));
  EXPECT_EQ(sem_bounded(parse_term("H(a* + b)"), 3), lang(3, {"eps"}));
}

TEST(SemBounded, AgreesWithAutomatonOracle) {
  TermGenerator g(13, TermShape{0b111, 10});
  for (int i = 0; i < 300; ++i) {
    Term t = g.next();
    const BoundedLang sem = sem_bounded(t, 3);
    const auto expected = oracle::language(t, 0b111, 3);
    std::set<oracle::Word> got;
    for (const SyncWord& w : sem.words()) got.insert(to_oracle(w));
    ASSERT_EQ(got, expected) << print_term(t);
  }
}

TEST(SemBounded, TruncationCoherence) {
  TermGenerator g(17, TermShape{0b111, 10});
  for (int i = 0; i < 200; ++i) {
    Term t = g.next();
    const BoundedLang full = sem_bounded(t, 4);
    for (std::size_t m = 0; m <= 4; ++m) {
      EXPECT_EQ(full.truncated(m), sem_bounded(t, m)) << print_term(t);
    }
  }
}

TEST(AllWords, Counts) {
  EXPECT_EQ(all_words(0b11, 2).size(), 1u + 3u + 9u);
  EXPECT_EQ(all_words(0b111, 0).size(), 1u);
}

TEST(PrintLang, ShortLexOneWordPerLine) {
  EXPECT_EQ(print_lang(lang(2, {"{b}", "eps", "{a}{b}", "{a}", "{a,b}"})),
            "eps\n{a}\n{a,b}\n{b}\n{a}{b}\n");
}

TEST(Pi, WordExamples) {
  PiWord w = pi_word(W("{a,b}{c}"));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], parse_term("a & b"));
  EXPECT_EQ(w[1], parse_term("c"));
  EXPECT_EQ(sl_sem(SlTerm(w[0])), SymSet::of("ab"));
  EXPECT_TRUE(pi_word(W("eps")).empty());
}

TEST(Pi, LanguageHomomorphism) {
  TermGenerator g(19, TermShape{0b111, 4});
  for (int i = 0; i < 200; ++i) {
    BoundedLang k = g.language(3, 6);
    BoundedLang l = g.language(3, 6);
    EXPECT_EQ(pi_lang(lang_union(k, l)), lang_union(pi_lang(k), pi_lang(l)));
    EXPECT_EQ(pi_lang(lang_concat(k, l)), lang_concat(pi_lang(k), pi_lang(l)));
    EXPECT_EQ(pi_lang(lang_star(k)), lang_star(pi_lang(k)));
  }
}

}  // namespace
}  // namespace ska
