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

#include <set>

#include "oracles.h"
#include "ska/random_terms.h"
#include "ska/semilattice.h"

namespace ska {
namespace {

SlTerm sl(const char* text) { return SlTerm(parse_term(text)); }

TEST(SymSet, Basics) {
  SymSet s = SymSet::of("ca");
  EXPECT_EQ(s.mask(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains('c'));
  EXPECT_FALSE(s.contains('b'));
  EXPECT_EQ(s.letters(), "ac");
  EXPECT_EQ(s | SymSet::of("b"), SymSet::of("abc"));
  EXPECT_THROW(SymSet(0), std::invalid_argument);
}

TEST(SymSet, PrintParse) {
  EXPECT_EQ(print_symset(SymSet::of("ba")), "{a,b}");
  EXPECT_EQ(parse_symset("{b,a}"), SymSet::of("ab"));
  EXPECT_EQ(parse_symset("{ c }"), SymSet::of("c"));
  EXPECT_THROW(parse_symset("{}"), SyntaxError);
  EXPECT_THROW(parse_symset("{a"), SyntaxError);
  std::size_t pos = 0;
  EXPECT_EQ(parse_symset("{a}{b}", pos), SymSet::of("a"));
  EXPECT_EQ(pos, 3u);
}

TEST(SymSet, OrderMatchesStringOracle) {
  for (LetterMask a = 1; a < 32; ++a) {
    for (LetterMask b = 1; b < 32; ++b) {
      EXPECT_EQ(SymSet(a) < SymSet(b), oracle::symset_less(a, b))
          << oracle::mask_name(a) << " " << oracle::mask_name(b);
    }
  }
  EXPECT_LT(SymSet::of("a"), SymSet::of("ab"));
  EXPECT_LT(SymSet::of("ab"), SymSet::of("b"));
}

TEST(SymSet, NonemptySubsets) {
  auto subsets = nonempty_subsets(0b111);
  ASSERT_EQ(subsets.size(), 7u);
  EXPECT_TRUE(std::is_sorted(subsets.begin(), subsets.end()));
  EXPECT_EQ(print_symset(subsets.front()), "{a}");
  EXPECT_EQ(print_symset(subsets.back()), "{c}");
  EXPECT_TRUE(nonempty_subsets(0).empty());
}

TEST(SlTerm, RejectsNonSemilatticeTerms) {
  EXPECT_THROW(SlTerm(parse_term("a + b")), std::invalid_argument);
  EXPECT_THROW(SlTerm(parse_term("1")), std::invalid_argument);
}

TEST(SlSem, Examples) {
  EXPECT_EQ(sl_sem(sl("a")), SymSet::of("a"));
  EXPECT_EQ(sl_sem(sl("(a & a) & (c & b)")), SymSet::of("abc"));
  EXPECT_EQ(sl_sem(sl("b & a")), SymSet::of("ab"));
}

TEST(Pi, Examples) {
  EXPECT_EQ(pi(SymSet::of("a")).term(), parse_term("a"));
  EXPECT_EQ(pi(SymSet::of("ba")).term(), parse_term("(a & b)"));
  EXPECT_EQ(pi(SymSet::of("abc")).term(), parse_term("((a & b) & c)"));
}

TEST(Pi, InjectiveAndRightInverse) {
  std::set<std::string> printed;
  for (LetterMask m = 1; m < (1u << 6); ++m) {
    SlTerm t = pi(SymSet(m));
    EXPECT_EQ(sl_sem(t), SymSet(m));
    EXPECT_TRUE(printed.insert(print_term(t.term())).second);
  }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_sl(sl("(a & a) & (c & b)")), sl("(a & b) & c"));
  EXPECT_EQ(normalize_sl(sl("a")), sl("a"));
  EXPECT_TRUE(is_canonical_atom(parse_term("a & b & c")));
  EXPECT_FALSE(is_canonical_atom(parse_term("b & a")));
  EXPECT_FALSE(is_canonical_atom(parse_term("a + b")));
}

TEST(SlEquiv, Examples) {
  EXPECT_TRUE(sl_equiv(sl("a & b"), sl("b & a")));
  EXPECT_TRUE(sl_equiv(sl("(a&a)&(c&b)"), sl("(a&b)&c")));
  EXPECT_FALSE(sl_equiv(sl("a"), sl("a & b")));
}

TEST(Semilattice, Properties) {
  TermGenerator g(5, TermShape{0b1111, 8});
  for (int i = 0; i < 500; ++i) {
    SlTerm e = g.sl_term(6);
    SlTerm f = g.sl_term(6);
    const SlTerm ne = normalize_sl(e);
    EXPECT_EQ(normalize_sl(ne), ne);
    EXPECT_TRUE(sl_equiv(e, ne));
    EXPECT_TRUE(is_canonical_atom(ne.term()));
    // Set equality, with the letters read off the printed text.
    const bool same = oracle::letters_in(print_term(e.term())) ==
                      oracle::letters_in(print_term(f.term()));
    EXPECT_EQ(sl_equiv(e, f), same);
    if (same) EXPECT_EQ(normalize_sl(e), normalize_sl(f));
    EXPECT_EQ(sl_sem(e).letters(), oracle::letters_in(print_term(e.term())));
  }
}

}  // namespace
}  // namespace ska
