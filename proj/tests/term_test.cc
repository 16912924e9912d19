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

#include <string>

#include "oracles.h"
#include "ska/random_terms.h"
#include "ska/term.h"

namespace ska {
namespace {

Term L(char c) { return Term::letter(c); }

TEST(Parse, Sync) {
  EXPECT_EQ(parse_term("a & b"), Term::sync(L('a'), L('b')));
}

TEST(Parse, StarSyncH) {
  EXPECT_EQ(parse_term("(a ; b)* & H(1)"),
            Term::sync(Term::star(Term::seq(L('a'), L('b'))), Term::h(Term::one())));
}

TEST(Parse, Precedence) {
  // * binds tightest, then ;, then &, then +.
  EXPECT_EQ(parse_term("a + b & c ; d*"),
            Term::plus(L('a'), Term::sync(L('b'), Term::seq(L('c'), Term::star(L('d'))))));
}

TEST(Parse, LeftAssociative) {
  EXPECT_EQ(parse_term("a + b + c"), Term::plus(Term::plus(L('a'), L('b')), L('c')));
  EXPECT_EQ(parse_term("a;b;c"), Term::seq(Term::seq(L('a'), L('b')), L('c')));
  EXPECT_EQ(parse_term("a&b&c"), Term::sync(Term::sync(L('a'), L('b')), L('c')));
}

TEST(Parse, RepeatedStar) {
  EXPECT_EQ(parse_term("a**"), Term::star(Term::star(L('a'))));
}

TEST(Parse, Whitespace) {
  EXPECT_EQ(parse_term("  ( a\t+b ) * "), Term::star(Term::plus(L('a'), L('b'))));
}

TEST(Parse, IncompleteInputOffset) {
  try {
    parse_term("a &");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_term(""), SyntaxError);
  EXPECT_THROW(parse_term("a b"), SyntaxError);
  EXPECT_THROW(parse_term("(a"), SyntaxError);
  EXPECT_THROW(parse_term("H a"), SyntaxError);
  EXPECT_THROW(parse_term("A"), SyntaxError);
  EXPECT_THROW(parse_term("*a"), SyntaxError);
  try {
    parse_term("a + ?");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Parse, DeclaredAlphabet) {
  EXPECT_NO_THROW(parse_term("a + b", parse_alphabet("ab")));
  try {
    parse_term("a + c", parse_alphabet("ab"));
    FAIL();
  } catch (const UnknownLetterError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Parse, Lines) {
  auto terms = parse_term_lines("# header\na\n\n  # indented comment\nb* # trailing\n");
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0], L('a'));
  EXPECT_EQ(terms[1], Term::star(L('b')));
  EXPECT_THROW(parse_term_lines("a\nb +\n"), SyntaxError);
}

TEST(Print, Examples) {
  EXPECT_EQ(print_term(Term::sync(L('a'), L('b'))), "a & b");
  EXPECT_EQ(print_term(Term::star(Term::plus(L('a'), L('b')))), "(a + b)*");
  EXPECT_EQ(print_term(Term::zero()), "0");
  EXPECT_EQ(print_term(Term::h(Term::one())), "H(1)");
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print_term(Term::plus(L('a'), Term::plus(L('b'), L('c')))), "a + (b + c)");
  EXPECT_EQ(print_term(Term::plus(Term::plus(L('a'), L('b')), L('c'))), "a + b + c");
  EXPECT_EQ(print_term(Term::seq(Term::plus(L('a'), L('b')), L('c'))), "(a + b) ; c");
  EXPECT_EQ(print_term(Term::sync(L('a'), Term::seq(L('b'), L('c')))), "a & b ; c");
  EXPECT_EQ(print_term(Term::star(Term::star(L('a')))), "a**");
  EXPECT_EQ(print_term(Term::star(Term::h(L('a')))), "H(a)*");
}

TEST(Print, RoundTripProperty) {
  TermGenerator g(7, TermShape{0b1111, 16});
  for (int i = 0; i < 2000; ++i) {
    Term t = g.next();
    const std::string s = print_term(t);
    ASSERT_EQ(parse_term(s), t) << s;
  }
}

TEST(Term, HashConsing) {
  Term x = Term::seq(L('a'), Term::star(L('b')));
  Term y = Term::seq(L('a'), Term::star(L('b')));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.id(), y.id());
  EXPECT_EQ(Term(), Term::zero());
}

TEST(Term, CachedProperties) {
  Term t = parse_term("(a ; b)* & H(c)");
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(t.support(), parse_alphabet("abc"));
  EXPECT_FALSE(t.is_sl());
  EXPECT_FALSE(t.h_free());
  EXPECT_FALSE(t.nullable());
  EXPECT_TRUE(parse_term("(a & b) & c").is_sl());
  EXPECT_TRUE(parse_term("a* & H(1)").nullable());
}

TEST(Term, SizeSaturates) {
  Term t = L('a');
  for (int i = 0; i < 80; ++i) t = Term::plus(t, t);  // shared, 2^80 nodes
  EXPECT_EQ(t.size(), UINT64_MAX);
}

TEST(Term, CompareIsStructuralTotalOrder) {
  TermGenerator g(3, TermShape{0b111, 6});
  std::vector<Term> ts;
  for (int i = 0; i < 60; ++i) ts.push_back(g.next());
  for (Term a : ts) {
    EXPECT_EQ(compare(a, a), std::strong_ordering::equal);
    for (Term b : ts) {
      EXPECT_EQ(compare(a, b) == 0, a == b);
      EXPECT_EQ(compare(a, b) < 0, compare(b, a) > 0);
      for (Term c : ts) {
        if (compare(a, b) < 0 && compare(b, c) < 0) {
          EXPECT_TRUE(compare(a, c) < 0);
        }
      }
    }
  }
}

TEST(Term, UnitConstructors) {
  Term a = L('a');
  EXPECT_EQ(plus_units(a, Term::zero()), a);
  EXPECT_EQ(plus_units(Term::zero(), a), a);
  EXPECT_EQ(seq_units(a, Term::one()), a);
  EXPECT_EQ(seq_units(Term::one(), a), a);
  EXPECT_EQ(seq_units(a, Term::zero()), Term::zero());
  EXPECT_EQ(star_units(Term::zero()), Term::one());
  EXPECT_EQ(sum_of({}), Term::zero());
  EXPECT_EQ(sum_of({a, L('b'), L('c')}), parse_term("a + b + c"));
}

TEST(Classify, Examples) {
  Fragments sync = classify(parse_term("a & b"));
  EXPECT_TRUE(sync.sl);
  EXPECT_TRUE(sync.ska);
  Fragments h = classify(parse_term("H(a)"));
  EXPECT_FALSE(h.sl);
  EXPECT_FALSE(h.ska);
  EXPECT_TRUE(h.sf1);
  EXPECT_FALSE(h.nsf);
  EXPECT_TRUE(classify(parse_term("(a&b) ; c*")).nsf);
}

TEST(Classify, AtomsMustBeCanonical) {
  // a & b is its own SL normal form, so it is an atom of the normal-form
  // grammar; the other bracketings and orders are not.
  EXPECT_TRUE(classify(parse_term("a & b")).nsf);
  EXPECT_FALSE(classify(parse_term("b & a")).nsf);
  EXPECT_FALSE(classify(parse_term("a & a")).nsf);
  EXPECT_FALSE(classify(parse_term("a & (b & c)")).nsf);
  EXPECT_TRUE(classify(parse_term("a & b & c")).nsf);
  EXPECT_FALSE(classify(parse_term("a* & b")).nsf);
  EXPECT_TRUE(classify(parse_term("0 + 1 ; (a & c)*")).nsf);
}

TEST(Classify, MonotoneProperty) {
  TermGenerator g(11, TermShape{0b111, 10});
  for (int i = 0; i < 2000; ++i) {
    Term t = g.next();
    Fragments f = classify(t);
    EXPECT_TRUE(f.sf1);
    if (f.sl) EXPECT_TRUE(f.ska) << print_term(t);
    if (f.nsf) EXPECT_TRUE(f.ska) << print_term(t);
    EXPECT_EQ(f.ska, t.h_free());
    EXPECT_EQ(f.sl, oracle::letters_in(print_term(t)).size() > 0 &&
                        print_term(t).find_first_of("01+;*H") == std::string::npos)
        << print_term(t);
  }
}

TEST(Alphabet, ParseAndPrint) {
  EXPECT_EQ(parse_alphabet("cab"), 0b111u);
  EXPECT_EQ(alphabet_string(0b101), "ac");
  EXPECT_THROW(parse_alphabet("a1"), std::invalid_argument);
}

}  // namespace
}  // namespace ska
