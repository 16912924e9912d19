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

#ifndef SKA_TERM_H_
#define SKA_TERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ska {

// Letters are the characters 'a'..'z'; a set of letters is a 26-bit mask.
inline constexpr int kMaxLetters = 26;
using LetterMask = std::uint32_t;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }
inline LetterMask letter_bit(char c) { return LetterMask{1} << (c - 'a'); }

enum class Kind : std::uint8_t {
  kZero,
  kOne,
  kLetter,
  kPlus,
  kSeq,
  kSync,
  kStar,
  kH,
};

struct TermNode;

// An immutable, hash-consed term.  Two terms are structurally equal iff they
// share the same node, so equality and hashing are O(1).  Nodes are interned
// in a process-wide table and never freed; a Term is a trivially copyable
// handle that may be shared freely across threads.
class Term {
 public:
  // Default-constructed terms are 0.
  Term();

  static Term zero();
  static Term one();
  static Term letter(char c);
  static Term plus(Term l, Term r);
  static Term seq(Term l, Term r);
  static Term sync(Term l, Term r);
  static Term star(Term inner);
  static Term h(Term inner);

  Kind kind() const;
  char letter() const;  // only for kLetter
  Term left() const;    // binary nodes
  Term right() const;   // binary nodes
  Term inner() const;   // kStar and kH

  bool is_binary() const;
  bool is_unary() const;

  // Number of AST nodes, counting shared subterms once per occurrence.
  // Saturates at UINT64_MAX.
  std::uint64_t size() const;
  // Letters occurring anywhere in the term.
  LetterMask support() const;
  // True iff the term is built from letters and & only.
  bool is_sl() const;
  // True iff H does not occur.
  bool h_free() const;
  // Termination map: true iff the empty word is in the language.
  bool nullable() const;

  std::size_t hash() const;
  // Creation index of the node; consistent with identity, not with structure.
  std::uint64_t id() const;

  friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }

 private:
  explicit Term(const TermNode* node) : node_(node) {}
  friend Term intern(const TermNode& proto);

  const TermNode* node_;
};

// Total structural order: kind, then letter, then children left to right.
std::strong_ordering compare(Term a, Term b);

struct TermLess {
  bool operator()(Term a, Term b) const { return compare(a, b) < 0; }
};

// Orders by node identity.  Cheap; deterministic within a process for a fixed
// sequence of constructions.
struct TermIdLess {
  bool operator()(Term a, Term b) const { return a.id() < b.id(); }
};

struct TermHash {
  std::size_t operator()(Term t) const { return t.hash(); }
};

// Constructors applying the unit laws e+0 = e, 0+e = e, e;1 = e, 1;e = e,
// e;0 = 0 = 0;e and 0* = 1.  Nothing else is rewritten.
Term plus_units(Term l, Term r);
Term seq_units(Term l, Term r);
Term star_units(Term inner);

// Left-nested sum of the given terms; 0 when empty.
Term sum_of(const std::vector<Term>& terms);

// ---------------------------------------------------------------------------
// Concrete syntax.
//
//   term   ::= sum
//   sum    ::= sync ('+' sync)*
//   sync   ::= seq ('&' seq)*
//   seq    ::= postfix (';' postfix)*
//   postfix::= atom '*'*
//   atom   ::= '0' | '1' | letter | 'H' '(' term ')' | '(' term ')'
//
// Whitespace is ignored and '#' starts a comment running to end of line.

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

class UnknownLetterError : public SyntaxError {
 public:
  UnknownLetterError(std::size_t offset, char letter);
};

// Parses a single term.  When `alphabet` is given, letters outside it are
// rejected with UnknownLetterError.
Term parse_term(std::string_view text,
                std::optional<LetterMask> alphabet = std::nullopt);

// Parses one term per non-blank, non-comment line.
std::vector<Term> parse_term_lines(
    std::string_view text, std::optional<LetterMask> alphabet = std::nullopt);

// Prints with minimal parentheses; the result re-parses to the same term.
std::string print_term(Term t);

// Grammar fragments a term belongs to.
struct Fragments {
  bool sl = false;   // letters and & only
  bool ska = false;  // H-free
  bool sf1 = true;   // every term
  bool nsf = false;  // 0, 1, canonical atoms, +, ;, *
};

Fragments classify(Term t);

// Parses an alphabet declaration such as "abc".
LetterMask parse_alphabet(std::string_view letters);
std::string alphabet_string(LetterMask mask);

}  // namespace ska

template <>
struct std::hash<ska::Term> {
  std::size_t operator()(ska::Term t) const { return t.hash(); }
};

#endif  // SKA_TERM_H_
