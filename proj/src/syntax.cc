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

#include <string>

#include "ska/term.h"

namespace ska {

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": " + message),
      offset_(offset),
      detail_(message) {}

UnknownLetterError::UnknownLetterError(std::size_t offset, char letter)
    : SyntaxError(offset, std::string("unknown letter '") + letter +
                              "' (not in the declared alphabet)") {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<LetterMask> alphabet)
      : text_(text), alphabet_(alphabet) {}

  Term parse_all() {
    Term t = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Term parse_sum() {
    Term t = parse_sync();
    while (accept('+')) t = Term::plus(t, parse_sync());
    return t;
  }

  Term parse_sync() {
    Term t = parse_seq();
    while (accept('&')) t = Term::sync(t, parse_seq());
    return t;
  }

  Term parse_seq() {
    Term t = parse_postfix();
    while (accept(';')) t = Term::seq(t, parse_postfix());
    return t;
  }

  Term parse_postfix() {
    Term t = parse_atom();
    while (accept('*')) t = Term::star(t);
    return t;
  }

  Term parse_atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    std::size_t start = pos_;
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == '(') {
      ++pos_;
      Term t = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == 'H') {
      ++pos_;
      if (!accept('(')) fail("expected '(' after H");
      Term t = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return Term::h(t);
    }
    if (is_letter(c)) {
      if (alphabet_ && !(*alphabet_ & letter_bit(c))) {
        throw UnknownLetterError(start, c);
      }
      ++pos_;
      return Term::letter(c);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::optional<LetterMask> alphabet_;
  std::size_t pos_ = 0;
};

// Binding strength; higher binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::kPlus:
      return 1;
    case Kind::kSync:
      return 2;
    case Kind::kSeq:
      return 3;
    case Kind::kStar:
      return 4;
    default:
      return 5;
  }
}

const char* op_text(Kind k) {
  switch (k) {
    case Kind::kPlus:
      return " + ";
    case Kind::kSync:
      return " & ";
    default:
      return " ; ";
  }
}

void print_into(Term t, std::string& out);

void print_child(Term child, bool parens, std::string& out) {
  if (parens) out.push_back('(');
  print_into(child, out);
  if (parens) out.push_back(')');
}

void print_into(Term t, std::string& out) {
  switch (t.kind()) {
    case Kind::kZero:
      out.push_back('0');
      return;
    case Kind::kOne:
      out.push_back('1');
      return;
    case Kind::kLetter:
      out.push_back(t.letter());
      return;
    case Kind::kH:
      out += "H(";
      print_into(t.inner(), out);
      out.push_back(')');
      return;
    case Kind::kStar:
      print_child(t.inner(), precedence(t.inner().kind()) < precedence(Kind::kStar),
                  out);
      out.push_back('*');
      return;
    default: {
      // Left-associative: a right operand of equal strength needs parentheses.
      int p = precedence(t.kind());
      print_child(t.left(), precedence(t.left().kind()) < p, out);
      out += op_text(t.kind());
      print_child(t.right(), precedence(t.right().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text, std::optional<LetterMask> alphabet) {
  return Parser(text, alphabet).parse_all();
}

std::vector<Term> parse_term_lines(std::string_view text,
                                   std::optional<LetterMask> alphabet) {
  std::vector<Term> terms;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    std::size_t content = line.find_first_not_of(" \t\r");
    if (content != std::string_view::npos && line[content] != '#') {
      try {
        terms.push_back(parse_term(line, alphabet));
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_start + e.offset(), e.detail());
      }
    }
    line_start = end + 1;
  }
  return terms;
}

std::string print_term(Term t) {
  std::string out;
  print_into(t, out);
  return out;
}

}  // namespace ska
