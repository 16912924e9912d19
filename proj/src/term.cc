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

#include "ska/term.h"

#include <deque>
#include <limits>
#include <mutex>
#include <unordered_set>

namespace ska {

struct TermNode {
  Kind kind;
  char letter;
  const TermNode* left;
  const TermNode* right;
  // Derived, filled in by intern().
  std::size_t hash;
  std::uint64_t id;
  std::uint64_t size;
  LetterMask support;
  bool is_sl;
  bool h_free;
  bool nullable;
};

namespace {

struct ProtoHash {
  std::size_t operator()(const TermNode* n) const { return n->hash; }
};

struct ProtoEq {
  bool operator()(const TermNode* a, const TermNode* b) const {
    return a->kind == b->kind && a->letter == b->letter &&
           a->left == b->left && a->right == b->right;
  }
};

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

class InternTable {
 public:
  const TermNode* get(TermNode proto) {
    proto.hash = static_cast<std::size_t>(proto.kind);
    proto.hash = mix(proto.hash, static_cast<std::size_t>(proto.letter));
    proto.hash = mix(proto.hash, proto.left ? proto.left->hash : 0);
    proto.hash = mix(proto.hash, proto.right ? proto.right->hash : 1);

    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = table_.find(&proto); it != table_.end()) return *it;
    fill_derived(proto);
    proto.id = nodes_.size();
    nodes_.push_back(proto);
    const TermNode* node = &nodes_.back();
    table_.insert(node);
    return node;
  }

 private:
  static void fill_derived(TermNode& n) {
    const TermNode* l = n.left;
    const TermNode* r = n.right;
    n.size = 1;
    if (l) n.size = saturating_add(n.size, l->size);
    if (r) n.size = saturating_add(n.size, r->size);
    n.support = (l ? l->support : 0) | (r ? r->support : 0);
    n.h_free = (l ? l->h_free : true) && (r ? r->h_free : true);
    switch (n.kind) {
      case Kind::kZero:
        n.is_sl = false;
        n.nullable = false;
        break;
      case Kind::kOne:
        n.is_sl = false;
        n.nullable = true;
        break;
      case Kind::kLetter:
        n.support = letter_bit(n.letter);
        n.is_sl = true;
        n.nullable = false;
        break;
      case Kind::kPlus:
        n.is_sl = false;
        n.nullable = l->nullable || r->nullable;
        break;
      case Kind::kSeq:
        n.is_sl = false;
        n.nullable = l->nullable && r->nullable;
        break;
      case Kind::kSync:
        n.is_sl = l->is_sl && r->is_sl;
        n.nullable = l->nullable && r->nullable;
        break;
      case Kind::kStar:
        n.is_sl = false;
        n.nullable = true;
        break;
      case Kind::kH:
        n.is_sl = false;
        n.h_free = false;
        n.nullable = l->nullable;
        break;
    }
  }

  std::mutex mu_;
  std::deque<TermNode> nodes_;
  std::unordered_set<const TermNode*, ProtoHash, ProtoEq> table_;
};

InternTable& table() {
  static auto* t = new InternTable;
  return *t;
}

TermNode make_proto(Kind kind, char letter, const TermNode* l,
                    const TermNode* r) {
  TermNode n{};
  n.kind = kind;
  n.letter = letter;
  n.left = l;
  n.right = r;
  return n;
}

}  // namespace

Term intern(const TermNode& proto) { return Term(table().get(proto)); }

Term::Term() : node_(zero().node_) {}

Term Term::zero() {
  static const Term t = intern(make_proto(Kind::kZero, 0, nullptr, nullptr));
  return t;
}

Term Term::one() {
  static const Term t = intern(make_proto(Kind::kOne, 0, nullptr, nullptr));
  return t;
}

Term Term::letter(char c) {
  if (!is_letter(c)) throw std::invalid_argument("letter must be in a-z");
  return intern(make_proto(Kind::kLetter, c, nullptr, nullptr));
}

Term Term::plus(Term l, Term r) {
  return intern(make_proto(Kind::kPlus, 0, l.node_, r.node_));
}

Term Term::seq(Term l, Term r) {
  return intern(make_proto(Kind::kSeq, 0, l.node_, r.node_));
}

Term Term::sync(Term l, Term r) {
  return intern(make_proto(Kind::kSync, 0, l.node_, r.node_));
}

Term Term::star(Term inner) {
  return intern(make_proto(Kind::kStar, 0, inner.node_, nullptr));
}

Term Term::h(Term inner) {
  return intern(make_proto(Kind::kH, 0, inner.node_, nullptr));
}

Kind Term::kind() const { return node_->kind; }
char Term::letter() const { return node_->letter; }
Term Term::left() const { return Term(node_->left); }
Term Term::right() const { return Term(node_->right); }
Term Term::inner() const { return Term(node_->left); }

bool Term::is_binary() const {
  return kind() == Kind::kPlus || kind() == Kind::kSeq ||
         kind() == Kind::kSync;
}

bool Term::is_unary() const {
  return kind() == Kind::kStar || kind() == Kind::kH;
}

std::uint64_t Term::size() const { return node_->size; }
LetterMask Term::support() const { return node_->support; }
bool Term::is_sl() const { return node_->is_sl; }
bool Term::h_free() const { return node_->h_free; }
bool Term::nullable() const { return node_->nullable; }
std::size_t Term::hash() const { return node_->hash; }
std::uint64_t Term::id() const { return node_->id; }

std::strong_ordering compare(Term a, Term b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::kZero:
    case Kind::kOne:
      return std::strong_ordering::equal;
    case Kind::kLetter:
      return a.letter() <=> b.letter();
    case Kind::kStar:
    case Kind::kH:
      return compare(a.inner(), b.inner());
    default:
      if (auto c = compare(a.left(), b.left()); c != 0) return c;
      return compare(a.right(), b.right());
  }
}

Term plus_units(Term l, Term r) {
  if (l.kind() == Kind::kZero) return r;
  if (r.kind() == Kind::kZero) return l;
  return Term::plus(l, r);
}

Term seq_units(Term l, Term r) {
  if (l.kind() == Kind::kZero || r.kind() == Kind::kZero) return Term::zero();
  if (l.kind() == Kind::kOne) return r;
  if (r.kind() == Kind::kOne) return l;
  return Term::seq(l, r);
}

Term star_units(Term inner) {
  if (inner.kind() == Kind::kZero) return Term::one();
  return Term::star(inner);
}

Term sum_of(const std::vector<Term>& terms) {
  if (terms.empty()) return Term::zero();
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = Term::plus(acc, terms[i]);
  return acc;
}

LetterMask parse_alphabet(std::string_view letters) {
  LetterMask mask = 0;
  for (char c : letters) {
    if (c == ',' || c == ' ') continue;
    if (!is_letter(c)) {
      throw std::invalid_argument(std::string("invalid alphabet letter '") +
                                  c + "'");
    }
    mask |= letter_bit(c);
  }
  return mask;
}

std::string alphabet_string(LetterMask mask) {
  std::string out;
  for (int i = 0; i < kMaxLetters; ++i) {
    if (mask & (LetterMask{1} << i)) out.push_back(static_cast<char>('a' + i));
  }
  return out;
}

}  // namespace ska
