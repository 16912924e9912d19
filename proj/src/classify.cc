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

#include <unordered_map>

#include "ska/semilattice.h"
#include "ska/term.h"

namespace ska {
namespace {

// A maximal SL subterm is an atom; it must be a fixed point of normalization.
// Any other & or H rules the term out.
bool is_nsf(Term t, std::unordered_map<Term, bool>& memo) {
  if (t.is_sl()) return is_canonical_atom(t);
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  bool result = false;
  switch (t.kind()) {
    case Kind::kZero:
    case Kind::kOne:
      result = true;
      break;
    case Kind::kPlus:
    case Kind::kSeq:
      result = is_nsf(t.left(), memo) && is_nsf(t.right(), memo);
      break;
    case Kind::kStar:
      result = is_nsf(t.inner(), memo);
      break;
    default:
      result = false;
  }
  memo.emplace(t, result);
  return result;
}

}  // namespace

Fragments classify(Term t) {
  Fragments f;
  f.sl = t.is_sl();
  f.ska = t.h_free();
  f.sf1 = true;
  std::unordered_map<Term, bool> memo;
  f.nsf = is_nsf(t, memo);
  return f;
}

}  // namespace ska
