// Copyright 2026 The stt authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STT_CONTEXT_HPP
#define STT_CONTEXT_HPP

#include <cstddef>
#include <vector>

#include "stt/types.hpp"

namespace stt {

struct Theory;

// Free cartesian context: a list of ground sorts in normal form.
// Position 0 is the oldest entry; the last entry is the most recent one
// (the one de Bruijn index 0 refers to in terms).
struct Context {
  std::vector<TypeExpr> sorts;

  std::size_t size() const { return sorts.size(); }
  bool empty() const { return sorts.empty(); }
  const TypeExpr& operator[](std::size_t position) const { return sorts[position]; }

  // Sort of the variable with de Bruijn index i.
  const TypeExpr& sort_of_index(std::size_t index) const;

  std::size_t hash() const;
  friend bool operator==(const Context& a, const Context& b) { return a.sorts == b.sorts; }
  friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }
};

struct ContextHash {
  std::size_t operator()(const Context& c) const { return c.hash(); }
};

// Sort-preserving position map between contexts:
// target.sorts[map[p]] == source.sorts[p] for every source position p.
struct Renaming {
  Context source;
  Context target;
  std::vector<std::size_t> map;
};

Context extend(const Theory& theory, const Context& ctx, const TypeExpr& sort);
Context concat(const Theory& theory, const Context& ctx,
               const std::vector<TypeExpr>& sorts);

Renaming rename_id(const Context& ctx);
// Pointwise composition; requires r.target == s.source.
Renaming rename_compose(const Renaming& r, const Renaming& s);

// The admissible structural operations, as renamings.
Renaming weaken(const Theory& theory, const Context& ctx, const TypeExpr& sort);
Renaming exchange(const Theory& theory, const Context& ctx, std::size_t position);
// Identifies positions i and j (of equal sort): the target drops position j
// and both original positions map to (what was) position i.
Renaming contract(const Theory& theory, const Context& ctx, std::size_t i,
                  std::size_t j);

// Verifies the sort-preservation invariant; throws ContextMismatch.
void validate_renaming(const Theory& theory, const Renaming& r);

}  // namespace stt

#endif  // STT_CONTEXT_HPP
