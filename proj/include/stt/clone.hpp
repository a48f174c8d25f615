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

#ifndef STT_CLONE_HPP
#define STT_CLONE_HPP

#include <cstddef>
#include <vector>

#include "stt/context.hpp"
#include "stt/equations.hpp"
#include "stt/term.hpp"

namespace stt {

// One multihom of the classifying cartesian multicategory: a normal-form
// representative of an equivalence class of terms-in-context.
struct CloneHom {
  Context domain;
  TypeExpr codomain;
  Term representative;
};

struct HomSet {
  std::vector<CloneHom> homs;
  // Distinct representatives are only NotProvedEqual, so without a
  // confluence certificate the class count is an upper bound whenever more
  // than one class remains.
  bool count_is_upper_bound = false;
};

// Enumerates terms up to size_bound, normalizes, and deduplicates with
// term_equal. Deterministic order (first appearance in enumeration order).
HomSet hom(const Theory& theory, const Context& domain, const TypeExpr& codomain,
           std::size_t size_bound, std::size_t budget = kDefaultBudget);

// The identity at position p of the domain, as a hom.
CloneHom identity_hom(const Theory& theory, const Context& domain, std::size_t p);

// Multicategorical composition: substitutes gs (all over a common domain)
// for the positions of f's domain. gs[i] must have codomain f.domain[i].
CloneHom compose(const Theory& theory, const CloneHom& f,
                 const std::vector<CloneHom>& gs,
                 std::size_t budget = kDefaultBudget);

// Functorial action along a renaming of domains (exchange / weakening /
// contraction): requires r.source == f.domain; the result has domain r.target.
CloneHom structural(const Theory& theory, const CloneHom& f, const Renaming& r,
                    std::size_t budget = kDefaultBudget);

}  // namespace stt

#endif  // STT_CLONE_HPP
