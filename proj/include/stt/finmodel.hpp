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

#ifndef STT_FINMODEL_HPP
#define STT_FINMODEL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "stt/context.hpp"
#include "stt/term.hpp"

namespace stt {

// Environment: one carrier element (by index) per context position.
using Environment = std::vector<std::size_t>;

// Finite set-theoretic model of the simply-typed theory: bases get chosen
// cardinalities, Unit the one-element set, Prod the product, Fun the full
// (tabulated) function space. Elements are indices below the carrier's
// cardinality; functions are encoded little-endian base |B| over |A| digits.
class FinModel {
 public:
  FinModel(const Theory& theory, std::map<std::string, std::size_t> base_sizes,
           std::size_t guard = 1000000);

  const Theory& theory() const { return *theory_; }

  // Carrier cardinality; throws CarrierTooLarge past the guard.
  std::size_t card(const TypeExpr& sort) const;

  // Compositional interpretation. env must match ctx pointwise.
  std::size_t interp_term(const Context& ctx, const Term& t,
                          const Environment& env) const;

  // Every environment for a context, in lexicographic order.
  std::vector<Environment> all_envs(const Context& ctx) const;

  // Function-space helpers (exposed for tests and the CLI table printer).
  std::size_t apply(const TypeExpr& fun_sort, std::size_t fun, std::size_t arg) const;

 private:
  const Theory* theory_;
  std::map<std::string, std::size_t> base_sizes_;
  std::size_t guard_;
  std::size_t unit_op_, prod_op_, fun_op_;
  mutable std::unordered_map<TypeExpr, std::size_t, TypeExprHash> card_memo_;

  std::size_t checked_mul(std::size_t a, std::size_t b) const;
  std::size_t checked_pow(std::size_t b, std::size_t e) const;
};

}  // namespace stt

#endif  // STT_FINMODEL_HPP
