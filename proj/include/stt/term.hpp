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

#ifndef STT_TERM_HPP
#define STT_TERM_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "stt/context.hpp"
#include "stt/types.hpp"

namespace stt {

struct Theory;

// Intrinsically scoped term of the syntactic model.
//
// Var(i) is a de Bruijn index: 0 refers to the most recent context entry.
// Op nodes carry the full instantiation of the operator's type
// metavariables (inst, ground normal forms), the ambient variables the
// operator's parameter slots point at (params, de Bruijn indices), and one
// argument per premiss. The i-th argument lives in the ambient context
// extended by the i-th premiss's binder sorts instantiated at inst.
class Term {
 public:
  Term() = default;

  static Term var(std::size_t index);
  static Term make_op(std::size_t op, std::vector<TypeExpr> inst,
                      std::vector<std::size_t> params, std::vector<Term> args);

  bool valid() const { return node_ != nullptr; }
  bool is_var() const;
  std::size_t var_index() const;
  std::size_t op() const;
  const std::vector<TypeExpr>& inst() const;
  const std::vector<std::size_t>& params() const;
  const std::vector<Term>& args() const;

  std::size_t op_node_count() const;  // the size measure used for enumeration
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// ---- de Bruijn plumbing -------------------------------------------------

// Binder sorts of premiss `i` of `t`'s operator, instantiated at t.inst()
// and normalized.
std::vector<TypeExpr> instantiated_binders(const Theory& theory, const Term& t,
                                           std::size_t premiss);

// Rewrites every free variable of t. fn(index, depth) receives the index
// as written (so index >= depth) and returns the replacement index, again
// relative to the same depth. Applied to params entries as well. The theory
// supplies premiss binder counts.
Term map_free_vars(const Theory& theory, const Term& t,
                   const std::function<std::size_t(std::size_t, std::size_t)>& fn);

// Adds `amount` to every free variable index of t.
Term shift_free(const Theory& theory, const Term& t, std::size_t amount);

// ---- operations ---------------------------------------------------------

// Sort checking (the rule-driven algebra map). Total: ill-sorted terms
// yield a diagnostic. On success the sort is a ground normal form.
Result<TypeExpr> check(const Theory& theory, const Context& ctx, const Term& t);

// check() that throws instead of returning diagnostics.
TypeExpr sort_of(const Theory& theory, const Context& ctx, const Term& t);

// Presheaf action: transports a term along a context renaming, lifting the
// renaming under binders. Renaming a well-sorted term preserves its sort.
Term rename(const Theory& theory, const Term& t, const Renaming& r);

// All well-sorted terms of sort `sort` in `ctx` with at most `size_bound`
// operator nodes, in a fixed deterministic order and without duplicates.
// Type metavariable instantiations are drawn from the finite universe of
// sorts reachable from ctx and sort (their subexpressions plus the nullary
// type operators); see `enumeration_universe`.
// Throws NonEnumerableOperator when an operator has a metavariable that
// appears in none of its premiss/parameter/conclusion sorts.
std::vector<Term> enumerate(const Theory& theory, const Context& ctx,
                            const TypeExpr& sort, std::size_t size_bound);

// The instantiation universe used by `enumerate`.
std::vector<TypeExpr> enumeration_universe(const Theory& theory,
                                           const Context& ctx,
                                           const TypeExpr& sort);

// Instantiations inst (drawn from `universe`) of `op`'s metavariables for
// which the conclusion becomes `sort` and every premiss/binder/parameter
// sort stays inside `universe`. Deterministic order.
std::vector<std::vector<TypeExpr>> admissible_instantiations(
    const Theory& theory, std::size_t op, const TypeExpr& sort,
    const std::vector<TypeExpr>& universe);

}  // namespace stt

#endif  // STT_TERM_HPP
