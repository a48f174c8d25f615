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

#ifndef STT_EQUATIONS_HPP
#define STT_EQUATIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stt/context.hpp"
#include "stt/metaterm.hpp"
#include "stt/signature.hpp"
#include "stt/term.hpp"

namespace stt {

inline constexpr std::size_t kDefaultBudget = 10000;

// Instantiation of an equation's schematic data: ground sorts for its type
// metavariables and a concrete term for each placeholder. filler[i] lives in
// `base` extended by the i-th placeholder's binder sorts instantiated at
// `inst`.
struct Valuation {
  std::vector<TypeExpr> inst;
  Context base;
  std::vector<Term> fillers;
};

// Sort-checks one side of a term equation in the equation's own parametric
// context (sorts are type expressions over the equation's metavariables,
// compared up to type normalization). Returns the side's sort.
Result<TypeExpr> check_meta(const Theory& theory, const TermEquation& eq,
                            const MetaTerm& side);

// The context a meta-substituted side lives in: the valuation's base context
// extended by the equation's instantiated parameter context.
Context meta_subst_context(const Theory& theory, const TermEquation& eq,
                           const Valuation& v);

// Replaces every placeholder occurrence MVar(i, sub) by the valuation's
// i-th filler with its binders instantiated at the (recursively
// meta-substituted) sub terms, and maps operators and variables
// homomorphically. The result lives in meta_subst_context(eq, v).
Term meta_subst(const Theory& theory, const TermEquation& eq,
                const MetaTerm& side, const Valuation& v);

// Second-order matching against the Miller pattern fragment: every
// placeholder occurrence in a pattern must instantiate its binders with
// distinct pattern-bound variables. On success the recovered valuation
// instantiates the pattern to exactly the subject.
// Components never reached by the pattern stay unassigned.
struct Match {
  std::vector<std::optional<TypeExpr>> type_inst;        // per metavariable
  std::vector<std::optional<Term>> fillers;              // per placeholder
  std::vector<std::optional<std::size_t>> param_positions;  // per param entry
};
std::optional<Match> match_pattern(const Theory& theory, const TermEquation& eq,
                                   const MetaTerm& pattern, const Term& subject,
                                   const Context& ctx);

// Checks that a left-hand side falls in the Miller pattern fragment and
// determines everything the right-hand side needs. Returns a reason when not.
std::optional<std::string> pattern_violation(const Theory& theory,
                                             const TermEquation& eq);

// Leftmost-outermost rewriting with the theory's oriented term equations.
// Throws BudgetExhausted / UnorientedEquation.
Term normalize_term(const Theory& theory, const Context& ctx, const Term& t,
                    std::size_t budget = kDefaultBudget);

enum class Verdict { Equal, NotProvedEqual };

// Equal iff both normal forms coincide syntactically. Sound but not
// complete: without a confluence certificate a NotProvedEqual verdict does
// not witness disequality.
Verdict term_equal(const Theory& theory, const Context& ctx, const Term& a,
                   const Term& b, std::size_t budget = kDefaultBudget);

}  // namespace stt

#endif  // STT_EQUATIONS_HPP
