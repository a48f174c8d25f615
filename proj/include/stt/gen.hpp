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

#ifndef STT_GEN_HPP
#define STT_GEN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "stt/context.hpp"
#include "stt/equations.hpp"
#include "stt/subst.hpp"
#include "stt/term.hpp"

namespace stt {

// Seeded generator of well-sorted terms, contexts, and valuations.
// Deterministic for a fixed seed. Generation is inhabitation-aware: it only
// commits to an operator once every premiss is known to be fillable within
// the remaining size budget.
class TermGen {
 public:
  TermGen(const Theory& theory, std::uint64_t seed);

  const Theory& theory() const { return theory_; }

  // Uniform integer in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  bool chance(double p);

  // Random ground sort from the generator's pool.
  TypeExpr random_sort();
  // Random context with sorts from the pool.
  Context random_context(std::size_t max_len);

  // Random well-sorted term, or nullopt when the sort is uninhabited within
  // the budget.
  std::optional<Term> random_term(const Context& ctx, const TypeExpr& sort,
                                  std::size_t size_budget);

  // Picks a sort inhabited in ctx within the budget and a term of that sort.
  std::optional<std::pair<TypeExpr, Term>> random_inhabited(const Context& ctx,
                                                            std::size_t size_budget);

  // Random explicit term of the given sort; Subst nodes appear with
  // probability subst_p at each eligible step.
  std::optional<ExplicitTerm> random_explicit(const Context& ctx,
                                              const TypeExpr& sort,
                                              std::size_t size_budget,
                                              double subst_p = 0.3);

  // Random valuation for an equation over a random (or given) base context.
  std::optional<Valuation> random_valuation(const TermEquation& eq,
                                            const Context& base,
                                            std::size_t filler_size);

  bool inhabited(const Context& ctx, const TypeExpr& sort, std::size_t budget);
  std::size_t min_size(const Context& ctx, const TypeExpr& sort, std::size_t cap);

  const std::vector<TypeExpr>& pool() const { return pool_; }

 private:
  const Theory& theory_;
  std::mt19937_64 rng_;
  std::vector<TypeExpr> pool_;  // ground sorts used for contexts and insts

  struct Key {
    Context ctx;
    TypeExpr sort;
    std::size_t budget;
    bool operator==(const Key& o) const {
      return budget == o.budget && sort == o.sort && ctx == o.ctx;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, bool, KeyHash> inhab_memo_;

  std::vector<TypeExpr> universe_for(const Context& ctx, const TypeExpr& sort);
  std::optional<std::vector<std::size_t>> arg_min_sizes(
      std::size_t op, const std::vector<TypeExpr>& inst, const Context& ctx,
      std::size_t budget);
};

// Greedy shrinker: repeatedly replaces the term with a structurally smaller
// same-sort term (an unbound argument or a variable) while the predicate
// keeps failing. Returns the smallest failing term found.
Term shrink_term(const Theory& theory, const Context& ctx, Term failing,
                 const std::function<bool(const Term&)>& still_fails);

}  // namespace stt

#endif  // STT_GEN_HPP
