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

#include "stt/gen.hpp"

#include <algorithm>

#include "stt/signature.hpp"

namespace stt {

namespace {
inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

std::size_t TermGen::KeyHash::operator()(const Key& k) const {
  return hash_mix(hash_mix(k.ctx.hash(), k.sort.hash()), k.budget);
}

TermGen::TermGen(const Theory& theory, std::uint64_t seed)
    : theory_(theory), rng_(seed) {
  // Sort pool: bases plus one and two levels of operator applications over
  // them, capped to keep instantiation searches small.
  std::vector<TypeExpr> level0 = theory.base_sorts();
  for (TypeExpr& t : level0) t = ty_normalize(theory, t);
  auto add = [&](const TypeExpr& t) {
    if (std::find(pool_.begin(), pool_.end(), t) == pool_.end()) pool_.push_back(t);
  };
  for (const TypeExpr& t : level0) add(t);
  std::vector<TypeExpr> level1;
  for (std::size_t op = 0; op < theory.type_ops.size(); ++op) {
    std::size_t n = theory.type_ops[op].arity;
    if (n == 0 || n > 2 || level0.empty()) continue;
    std::vector<TypeExpr> args(n);
    auto rec = [&](std::size_t i, auto&& self) -> void {
      if (i == n) {
        TypeExpr t = ty_normalize(theory, TypeExpr::app(op, args));
        if (std::find(level1.begin(), level1.end(), t) == level1.end())
          level1.push_back(t);
        return;
      }
      for (const TypeExpr& s : level0) {
        args[i] = s;
        self(i + 1, self);
      }
    };
    rec(0, rec);
  }
  for (const TypeExpr& t : level1) {
    add(t);
    if (pool_.size() >= 10) break;
  }
  // a second level gives the generators some depth without exploding
  for (std::size_t op = 0; op < theory.type_ops.size() && pool_.size() < 14; ++op) {
    if (theory.type_ops[op].arity != 2 || level0.empty() || level1.empty()) continue;
    add(ty_normalize(theory, TypeExpr::app(op, {level1.front(), level0.front()})));
    add(ty_normalize(theory, TypeExpr::app(op, {level0.front(), level1.front()})));
  }
  std::sort(pool_.begin(), pool_.end(),
            [](const TypeExpr& a, const TypeExpr& b) { return compare(a, b) < 0; });
}

std::size_t TermGen::below(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(rng_() % n);
}

bool TermGen::chance(double p) {
  return (static_cast<double>(rng_() >> 11) / 9007199254740992.0) < p;
}

TypeExpr TermGen::random_sort() {
  if (pool_.empty())
    fail(Code::UnsupportedTheory,
         "theory has no ground sorts; cannot generate terms");
  return pool_[below(pool_.size())];
}

Context TermGen::random_context(std::size_t max_len) {
  Context ctx;
  std::size_t len = below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) ctx.sorts.push_back(random_sort());
  return ctx;
}

std::vector<TypeExpr> TermGen::universe_for(const Context& ctx, const TypeExpr& sort) {
  std::vector<TypeExpr> u = enumeration_universe(theory_, ctx, sort);
  for (const TypeExpr& p : pool_)
    if (std::find(u.begin(), u.end(), p) == u.end()) u.push_back(p);
  std::sort(u.begin(), u.end(),
            [](const TypeExpr& a, const TypeExpr& b) { return compare(a, b) < 0; });
  return u;
}

namespace {
constexpr std::size_t kNoSize = static_cast<std::size_t>(-1);
}

// Smallest operator count b <= cap at which the sort is inhabited, or kNoSize.
std::size_t TermGen::min_size(const Context& ctx, const TypeExpr& sort,
                              std::size_t cap) {
  for (std::size_t b = 0; b <= cap; ++b)
    if (inhabited(ctx, sort, b)) return b;
  return kNoSize;
}

// Exact (joint-budget) inhabitation within the generator's universe.
bool TermGen::inhabited(const Context& ctx, const TypeExpr& sort, std::size_t budget) {
  TypeExpr target = ty_normalize(theory_, sort);
  Key key{ctx, target, budget};
  auto it = inhab_memo_.find(key);
  if (it != inhab_memo_.end()) return it->second;
  bool ok = false;
  for (std::size_t i = 0; i < ctx.size() && !ok; ++i)
    if (ctx.sort_of_index(i) == target) ok = true;
  if (!ok && budget > 0) {
    std::vector<TypeExpr> universe = universe_for(ctx, target);
    for (std::size_t op = 0; op < theory_.term_ops.size() && !ok; ++op) {
      for (const std::vector<TypeExpr>& inst :
           admissible_instantiations(theory_, op, target, universe)) {
        if (arg_min_sizes(op, inst, ctx, budget - 1)) {
          ok = true;
          break;
        }
      }
    }
  }
  inhab_memo_[key] = ok;
  return ok;
}

// Minimal sizes for every argument of op at inst, when they jointly fit in
// `budget`; checks parameter variables too.
std::optional<std::vector<std::size_t>> TermGen::arg_min_sizes(
    std::size_t op, const std::vector<TypeExpr>& inst, const Context& ctx,
    std::size_t budget) {
  const SecondOrderArity& ar = theory_.term_ops[op].arity;
  for (const TypeExpr& p : ar.parameters) {
    TypeExpr ps = ty_normalize(theory_, ty_subst(p, inst));
    bool found = false;
    for (std::size_t pos = 0; pos < ctx.size() && !found; ++pos)
      if (ctx[pos] == ps) found = true;
    if (!found) return std::nullopt;
  }
  std::vector<std::size_t> mins(ar.premisses.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
    Context inner = ctx;
    for (const TypeExpr& b : ar.premisses[i].binders)
      inner.sorts.push_back(ty_normalize(theory_, ty_subst(b, inst)));
    TypeExpr as = ty_normalize(theory_, ty_subst(ar.premisses[i].result, inst));
    if (total > budget) return std::nullopt;
    mins[i] = min_size(inner, as, budget - total);
    if (mins[i] == kNoSize) return std::nullopt;
    total += mins[i];
  }
  if (total > budget) return std::nullopt;
  return mins;
}

std::optional<Term> TermGen::random_term(const Context& ctx, const TypeExpr& sort,
                                         std::size_t size_budget) {
  TypeExpr target = ty_normalize(theory_, sort);
  if (!inhabited(ctx, target, size_budget)) return std::nullopt;

  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx.sort_of_index(i) == target) vars.push_back(i);

  struct OpChoice {
    std::size_t op;
    std::vector<TypeExpr> inst;
    std::vector<std::size_t> mins;
  };
  std::vector<OpChoice> ops;
  if (size_budget > 0) {
    std::vector<TypeExpr> universe = universe_for(ctx, target);
    for (std::size_t op = 0; op < theory_.term_ops.size(); ++op) {
      for (const std::vector<TypeExpr>& inst :
           admissible_instantiations(theory_, op, target, universe)) {
        if (auto mins = arg_min_sizes(op, inst, ctx, size_budget - 1))
          ops.push_back(OpChoice{op, inst, std::move(*mins)});
      }
    }
  }

  bool use_op = !ops.empty() && (vars.empty() || chance(0.75));
  if (!use_op) {
    if (vars.empty()) return std::nullopt;  // unreachable: inhabited() held
    return Term::var(vars[below(vars.size())]);
  }

  const OpChoice& choice = ops[below(ops.size())];
  const SecondOrderArity& ar = theory_.term_ops[choice.op].arity;
  std::vector<std::size_t> params;
  for (const TypeExpr& p : ar.parameters) {
    TypeExpr ps = ty_normalize(theory_, ty_subst(p, choice.inst));
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx.sort_of_index(i) == ps) candidates.push_back(i);
    params.push_back(candidates[below(candidates.size())]);
  }
  std::size_t n = ar.premisses.size();
  std::vector<Term> args(n);
  std::size_t remaining = size_budget - 1;
  std::size_t reserved = 0;
  for (std::size_t i = 0; i < n; ++i) reserved += choice.mins[i];
  for (std::size_t i = 0; i < n; ++i) {
    Context inner = ctx;
    for (const TypeExpr& b : ar.premisses[i].binders)
      inner.sorts.push_back(ty_normalize(theory_, ty_subst(b, choice.inst)));
    TypeExpr as = ty_normalize(theory_, ty_subst(ar.premisses[i].result, choice.inst));
    reserved -= choice.mins[i];
    std::size_t slack = remaining - reserved - choice.mins[i];
    std::size_t share = choice.mins[i] + below(slack + 1);
    std::optional<Term> arg = random_term(inner, as, share);
    if (!arg) return std::nullopt;  // unreachable by construction
    remaining -= arg->op_node_count();
    args[i] = std::move(*arg);
  }
  return Term::make_op(choice.op, choice.inst, std::move(params), std::move(args));
}

std::optional<std::pair<TypeExpr, Term>> TermGen::random_inhabited(
    const Context& ctx, std::size_t size_budget) {
  std::vector<TypeExpr> shuffled = pool_;
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[below(i)]);
  for (const TypeExpr& sort : shuffled) {
    if (auto t = random_term(ctx, sort, size_budget))
      return std::make_pair(ty_normalize(theory_, sort), std::move(*t));
  }
  return std::nullopt;
}

std::optional<ExplicitTerm> TermGen::random_explicit(const Context& ctx,
                                                     const TypeExpr& sort,
                                                     std::size_t size_budget,
                                                     double subst_p) {
  if (size_budget >= 2 && chance(subst_p)) {
    // Subst(body, arg): pick the argument first so its sort is known.
    if (auto picked = random_inhabited(ctx, size_budget / 2)) {
      Context inner = extend(theory_, ctx, picked->first);
      if (auto body =
              random_explicit(inner, sort, size_budget - 1, subst_p * 0.7))
        return ExplicitTerm::subst(std::move(*body),
                                   ExplicitTerm::from_term(picked->second));
    }
  }
  if (auto t = random_term(ctx, sort, size_budget))
    return ExplicitTerm::from_term(*t);
  return std::nullopt;
}

std::optional<Valuation> TermGen::random_valuation(const TermEquation& eq,
                                                   const Context& base,
                                                   std::size_t filler_size) {
  Valuation v;
  v.base = base;
  for (std::size_t i = 0; i < eq.meta_count; ++i) v.inst.push_back(random_sort());
  for (std::size_t tries = 0; tries < 8; ++tries) {
    v.fillers.clear();
    bool ok = true;
    for (const Premiss& ph : eq.placeholders) {
      Context fctx = base;
      for (const TypeExpr& b : ph.binders)
        fctx.sorts.push_back(ty_normalize(theory_, ty_subst(b, v.inst)));
      TypeExpr fsort = ty_normalize(theory_, ty_subst(ph.result, v.inst));
      std::optional<Term> filler = random_term(fctx, fsort, filler_size);
      if (!filler) {
        ok = false;
        break;
      }
      v.fillers.push_back(std::move(*filler));
    }
    if (ok) return v;
    // resample the instantiation and try again
    v.inst.clear();
    for (std::size_t i = 0; i < eq.meta_count; ++i) v.inst.push_back(random_sort());
  }
  return std::nullopt;
}

Term shrink_term(const Theory& theory, const Context& ctx, Term failing,
                 const std::function<bool(const Term&)>& still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    // try binderless arguments of the root (they live in the same context)
    if (!failing.is_var()) {
      const SecondOrderArity& ar = theory.term_ops[failing.op()].arity;
      TypeExpr sort = sort_of(theory, ctx, failing);
      for (std::size_t i = 0; i < failing.args().size() && !progress; ++i) {
        if (!ar.premisses[i].binders.empty()) continue;
        const Term& cand = failing.args()[i];
        Result<TypeExpr> cand_sort = check(theory, ctx, cand);
        if (cand_sort.ok() && cand_sort.value() == sort && still_fails(cand)) {
          failing = cand;
          progress = true;
        }
      }
      // try plain variables of the right sort
      if (!progress) {
        for (std::size_t i = 0; i < ctx.size() && !progress; ++i) {
          if (!(ctx.sort_of_index(i) == sort)) continue;
          Term cand = Term::var(i);
          if (cand == failing) continue;
          if (still_fails(cand)) {
            failing = cand;
            progress = true;
          }
        }
      }
    }
  }
  return failing;
}

}  // namespace stt
