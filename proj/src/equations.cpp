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

#include "stt/equations.hpp"

#include <algorithm>
#include <string>

#include "stt/subst.hpp"

namespace stt {

// ---- check_meta -------------------------------------------------------------

namespace {

// Context entries here are type expressions over the equation's
// metavariables; comparison is structural on type normal forms.
Result<TypeExpr> check_meta_rec(const Theory& th, const TermEquation& eq,
                                const MetaTerm& t,
                                const std::vector<TypeExpr>& ctx) {
  switch (t.kind()) {
    case MetaTerm::Kind::Var: {
      if (t.var_index() >= ctx.size())
        return Diagnostic{Code::UnboundVariable,
                          "variable index " + std::to_string(t.var_index()) +
                              " in an equation context of size " +
                              std::to_string(ctx.size()),
                          eq.name, std::nullopt};
      return ctx[ctx.size() - 1 - t.var_index()];
    }
    case MetaTerm::Kind::MVar: {
      if (t.placeholder() >= eq.placeholders.size())
        return Diagnostic{Code::PlaceholderArityMismatch,
                          "placeholder index out of range", eq.name, std::nullopt};
      const Premiss& ph = eq.placeholders[t.placeholder()];
      if (t.sub().size() != ph.binders.size())
        return Diagnostic{Code::PlaceholderArityMismatch,
                          "placeholder expects " + std::to_string(ph.binders.size()) +
                              " instantiating terms, got " +
                              std::to_string(t.sub().size()),
                          eq.name, std::nullopt};
      for (std::size_t j = 0; j < t.sub().size(); ++j) {
        Result<TypeExpr> got = check_meta_rec(th, eq, t.sub()[j], ctx);
        if (!got.ok()) return got;
        if (!(got.value() == ty_normalize(th, ph.binders[j])))
          return Diagnostic{Code::SortMismatch,
                            "placeholder instantiation " + std::to_string(j) +
                                " has the wrong sort",
                            eq.name, std::nullopt};
      }
      return ty_normalize(th, ph.result);
    }
    case MetaTerm::Kind::Op: {
      if (t.op() >= th.term_ops.size())
        return Diagnostic{Code::UnknownTermOp, "term operator index out of range",
                          eq.name, std::nullopt};
      const TermOp& op = th.term_ops[t.op()];
      const SecondOrderArity& ar = op.arity;
      if (t.inst().size() != ar.meta_count ||
          t.params().size() != ar.parameters.size() ||
          t.args().size() != ar.premisses.size())
        return Diagnostic{Code::LengthMismatch,
                          "operator " + op.name + " applied with the wrong shape",
                          eq.name, std::nullopt};
      for (std::size_t j = 0; j < t.params().size(); ++j) {
        if (t.params()[j] >= ctx.size())
          return Diagnostic{Code::UnboundVariable,
                            "parameter variable out of range", eq.name,
                            std::nullopt};
        TypeExpr expected = ty_normalize(th, ty_subst(ar.parameters[j], t.inst()));
        if (!(ctx[ctx.size() - 1 - t.params()[j]] == expected))
          return Diagnostic{Code::ParamSortMismatch,
                            "parameter slot " + std::to_string(j) + " of " +
                                op.name + " has the wrong sort",
                            eq.name, std::nullopt};
      }
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        std::vector<TypeExpr> inner = ctx;
        for (const TypeExpr& b : ar.premisses[i].binders)
          inner.push_back(ty_normalize(th, ty_subst(b, t.inst())));
        Result<TypeExpr> got = check_meta_rec(th, eq, t.args()[i], inner);
        if (!got.ok()) return got;
        TypeExpr expected =
            ty_normalize(th, ty_subst(ar.premisses[i].result, t.inst()));
        if (!(got.value() == expected))
          return Diagnostic{Code::SortMismatch,
                            "argument " + std::to_string(i) + " of " + op.name +
                                " has the wrong sort",
                            eq.name, std::nullopt};
      }
      return ty_normalize(th, ty_subst(ar.result, t.inst()));
    }
  }
  return Diagnostic{Code::Internal, "invalid meta term", eq.name, std::nullopt};
}

}  // namespace

Result<TypeExpr> check_meta(const Theory& theory, const TermEquation& eq,
                            const MetaTerm& side) {
  std::vector<TypeExpr> ctx;
  ctx.reserve(eq.param_context.size());
  for (const TypeExpr& p : eq.param_context) ctx.push_back(ty_normalize(theory, p));
  return check_meta_rec(theory, eq, side, ctx);
}

// ---- instantiation (shared by meta-substitution and rewriting) -------------

namespace {

// Instantiates a meta term over `base` (the output's base context):
// - type metavariables via type_inst,
// - parameter-context variables via param_positions (positions in base),
// - placeholders via fillers; fillers[i] lives in the prefix of base of
//   length fill_base_size, extended by placeholder i's binders.
struct Instantiator {
  const Theory& th;
  const TermEquation& eq;
  const std::vector<std::optional<TypeExpr>>& type_inst;
  const std::vector<std::optional<Term>>& fillers;
  const std::vector<std::optional<std::size_t>>& param_positions;
  const Context& base;
  std::size_t fill_base_size;

  std::vector<TypeExpr> ground_inst(const std::vector<TypeExpr>& open) const {
    std::vector<TypeExpr> out;
    out.reserve(open.size());
    for (const TypeExpr& t : open) out.push_back(ground_type(t));
    return out;
  }

  TypeExpr ground_type(const TypeExpr& t) const {
    if (t.is_meta()) {
      if (t.meta_index() >= type_inst.size() || !type_inst[t.meta_index()])
        fail(Code::MetaIndexOutOfRange,
             "equation " + eq.name + ": metavariable " +
                 std::to_string(t.meta_index()) +
                 " is not determined by the matched side");
      return *type_inst[t.meta_index()];
    }
    std::vector<TypeExpr> args;
    args.reserve(t.args().size());
    for (const TypeExpr& a : t.args()) args.push_back(ground_type(a));
    return ty_normalize(th, TypeExpr::app(t.op(), std::move(args)));
  }

  std::size_t var_target(std::size_t index, std::size_t depth) const {
    if (index < depth) return index;
    std::size_t q = eq.param_context.size() + depth - 1 - index;
    if (q >= param_positions.size() || !param_positions[q])
      fail(Code::UnboundVariable,
           "equation " + eq.name +
               ": parameter variable is not determined by the matched side");
    return base.size() + depth - 1 - *param_positions[q];
  }

  Term run(const MetaTerm& t, std::size_t depth) const {
    switch (t.kind()) {
      case MetaTerm::Kind::Var:
        return Term::var(var_target(t.var_index(), depth));
      case MetaTerm::Kind::Op: {
        std::vector<std::size_t> params;
        params.reserve(t.params().size());
        for (std::size_t p : t.params()) params.push_back(var_target(p, depth));
        const SecondOrderArity& ar = th.term_ops[t.op()].arity;
        std::vector<TypeExpr> inst = ground_inst(t.inst());
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (std::size_t i = 0; i < t.args().size(); ++i)
          args.push_back(
              run(t.args()[i], depth + ar.premisses[i].binders.size()));
        return Term::make_op(t.op(), std::move(inst), std::move(params),
                             std::move(args));
      }
      case MetaTerm::Kind::MVar: {
        std::size_t i = t.placeholder();
        if (i >= fillers.size() || !fillers[i])
          fail(Code::PlaceholderArityMismatch,
               "equation " + eq.name + ": placeholder " + std::to_string(i) +
                   " has no filler");
        std::size_t k = eq.placeholders[i].binders.size();
        // sigma maps positions of (fill-base ++ binders) into the current
        // context base ++ depth binders.
        std::vector<Term> sigma(fill_base_size + k);
        for (std::size_t p = 0; p < fill_base_size; ++p)
          sigma[p] = Term::var(base.size() + depth - 1 - p);
        for (std::size_t j = 0; j < k; ++j)
          sigma[fill_base_size + j] = run(t.sub()[j], depth);
        return msubst_unchecked(th, sigma, fill_base_size + k, *fillers[i]);
      }
    }
    fail(Code::Internal, "invalid meta term");
  }
};

}  // namespace

Context meta_subst_context(const Theory& theory, const TermEquation& eq,
                           const Valuation& v) {
  Context out = v.base;
  for (const TypeExpr& p : eq.param_context)
    out.sorts.push_back(ty_normalize(theory, ty_subst(p, v.inst)));
  return out;
}

Term meta_subst(const Theory& theory, const TermEquation& eq,
                const MetaTerm& side, const Valuation& v) {
  if (v.inst.size() != eq.meta_count)
    fail(Code::LengthMismatch,
         "valuation instantiates " + std::to_string(v.inst.size()) +
             " type metavariables, equation declares " +
             std::to_string(eq.meta_count));
  if (v.fillers.size() != eq.placeholders.size())
    fail(Code::LengthMismatch,
         "valuation provides " + std::to_string(v.fillers.size()) +
             " fillers, equation declares " +
             std::to_string(eq.placeholders.size()));
  std::vector<std::optional<TypeExpr>> type_inst;
  for (const TypeExpr& t : v.inst)
    type_inst.push_back(ty_normalize(theory, t));
  std::vector<std::optional<Term>> fillers;
  for (const Term& f : v.fillers) fillers.push_back(f);
  std::vector<std::optional<std::size_t>> param_positions;
  for (std::size_t q = 0; q < eq.param_context.size(); ++q)
    param_positions.push_back(v.base.size() + q);
  Context base = meta_subst_context(theory, eq, v);
  Instantiator inst{theory,  eq,   type_inst, fillers, param_positions,
                    base,    v.base.size()};
  return inst.run(side, 0);
}

// ---- second-order matching --------------------------------------------------

namespace {

struct Matcher {
  const Theory& th;
  const TermEquation& eq;
  const Context& ctx;
  Match m;

  bool match_type(const TypeExpr& pattern, const TypeExpr& subject) {
    if (pattern.is_meta()) {
      auto& slot = m.type_inst[pattern.meta_index()];
      if (slot) return *slot == subject;
      slot = subject;
      return true;
    }
    if (subject.is_meta() || subject.op() != pattern.op()) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
      if (!match_type(pattern.args()[i], subject.args()[i])) return false;
    return true;
  }

  // Pattern and subject variable occurrences at pattern depth d: bound
  // variables must agree on the nose, parameter-context variables map to
  // ambient positions consistently.
  bool match_var(std::size_t pat, std::size_t subj, std::size_t depth) {
    if (pat < depth) return subj == pat;
    if (subj < depth) return false;
    std::size_t q = eq.param_context.size() + depth - 1 - pat;
    if (q >= m.param_positions.size()) return false;
    std::size_t pos = ctx.size() + depth - 1 - subj;
    auto& slot = m.param_positions[q];
    if (slot) return *slot == pos;
    slot = pos;
    return true;
  }

  // Abstracts the subject into a filler for placeholder `ph` whose binders
  // are instantiated by the distinct pattern-bound variables `bound`
  // (indices relative to pattern depth d). Fails when the subject mentions
  // a pattern-bound variable outside `bound`.
  std::optional<Term> abstract(const Term& subject, std::size_t depth,
                               const std::vector<std::size_t>& bound,
                               std::size_t binder_count) {
    bool ok = true;
    auto remap = [&](std::size_t idx, std::size_t inner) -> std::size_t {
      std::size_t rel = idx - inner;
      if (rel < depth) {
        for (std::size_t j = 0; j < bound.size(); ++j)
          if (bound[j] == rel) return binder_count - 1 - j + inner;
        ok = false;
        return idx;
      }
      std::size_t pos = ctx.size() + depth - 1 - rel;
      return ctx.size() + binder_count - 1 - pos + inner;
    };
    Term out = map_free_vars(th, subject, remap);
    if (!ok) return std::nullopt;
    return out;
  }

  bool run(const MetaTerm& pattern, const Term& subject, std::size_t depth) {
    switch (pattern.kind()) {
      case MetaTerm::Kind::Var:
        return subject.is_var() && match_var(pattern.var_index(),
                                             subject.var_index(), depth);
      case MetaTerm::Kind::Op: {
        if (subject.is_var() || subject.op() != pattern.op()) return false;
        for (std::size_t i = 0; i < pattern.inst().size(); ++i)
          if (!match_type(pattern.inst()[i], subject.inst()[i])) return false;
        for (std::size_t j = 0; j < pattern.params().size(); ++j)
          if (!match_var(pattern.params()[j], subject.params()[j], depth))
            return false;
        const SecondOrderArity& ar = th.term_ops[pattern.op()].arity;
        for (std::size_t i = 0; i < pattern.args().size(); ++i)
          if (!run(pattern.args()[i], subject.args()[i],
                   depth + ar.premisses[i].binders.size()))
            return false;
        return true;
      }
      case MetaTerm::Kind::MVar: {
        std::size_t i = pattern.placeholder();
        std::vector<std::size_t> bound;
        bound.reserve(pattern.sub().size());
        for (const MetaTerm& s : pattern.sub()) {
          if (!s.is_var() || s.var_index() >= depth) return false;
          bound.push_back(s.var_index());
        }
        std::optional<Term> filler = abstract(
            subject, depth, bound, eq.placeholders[i].binders.size());
        if (!filler) return false;
        auto& slot = m.fillers[i];
        if (slot) return *slot == *filler;
        slot = std::move(filler);
        return true;
      }
    }
    return false;
  }

  // Parameter-variable sorts can only be verified once the type
  // instantiation is complete.
  bool deferred_sort_checks() {
    for (std::size_t q = 0; q < m.param_positions.size(); ++q) {
      if (!m.param_positions[q]) continue;
      TypeExpr expected = eq.param_context[q];
      Instantiator inst{th, eq, m.type_inst, m.fillers, m.param_positions,
                        ctx, ctx.size()};
      TypeExpr want;
      try {
        want = inst.ground_type(expected);
      } catch (const Error&) {
        return false;  // sort depends on an undetermined metavariable
      }
      if (!(ctx[*m.param_positions[q]] == want)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Match> match_pattern(const Theory& theory, const TermEquation& eq,
                                   const MetaTerm& pattern, const Term& subject,
                                   const Context& ctx) {
  Matcher matcher{theory, eq, ctx,
                  Match{std::vector<std::optional<TypeExpr>>(eq.meta_count),
                        std::vector<std::optional<Term>>(eq.placeholders.size()),
                        std::vector<std::optional<std::size_t>>(
                            eq.param_context.size())}};
  if (!matcher.run(pattern, subject, 0)) return std::nullopt;
  if (!matcher.deferred_sort_checks()) return std::nullopt;
  return std::move(matcher.m);
}

// ---- pattern validation -----------------------------------------------------

namespace {

void collect_meta_indices(const TypeExpr& t, std::vector<bool>& seen) {
  if (t.is_meta()) {
    if (t.meta_index() < seen.size()) seen[t.meta_index()] = true;
    return;
  }
  for (const TypeExpr& a : t.args()) collect_meta_indices(a, seen);
}

struct SideInfo {
  std::vector<bool> metas;         // metavariables occurring in op insts
  std::vector<bool> placeholders;  // placeholders occurring
  std::vector<bool> param_vars;    // parameter-context entries referenced
};

void scan_side(const Theory& th, const TermEquation& eq, const MetaTerm& t,
               std::size_t depth, SideInfo& info) {
  switch (t.kind()) {
    case MetaTerm::Kind::Var: {
      if (t.var_index() >= depth) {
        std::size_t q = eq.param_context.size() + depth - 1 - t.var_index();
        if (q < info.param_vars.size()) info.param_vars[q] = true;
      }
      return;
    }
    case MetaTerm::Kind::MVar: {
      if (t.placeholder() < info.placeholders.size())
        info.placeholders[t.placeholder()] = true;
      for (const MetaTerm& s : t.sub()) scan_side(th, eq, s, depth, info);
      return;
    }
    case MetaTerm::Kind::Op: {
      for (const TypeExpr& i : t.inst()) collect_meta_indices(i, info.metas);
      for (std::size_t p : t.params()) {
        if (p >= depth) {
          std::size_t q = eq.param_context.size() + depth - 1 - p;
          if (q < info.param_vars.size()) info.param_vars[q] = true;
        }
      }
      const SecondOrderArity& ar = th.term_ops[t.op()].arity;
      for (std::size_t i = 0; i < t.args().size(); ++i)
        scan_side(th, eq, t.args()[i], depth + ar.premisses[i].binders.size(),
                  info);
      return;
    }
  }
}

// Miller restriction on the left-hand side: every placeholder occurrence
// instantiates its binders with pairwise distinct pattern-bound variables.
std::optional<std::string> scan_pattern(const Theory& th, const TermEquation& eq,
                                        const MetaTerm& t, std::size_t depth) {
  switch (t.kind()) {
    case MetaTerm::Kind::Var:
      return std::nullopt;
    case MetaTerm::Kind::MVar: {
      std::vector<std::size_t> seen;
      for (const MetaTerm& s : t.sub()) {
        if (!s.is_var() || s.var_index() >= depth)
          return "a placeholder on the left-hand side instantiates a binder "
                 "with something other than a bound variable";
        if (std::find(seen.begin(), seen.end(), s.var_index()) != seen.end())
          return "a placeholder on the left-hand side repeats a bound variable";
        seen.push_back(s.var_index());
      }
      return std::nullopt;
    }
    case MetaTerm::Kind::Op: {
      const SecondOrderArity& ar = th.term_ops[t.op()].arity;
      for (std::size_t i = 0; i < t.args().size(); ++i)
        if (auto why = scan_pattern(th, eq, t.args()[i],
                                    depth + ar.premisses[i].binders.size()))
          return why;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> pattern_violation(const Theory& theory,
                                             const TermEquation& eq) {
  if (!eq.lhs.is_op())
    return std::string(
        "an oriented equation must have an operator-headed left-hand side");
  if (auto why = scan_pattern(theory, eq, eq.lhs, 0)) return why;

  SideInfo lhs{std::vector<bool>(eq.meta_count, false),
               std::vector<bool>(eq.placeholders.size(), false),
               std::vector<bool>(eq.param_context.size(), false)};
  SideInfo rhs = lhs;
  scan_side(theory, eq, eq.lhs, 0, lhs);
  scan_side(theory, eq, eq.rhs, 0, rhs);
  for (std::size_t i = 0; i < eq.meta_count; ++i)
    if (rhs.metas[i] && !lhs.metas[i])
      return "the right-hand side uses a type metavariable the left-hand "
             "side does not determine";
  for (std::size_t i = 0; i < eq.placeholders.size(); ++i)
    if (rhs.placeholders[i] && !lhs.placeholders[i])
      return "the right-hand side uses a placeholder the left-hand side "
             "does not bind";
  for (std::size_t q = 0; q < eq.param_context.size(); ++q)
    if (rhs.param_vars[q] && !lhs.param_vars[q])
      return "the right-hand side uses a parameter variable the left-hand "
             "side does not bind";
  // Sorts of parameter variables referenced on the left must be computable
  // from matched metavariables.
  for (std::size_t q = 0; q < eq.param_context.size(); ++q) {
    if (!lhs.param_vars[q]) continue;
    std::vector<bool> needed(eq.meta_count, false);
    collect_meta_indices(eq.param_context[q], needed);
    for (std::size_t i = 0; i < eq.meta_count; ++i)
      if (needed[i] && !lhs.metas[i])
        return "a matched parameter variable's sort depends on an "
               "undetermined type metavariable";
  }
  return std::nullopt;
}

// ---- rewriting ---------------------------------------------------------------

namespace {

Term instantiate_rhs(const Theory& th, const TermEquation& eq, const Match& m,
                     const Context& ctx) {
  Instantiator inst{th,  eq,  m.type_inst, m.fillers, m.param_positions,
                    ctx, ctx.size()};
  return inst.run(eq.rhs, 0);
}

struct Rewriter {
  const Theory& th;

  std::optional<Term> rewrite_once(const Term& t, const Context& ctx) const {
    for (const TermEquation& eq : th.term_eqs) {
      if (eq.orientation != Orientation::LeftToRight) continue;
      if (auto m = match_pattern(th, eq, eq.lhs, t, ctx))
        return instantiate_rhs(th, eq, *m, ctx);
    }
    if (t.is_var()) return std::nullopt;
    const SecondOrderArity& ar = th.term_ops[t.op()].arity;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      Context inner = ctx;
      for (const TypeExpr& b : ar.premisses[i].binders)
        inner.sorts.push_back(ty_normalize(th, ty_subst(b, t.inst())));
      if (auto r = rewrite_once(t.args()[i], inner)) {
        std::vector<Term> args = t.args();
        args[i] = std::move(*r);
        return Term::make_op(t.op(), t.inst(), t.params(), std::move(args));
      }
    }
    return std::nullopt;
  }
};

}  // namespace

Term normalize_term(const Theory& theory, const Context& ctx, const Term& t,
                    std::size_t budget) {
  for (const TermEquation& eq : theory.term_eqs)
    if (eq.orientation == Orientation::Unoriented)
      fail(Code::UnorientedEquation,
           "theory has an unoriented term equation; term normal forms are "
           "not defined");
  Rewriter rw{theory};
  Term cur = t;
  for (;;) {
    std::optional<Term> next = rw.rewrite_once(cur, ctx);
    if (!next) return cur;
    if (budget == 0)
      fail(Code::BudgetExhausted,
           "term rewriting exceeded its step budget; the orientation of the "
           "term equations may not terminate");
    --budget;
    cur = std::move(*next);
  }
}

Verdict term_equal(const Theory& theory, const Context& ctx, const Term& a,
                   const Term& b, std::size_t budget) {
  if (a == b) return Verdict::Equal;
  Term na = normalize_term(theory, ctx, a, budget);
  Term nb = normalize_term(theory, ctx, b, budget);
  return na == nb ? Verdict::Equal : Verdict::NotProvedEqual;
}

}  // namespace stt
