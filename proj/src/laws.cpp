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

#include "stt/laws.hpp"

#include <functional>
#include <optional>

#include "stt/clone.hpp"
#include "stt/dsl.hpp"
#include "stt/equations.hpp"
#include "stt/finmodel.hpp"
#include "stt/gen.hpp"
#include "stt/subst.hpp"

namespace stt {

namespace {

// Runs one law: body() returns nullopt to resample, true/false to count.
// A failing body leaves a reproducer in `failure`.
LawResult run_law(const Theory& theory, const LawOptions& o, std::string suite,
                  std::string law,
                  const std::function<std::optional<bool>(TermGen&, std::string&)>& body) {
  LawResult result{std::move(suite), std::move(law), 0, 0, {}};
  TermGen gen(theory, o.seed);
  std::size_t attempts = 0;
  const std::size_t max_attempts = o.samples * 50 + 100;
  while (result.total < o.samples && attempts < max_attempts) {
    ++attempts;
    std::string failure;
    std::optional<bool> verdict;
    try {
      verdict = body(gen, failure);
    } catch (const Error& e) {
      verdict = false;
      failure = e.what();
    }
    if (!verdict) continue;
    ++result.total;
    if (*verdict) {
      ++result.passed;
    } else if (result.failures.size() < 5) {
      result.failures.push_back(failure);
    }
  }
  if (result.total < o.samples)
    result.failures.push_back("generator stalled after " +
                              std::to_string(attempts) + " attempts");
  return result;
}

bool has_term_ops(const Theory& th) { return !th.term_ops.empty(); }

Renaming lift_renaming(const Theory& th, const Renaming& r,
                       const std::vector<TypeExpr>& binders) {
  Renaming out = r;
  for (const TypeExpr& b : binders) {
    TypeExpr n = ty_normalize(th, b);
    out.map.push_back(out.target.size());
    out.source.sorts.push_back(n);
    out.target.sorts.push_back(n);
  }
  return out;
}

// Composite of adjacent exchanges moving `position` to the top of the
// context (the most recent slot).
Renaming move_to_top(const Theory& th, const Context& ctx, std::size_t position) {
  Renaming r = rename_id(ctx);
  for (std::size_t p = position; p + 1 < ctx.size(); ++p)
    r = rename_compose(r, exchange(th, r.target, p));
  return r;
}

// Random sort-preserving renaming out of `src`: the target is a permutation
// of src plus a few extra entries.
Renaming random_renaming(TermGen& gen, const Theory& th, const Context& src) {
  std::vector<std::size_t> order(src.size());
  for (std::size_t p = 0; p < src.size(); ++p) order[p] = p;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[gen.below(i)]);
  Context tgt;
  std::vector<std::size_t> placed(src.size());
  std::size_t extras = gen.below(3);
  for (std::size_t p = 0; p < src.size() + extras; ++p) {
    if (p < src.size()) {
      tgt.sorts.push_back(src[order[p]]);
      placed[order[p]] = p;
    } else {
      tgt.sorts.push_back(gen.random_sort());
    }
  }
  Renaming r{src, tgt, {}};
  r.map.resize(src.size());
  for (std::size_t p = 0; p < src.size(); ++p) {
    // sometimes alias two positions of equal sort (non-injective renaming)
    std::size_t q = placed[p];
    if (gen.chance(0.2)) {
      std::vector<std::size_t> same;
      for (std::size_t cand = 0; cand < tgt.size(); ++cand)
        if (tgt[cand] == src[p]) same.push_back(cand);
      q = same[gen.below(same.size())];
    }
    r.map[p] = q;
  }
  return r;
}

std::string show(const Theory& th, const Context& ctx, const Term& t) {
  return print_term(th, default_names(ctx), t);
}

}  // namespace

// ---- context laws ---------------------------------------------------------

std::vector<LawResult> context_law_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;

  out.push_back(run_law(theory, o, "context", "compose_identity",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(4);
                          Renaming r = random_renaming(gen, theory, ctx);
                          Renaming l = rename_compose(rename_id(ctx), r);
                          Renaming rr = rename_compose(r, rename_id(r.target));
                          bool ok = l.map == r.map && rr.map == r.map;
                          if (!ok) why = "identity laws failed";
                          return ok;
                        }));

  out.push_back(run_law(theory, o, "context", "compose_associative",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(4);
                          Renaming r = random_renaming(gen, theory, ctx);
                          Renaming s = random_renaming(gen, theory, r.target);
                          Renaming t = random_renaming(gen, theory, s.target);
                          Renaming a = rename_compose(rename_compose(r, s), t);
                          Renaming b = rename_compose(r, rename_compose(s, t));
                          bool ok = a.map == b.map && a.target == b.target;
                          if (!ok) why = "associativity failed";
                          return ok;
                        }));

  out.push_back(run_law(theory, o, "context", "renamings_preserve_sorts",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(4);
                          Renaming r = random_renaming(gen, theory, ctx);
                          try {
                            validate_renaming(theory, r);
                            validate_renaming(theory, weaken(theory, ctx,
                                                            gen.random_sort()));
                            if (ctx.size() >= 2)
                              validate_renaming(theory,
                                                exchange(theory, ctx, gen.below(ctx.size() - 1)));
                          } catch (const Error& e) {
                            why = e.what();
                            return false;
                          }
                          return true;
                        }));

  if (has_term_ops(theory)) {
    out.push_back(run_law(
        theory, o, "context", "contract_matches_duplication_oracle",
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context ctx = gen.random_context(3);
          TypeExpr a = gen.random_sort();
          ctx.sorts.push_back(a);
          ctx.sorts.push_back(a);  // two entries of equal sort at the top
          std::size_t i = ctx.size() - 2, j = ctx.size() - 1;
          auto t = gen.random_term(ctx, gen.random_sort(), 4);
          if (!t) return std::nullopt;
          Renaming c = contract(theory, ctx, i, j);
          Term via_rename = rename(theory, *t, c);
          // oracle: simultaneous substitution sending position j to the
          // variable at position i
          std::vector<Term> sigma(ctx.size());
          for (std::size_t p = 0; p < ctx.size(); ++p) {
            std::size_t q = (p == j) ? i : p;
            std::size_t newpos = q > j ? q - 1 : q;
            sigma[p] = Term::var(c.target.size() - 1 - newpos);
          }
          Term via_subst = msubst(theory, ctx, c.target, sigma, *t, false);
          bool ok = via_rename == via_subst;
          if (!ok)
            why = "contract disagrees with duplication on " + show(theory, ctx, *t);
          return ok;
        }));

    out.push_back(run_law(theory, o, "context", "exchange_involution",
                          [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                            Context ctx = gen.random_context(4);
                            if (ctx.size() < 2) return std::nullopt;
                            std::size_t p = gen.below(ctx.size() - 1);
                            auto t = gen.random_term(ctx, gen.random_sort(), 4);
                            if (!t) return std::nullopt;
                            Renaming e1 = exchange(theory, ctx, p);
                            Renaming e2 = exchange(theory, e1.target, p);
                            Term round = rename(theory, rename(theory, *t, e1), e2);
                            bool ok = round == *t;
                            if (!ok) why = "exchange twice changed " + show(theory, ctx, *t);
                            return ok;
                          }));
  }
  return out;
}

// ---- rename laws ------------------------------------------------------------

std::vector<LawResult> rename_law_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  if (!has_term_ops(theory)) return out;

  out.push_back(run_law(theory, o, "rename", "identity",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(4);
                          auto t = gen.random_term(ctx, gen.random_sort(), 5);
                          if (!t) return std::nullopt;
                          bool ok = rename(theory, *t, rename_id(ctx)) == *t;
                          if (!ok) why = "identity failed on " + show(theory, ctx, *t);
                          return ok;
                        }));

  out.push_back(run_law(
      theory, o, "rename", "composition",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(4);
        auto t = gen.random_term(ctx, gen.random_sort(), 5);
        if (!t) return std::nullopt;
        Renaming r = random_renaming(gen, theory, ctx);
        Renaming s = random_renaming(gen, theory, r.target);
        Term two_steps = rename(theory, rename(theory, *t, r), s);
        Term one_step = rename(theory, *t, rename_compose(r, s));
        bool ok = two_steps == one_step;
        if (!ok) why = "composition failed on " + show(theory, ctx, *t);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "rename", "sort_preservation",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(4);
        TypeExpr sort = gen.random_sort();
        auto t = gen.random_term(ctx, sort, 5);
        if (!t) return std::nullopt;
        Renaming r = random_renaming(gen, theory, ctx);
        TypeExpr before = sort_of(theory, ctx, *t);
        TypeExpr after = sort_of(theory, r.target, rename(theory, *t, r));
        bool ok = before == after;
        if (!ok) why = "renaming changed the sort of " + show(theory, ctx, *t);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "rename", "weakening_soundness",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(4);
        auto t = gen.random_term(ctx, gen.random_sort(), 5);
        if (!t) return std::nullopt;
        TypeExpr a = gen.random_sort();
        Renaming w = weaken(theory, ctx, a);
        TypeExpr before = sort_of(theory, ctx, *t);
        TypeExpr after = sort_of(theory, w.target, rename(theory, *t, w));
        bool ok = before == after;
        if (!ok) why = "weakening changed the sort of " + show(theory, ctx, *t);
        return ok;
      }));
  return out;
}

// ---- substitution laws ---------------------------------------------------------

namespace {

using Subst1Fn =
    std::function<Term(const Theory&, const Context&, const Term&, const Term&)>;

// The four laws, parameterised over the substitution implementation so the
// explicit-substitution route can reuse them.
std::vector<LawResult> subst1_laws(const Theory& theory, const LawOptions& o,
                                   const std::string& suite, const Subst1Fn& sub) {
  std::vector<LawResult> out;

  out.push_back(run_law(
      theory, o, suite, "trivial_substitution",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(3);
        auto picked = gen.random_inhabited(ctx, 5);
        if (!picked) return std::nullopt;
        auto [b, u] = *picked;
        auto t = gen.random_term(ctx, gen.random_sort(), 5);
        if (!t) return std::nullopt;
        Term weakened = rename(theory, *t, weaken(theory, ctx, b));
        Term back = sub(theory, ctx, weakened, u);
        if (back == *t) return true;
        Term small = shrink_term(theory, ctx, *t, [&](const Term& cand) {
          Term w = rename(theory, cand, weaken(theory, ctx, b));
          return !(sub(theory, ctx, w, u) == cand);
        });
        why = "t = " + show(theory, ctx, small) + ", u = " + show(theory, ctx, u);
        return false;
      }));

  out.push_back(run_law(theory, o, suite, "left_identity",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(3);
                          auto picked = gen.random_inhabited(ctx, 5);
                          if (!picked) return std::nullopt;
                          auto [a, u] = *picked;
                          (void)a;
                          Term var0 = Term::var(0);
                          Term got = sub(theory, ctx, var0, u);
                          bool ok = got == u;
                          if (!ok) why = "u = " + show(theory, ctx, u);
                          return ok;
                        }));

  out.push_back(run_law(
      theory, o, suite, "right_identity_contraction",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(3);
        TypeExpr a = gen.random_sort();
        ctx.sorts.push_back(a);  // guarantee a position of sort a
        std::vector<std::size_t> positions;
        for (std::size_t p = 0; p < ctx.size(); ++p)
          if (ctx[p] == a) positions.push_back(p);
        std::size_t i = positions[gen.below(positions.size())];
        Context extended = extend(theory, ctx, a);
        auto t = gen.random_term(extended, gen.random_sort(), 5);
        if (!t) return std::nullopt;
        Term via_subst;
        try {
          via_subst = sub(theory, ctx, *t, Term::var(ctx.size() - 1 - i));
        } catch (const Error& e) {
          if (e.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        Term via_contract =
            rename(theory, *t, contract(theory, extended, i, ctx.size()));
        bool ok = via_subst == via_contract;
        if (!ok) why = "t = " + show(theory, extended, *t);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, suite, "associativity",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(2);
        auto pv = gen.random_inhabited(ctx, 4);
        if (!pv) return std::nullopt;
        auto [a, v] = *pv;
        Context ctx_a = extend(theory, ctx, a);
        auto pu = gen.random_inhabited(ctx_a, 4);
        if (!pu) return std::nullopt;
        auto [b, u] = *pu;
        Context ctx_ab = extend(theory, ctx_a, b);
        auto t = gen.random_term(ctx_ab, gen.random_sort(), 4);
        if (!t) return std::nullopt;
        Term route1;
        try {
          route1 = sub(theory, ctx, sub(theory, ctx_a, *t, u), v);
        } catch (const Error& e) {
          if (e.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        // other route: push v into both t and u, then substitute
        Renaming exch = move_to_top(theory, ctx_ab, ctx.size());
        Term t_swapped = rename(theory, *t, exch);  // ctx, b, a
        Context ctx_b = extend(theory, ctx, b);
        Term v_weak = rename(theory, v, weaken(theory, ctx, b));
        Term route2;
        try {
          Term t2 = sub(theory, ctx_b, t_swapped, v_weak);
          Term u2 = sub(theory, ctx, u, v);
          route2 = sub(theory, ctx, t2, u2);
        } catch (const Error& e) {
          if (e.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        bool ok = route1 == route2;
        if (!ok)
          why = "t = " + show(theory, ctx_ab, *t) + ", u = " + show(theory, ctx_a, u) +
                ", v = " + show(theory, ctx, v);
        return ok;
      }));

  return out;
}

}  // namespace

std::vector<LawResult> substitution_law_suite(const Theory& theory,
                                              const LawOptions& o) {
  std::vector<LawResult> out;
  if (!has_term_ops(theory)) return out;

  Subst1Fn direct = [](const Theory& th, const Context& c, const Term& t,
                       const Term& u) { return subst1(th, c, t, u); };
  for (LawResult& r : subst1_laws(theory, o, "substitution", direct))
    out.push_back(std::move(r));

  out.push_back(run_law(
      theory, o, "substitution", "operator_commutation",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(2);
        auto picked = gen.random_inhabited(ctx, 4);
        if (!picked) return std::nullopt;
        auto [a, u] = *picked;
        Context extended = extend(theory, ctx, a);
        // a random operator node in the extended context
        auto t = gen.random_term(extended, gen.random_sort(), 5);
        if (!t || t->is_var()) return std::nullopt;
        const SecondOrderArity& ar = theory.term_ops[t->op()].arity;
        if (!ar.parameters.empty()) return std::nullopt;
        Term lhs = subst1(theory, ctx, *t, u);
        // independently: substitute into each argument, lifting over the
        // binders with exchange renamings
        std::vector<Term> new_args;
        for (std::size_t i = 0; i < t->args().size(); ++i) {
          std::vector<TypeExpr> binders = instantiated_binders(theory, *t, i);
          Context arg_ctx = concat(theory, extended, binders);
          Renaming moved = move_to_top(theory, arg_ctx, ctx.size());
          Term arg = rename(theory, t->args()[i], moved);
          Context under = concat(theory, ctx, binders);
          Term u_lift = u;
          Renaming lift = rename_id(ctx);
          for (const TypeExpr& b : binders)
            lift = rename_compose(lift, weaken(theory, lift.target, b));
          u_lift = rename(theory, u, lift);
          new_args.push_back(subst1(theory, under, arg, u_lift));
        }
        Term rhs = Term::make_op(t->op(), t->inst(), {}, std::move(new_args));
        bool ok = lhs == rhs;
        if (!ok) why = "t = " + show(theory, extended, *t);
        return ok;
      }));

  out.push_back(run_law(theory, o, "substitution", "msubst_identity",
                        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
                          Context ctx = gen.random_context(4);
                          auto t = gen.random_term(ctx, gen.random_sort(), 5);
                          if (!t) return std::nullopt;
                          Term got = msubst(theory, ctx, ctx, identity_subst(ctx), *t);
                          bool ok = got == *t;
                          if (!ok) why = "t = " + show(theory, ctx, *t);
                          return ok;
                        }));

  out.push_back(run_law(
      theory, o, "substitution", "msubst_agrees_with_subst1",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context empty;
        auto picked = gen.random_inhabited(empty, 5);
        if (!picked) return std::nullopt;
        auto [a, u] = *picked;
        Context single = extend(theory, empty, a);
        auto t = gen.random_term(single, gen.random_sort(), 5);
        if (!t) return std::nullopt;
        Term via_m, via_1;
        try {
          via_m = msubst(theory, single, empty, {u}, *t);
          via_1 = subst1(theory, empty, *t, u);
        } catch (const Error& e) {
          if (e.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        bool ok = via_m == via_1;
        if (!ok) why = "t = " + show(theory, single, *t);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "substitution", "msubst_functoriality",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        // xi <-sigma- delta <-rho- gamma, with substitutions built so the
        // sorts always line up
        Context xi = gen.random_context(3);
        Context delta;
        std::vector<Term> sigma;
        for (std::size_t n = gen.below(3); n > 0; --n) {
          auto picked = gen.random_inhabited(xi, 3);
          if (!picked) break;
          delta.sorts.push_back(picked->first);
          sigma.push_back(picked->second);
        }
        Context gamma;
        std::vector<Term> rho;
        for (std::size_t n = gen.below(3); n > 0; --n) {
          auto picked = gen.random_inhabited(delta, 3);
          if (!picked) break;
          gamma.sorts.push_back(picked->first);
          rho.push_back(picked->second);
        }
        auto t = gen.random_term(gamma, gen.random_sort(), 4);
        if (!t) return std::nullopt;
        Term lhs, rhs;
        try {
          lhs = msubst(theory, delta, xi, sigma,
                       msubst(theory, gamma, delta, rho, *t));
          std::vector<Term> composed;
          composed.reserve(rho.size());
          for (const Term& r : rho)
            composed.push_back(msubst(theory, delta, xi, sigma, r));
          rhs = msubst(theory, gamma, xi, composed, *t);
        } catch (const Error& e) {
          if (e.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        bool ok = lhs == rhs;
        if (!ok) why = "t = " + show(theory, gamma, *t);
        return ok;
      }));

  return out;
}

// ---- explicit substitution -----------------------------------------------------

std::vector<LawResult> subst_lemma_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  if (!has_term_ops(theory)) return out;

  out.push_back(run_law(
      theory, o, "subst_lemma", "elimination_preserves_sort",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(3);
        TypeExpr sort = gen.random_sort();
        auto e = gen.random_explicit(ctx, sort, 6);
        if (!e) return std::nullopt;
        Result<TypeExpr> before = check_explicit(theory, ctx, *e);
        if (!before.ok()) {
          why = "generated explicit term failed to check";
          return false;
        }
        Term pure;
        try {
          pure = eliminate_subst(theory, ctx, *e);
        } catch (const Error& err) {
          if (err.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        TypeExpr after = sort_of(theory, ctx, pure);
        bool ok = after == before.value();
        if (!ok) why = "sort changed for " + print_explicit(theory, default_names(ctx), *e);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "subst_lemma", "subst_node_means_subst1",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(3);
        auto picked = gen.random_inhabited(ctx, 4);
        if (!picked) return std::nullopt;
        auto [a, u] = *picked;
        Context inner = extend(theory, ctx, a);
        auto body = gen.random_term(inner, gen.random_sort(), 4);
        if (!body) return std::nullopt;
        ExplicitTerm e = ExplicitTerm::subst(ExplicitTerm::from_term(*body),
                                             ExplicitTerm::from_term(u));
        Term via_elim, via_subst1;
        try {
          via_elim = eliminate_subst(theory, ctx, e);
          via_subst1 = subst1(theory, ctx, *body, u);
        } catch (const Error& err) {
          if (err.code() == Code::ParamSubstitution) return std::nullopt;
          throw;
        }
        bool ok = via_elim == via_subst1;
        if (!ok) why = "body = " + show(theory, inner, *body);
        return ok;
      }));

  // the four laws, routed through explicit Subst nodes
  Subst1Fn through_subst_node = [](const Theory& th, const Context& c,
                                   const Term& t, const Term& u) {
    ExplicitTerm e =
        ExplicitTerm::subst(ExplicitTerm::from_term(t), ExplicitTerm::from_term(u));
    return eliminate_subst(th, c, e);
  };
  for (LawResult& r : subst1_laws(theory, o, "subst_lemma", through_subst_node))
    out.push_back(std::move(r));

  return out;
}

// ---- satisfaction ---------------------------------------------------------------

std::vector<LawResult> satisfaction_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  for (const TermEquation& eq : theory.term_eqs) {
    out.push_back(run_law(
        theory, o, "satisfaction", eq.name.empty() ? "equation" : eq.name,
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context base = gen.random_context(2);
          auto v = gen.random_valuation(eq, base, 4);
          if (!v) return std::nullopt;
          Context full = meta_subst_context(theory, eq, *v);
          Term lhs = meta_subst(theory, eq, eq.lhs, *v);
          Term rhs = meta_subst(theory, eq, eq.rhs, *v);
          TypeExpr ls = sort_of(theory, full, lhs);
          TypeExpr rs = sort_of(theory, full, rhs);
          if (!(ls == rs)) {
            why = "sides have different sorts: " + show(theory, full, lhs) +
                  " vs " + show(theory, full, rhs);
            return false;
          }
          bool ok = term_equal(theory, full, lhs, rhs, o.budget) == Verdict::Equal;
          if (!ok)
            why = "not proved equal: " + show(theory, full, lhs) + " == " +
                  show(theory, full, rhs);
          return ok;
        }));
  }
  return out;
}

// ---- meta-substitution ------------------------------------------------------------

std::vector<LawResult> meta_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  for (const TermEquation& eq : theory.term_eqs) {
    if (eq.orientation != Orientation::LeftToRight) continue;
    if (!eq.param_context.empty()) continue;  // builtins have none
    out.push_back(run_law(
        theory, o, "meta", "pattern_roundtrip_" + eq.name,
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context base = gen.random_context(2);
          auto v = gen.random_valuation(eq, base, 3);
          if (!v) return std::nullopt;
          Term subject = meta_subst(theory, eq, eq.lhs, *v);
          auto m = match_pattern(theory, eq, eq.lhs, subject, base);
          if (!m) {
            why = "pattern did not match its own instance " + show(theory, base, subject);
            return false;
          }
          Valuation recovered;
          recovered.base = base;
          for (std::size_t i = 0; i < eq.meta_count; ++i) {
            if (!m->type_inst[i]) {
              why = "matching left a metavariable undetermined";
              return false;
            }
            recovered.inst.push_back(*m->type_inst[i]);
          }
          for (std::size_t i = 0; i < eq.placeholders.size(); ++i) {
            if (!m->fillers[i]) {
              why = "matching left a placeholder undetermined";
              return false;
            }
            recovered.fillers.push_back(*m->fillers[i]);
          }
          Term again = meta_subst(theory, eq, eq.lhs, recovered);
          bool ok = again == subject;
          if (!ok) why = "round-trip changed " + show(theory, base, subject);
          return ok;
        }));
  }
  for (const TermEquation& eq : theory.term_eqs) {
    if (!eq.param_context.empty()) continue;
    out.push_back(run_law(
        theory, o, "meta", "naturality_" + eq.name,
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context base = gen.random_context(2);
          auto v = gen.random_valuation(eq, base, 3);
          if (!v) return std::nullopt;
          Renaming r = random_renaming(gen, theory, base);
          Valuation moved;
          moved.inst = v->inst;
          moved.base = r.target;
          for (std::size_t i = 0; i < eq.placeholders.size(); ++i) {
            std::vector<TypeExpr> binders;
            for (const TypeExpr& b : eq.placeholders[i].binders)
              binders.push_back(ty_normalize(theory, ty_subst(b, v->inst)));
            Renaming lifted = lift_renaming(theory, r, binders);
            moved.fillers.push_back(rename(theory, v->fillers[i], lifted));
          }
          for (const MetaTerm* side : {&eq.lhs, &eq.rhs}) {
            Term here = meta_subst(theory, eq, *side, *v);
            Term there = meta_subst(theory, eq, *side, moved);
            if (!(rename(theory, here, r) == there)) {
              why = "meta-substitution is not natural on " + show(theory, base, here);
              return false;
            }
          }
          return true;
        }));
  }
  return out;
}

// ---- clone laws -------------------------------------------------------------------

std::vector<LawResult> clone_law_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  if (!has_term_ops(theory)) return out;

  auto random_hom = [&](TermGen& gen, const Context& domain,
                        std::size_t size) -> std::optional<CloneHom> {
    auto picked = gen.random_inhabited(domain, size);
    if (!picked) return std::nullopt;
    return CloneHom{domain, picked->first,
                    normalize_term(theory, domain, picked->second, o.budget)};
  };

  out.push_back(run_law(
      theory, o, "clone", "right_unit",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context domain = gen.random_context(3);
        if (domain.empty()) return std::nullopt;
        auto f = random_hom(gen, domain, 4);
        if (!f) return std::nullopt;
        std::vector<CloneHom> ids;
        for (std::size_t p = 0; p < domain.size(); ++p)
          ids.push_back(identity_hom(theory, domain, p));
        CloneHom composed = compose(theory, *f, ids, o.budget);
        bool ok = composed.representative == f->representative;
        if (!ok) why = "f = " + show(theory, domain, f->representative);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "clone", "left_unit",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context domain = gen.random_context(3);
        auto g = random_hom(gen, domain, 4);
        if (!g) return std::nullopt;
        Context single;
        single.sorts.push_back(g->codomain);
        CloneHom id = identity_hom(theory, single, 0);
        CloneHom composed = compose(theory, id, {*g}, o.budget);
        bool ok = composed.representative == g->representative;
        if (!ok) why = "g = " + show(theory, domain, g->representative);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "clone", "associativity",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context xi = gen.random_context(2);
        // hs : xi -> gamma
        Context gamma;
        std::vector<CloneHom> hs;
        for (std::size_t n = gen.below(3); n > 0; --n) {
          auto h = random_hom(gen, xi, 3);
          if (!h) break;
          gamma.sorts.push_back(h->codomain);
          hs.push_back(*h);
        }
        // gs : gamma -> delta
        Context delta;
        std::vector<CloneHom> gs;
        for (std::size_t n = gen.below(3); n > 0; --n) {
          auto g = random_hom(gen, gamma, 3);
          if (!g) break;
          delta.sorts.push_back(g->codomain);
          gs.push_back(*g);
        }
        auto f = random_hom(gen, delta, 3);
        if (!f) return std::nullopt;
        CloneHom lhs = compose(theory, compose(theory, *f, gs, o.budget), hs, o.budget);
        std::vector<CloneHom> inner;
        inner.reserve(gs.size());
        for (const CloneHom& g : gs)
          inner.push_back(compose(theory, g, hs, o.budget));
        CloneHom rhs = compose(theory, *f, inner, o.budget);
        bool ok = lhs.representative == rhs.representative;
        if (!ok) why = "f = " + show(theory, delta, f->representative);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "clone", "structural_weaken_then_fill",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context domain = gen.random_context(2);
        auto f = random_hom(gen, domain, 4);
        if (!f) return std::nullopt;
        auto filler = gen.random_inhabited(domain, 3);
        if (!filler) return std::nullopt;
        CloneHom weakened =
            structural(theory, *f, weaken(theory, domain, filler->first), o.budget);
        std::vector<CloneHom> gs;
        for (std::size_t p = 0; p < domain.size(); ++p)
          gs.push_back(identity_hom(theory, domain, p));
        gs.push_back(CloneHom{domain, ty_normalize(theory, filler->first),
                              normalize_term(theory, domain, filler->second, o.budget)});
        CloneHom back = compose(theory, weakened, gs, o.budget);
        bool ok = back.representative == f->representative;
        if (!ok) why = "f = " + show(theory, domain, f->representative);
        return ok;
      }));

  out.push_back(run_law(
      theory, o, "clone", "structural_exchange_involution",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context domain = gen.random_context(4);
        if (domain.size() < 2) return std::nullopt;
        auto f = random_hom(gen, domain, 4);
        if (!f) return std::nullopt;
        std::size_t p = gen.below(domain.size() - 1);
        Renaming e1 = exchange(theory, domain, p);
        CloneHom once = structural(theory, *f, e1, o.budget);
        CloneHom twice = structural(theory, once, exchange(theory, e1.target, p), o.budget);
        bool ok = twice.representative == f->representative;
        if (!ok) why = "f = " + show(theory, domain, f->representative);
        return ok;
      }));

  return out;
}

// ---- DSL round-trips ---------------------------------------------------------------

std::vector<LawResult> dsl_roundtrip_suite(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;

  if (has_term_ops(theory)) {
    out.push_back(run_law(
        theory, o, "dsl", "parse_print_term",
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context ctx = gen.random_context(3);
          auto t = gen.random_term(ctx, gen.random_sort(), 5);
          if (!t) return std::nullopt;
          NamedContext named{ctx, default_names(ctx)};
          std::string text = print_term(theory, named.names, *t);
          Result<ExplicitTerm> parsed = parse_term(theory, named, text);
          if (!parsed.ok()) {
            why = "re-parse failed: " + text + " (" +
                  parsed.diagnostics().front().render() + ")";
            return false;
          }
          Result<Term> pure = as_pure_term(parsed.value());
          bool ok = pure.ok() && pure.value() == *t;
          if (!ok) why = "round-trip changed: " + text;
          return ok;
        }));

    out.push_back(run_law(
        theory, o, "dsl", "parse_print_explicit",
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          Context ctx = gen.random_context(3);
          auto e = gen.random_explicit(ctx, gen.random_sort(), 5);
          if (!e) return std::nullopt;
          NamedContext named{ctx, default_names(ctx)};
          std::string text = print_explicit(theory, named.names, *e);
          Result<ExplicitTerm> parsed = parse_term(theory, named, text);
          bool ok = parsed.ok() && parsed.value() == *e;
          if (!ok) why = "round-trip changed: " + text;
          return ok;
        }));
  }

  out.push_back(run_law(
      theory, o, "dsl", "parse_print_context",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        Context ctx = gen.random_context(4);
        NamedContext named{ctx, default_names(ctx)};
        std::string text = print_context(theory, named);
        Result<NamedContext> parsed = parse_context(theory, text);
        bool ok = parsed.ok() && parsed.value().ctx == ctx;
        if (!ok) why = "round-trip changed: " + text;
        return ok;
      }));

  out.push_back(run_law(theory, o, "dsl", "parse_print_theory",
                        [&](TermGen&, std::string& why) -> std::optional<bool> {
                          std::string text = print_theory(theory);
                          Result<Theory> parsed = parse_theory(text);
                          if (!parsed.ok()) {
                            why = "re-parse failed: " +
                                  parsed.diagnostics().front().render();
                            return false;
                          }
                          bool ok = parsed.value() == theory;
                          if (!ok) why = "round-trip changed the theory";
                          return ok;
                        }));
  return out;
}

// ---- finite model -------------------------------------------------------------------

std::vector<LawResult> finmodel_suite(const Theory& theory, const LawOptions& o,
                                      std::size_t base_size) {
  std::vector<LawResult> out;
  std::map<std::string, std::size_t> sizes;
  for (const TypeOp& op : theory.type_ops)
    if (op.arity == 0 && op.name != "Unit") sizes[op.name] = base_size;
  FinModel model(theory, sizes);

  auto small_context = [&](TermGen& gen, std::size_t max_len,
                           std::size_t max_envs) -> std::optional<Context> {
    for (int tries = 0; tries < 20; ++tries) {
      Context ctx = gen.random_context(max_len);
      std::size_t total = 1;
      bool ok = true;
      for (const TypeExpr& s : ctx.sorts) {
        std::size_t c = model.card(s);
        if (c == 0 || total > max_envs / std::max<std::size_t>(c, 1)) {
          ok = false;
          break;
        }
        total *= c;
      }
      if (ok && total <= max_envs) return ctx;
    }
    return std::nullopt;
  };

  out.push_back(run_law(
      theory, o, "finmodel", "semantic_substitution_lemma",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        auto ctx = small_context(gen, 2, 64);
        if (!ctx) return std::nullopt;
        auto picked = gen.random_inhabited(*ctx, 4);
        if (!picked) return std::nullopt;
        auto [a, u] = *picked;
        if (model.card(a) > 64) return std::nullopt;
        Context inner = extend(theory, *ctx, a);
        auto t = gen.random_term(inner, gen.random_sort(), 4);
        if (!t) return std::nullopt;
        Term substituted = subst1(theory, *ctx, *t, u);
        for (const Environment& env : model.all_envs(*ctx)) {
          Environment extended = env;
          extended.push_back(model.interp_term(*ctx, u, env));
          if (model.interp_term(*ctx, substituted, env) !=
              model.interp_term(inner, *t, extended)) {
            why = "lemma failed for t = " + show(theory, inner, *t) +
                  ", u = " + show(theory, *ctx, u);
            return false;
          }
        }
        return true;
      }));

  for (const TermEquation& eq : theory.term_eqs) {
    out.push_back(run_law(
        theory, o, "finmodel", "equation_soundness_" + eq.name,
        [&](TermGen& gen, std::string& why) -> std::optional<bool> {
          auto base = small_context(gen, 2, 64);
          if (!base) return std::nullopt;
          auto v = gen.random_valuation(eq, *base, 3);
          if (!v) return std::nullopt;
          for (const TypeExpr& s : v->inst)
            if (model.card(s) > 64) return std::nullopt;
          Context full = meta_subst_context(theory, eq, *v);
          Term lhs = meta_subst(theory, eq, eq.lhs, *v);
          Term rhs = meta_subst(theory, eq, eq.rhs, *v);
          for (const Environment& env : model.all_envs(full)) {
            if (model.interp_term(full, lhs, env) !=
                model.interp_term(full, rhs, env)) {
              why = "equation " + eq.name + " fails at " + show(theory, full, lhs);
              return false;
            }
          }
          return true;
        }));
  }

  out.push_back(run_law(
      theory, o, "finmodel", "interpretation_naturality",
      [&](TermGen& gen, std::string& why) -> std::optional<bool> {
        auto ctx = small_context(gen, 2, 64);
        if (!ctx) return std::nullopt;
        auto t = gen.random_term(*ctx, gen.random_sort(), 4);
        if (!t) return std::nullopt;
        Renaming r = random_renaming(gen, theory, *ctx);
        std::size_t total = 1;
        for (const TypeExpr& s : r.target.sorts) {
          std::size_t c = model.card(s);
          if (total > 4096 / std::max<std::size_t>(c, 1)) return std::nullopt;
          total *= c;
        }
        Term moved = rename(theory, *t, r);
        for (const Environment& env : model.all_envs(r.target)) {
          Environment pulled(ctx->size());
          for (std::size_t p = 0; p < ctx->size(); ++p) pulled[p] = env[r.map[p]];
          if (model.interp_term(r.target, moved, env) !=
              model.interp_term(*ctx, *t, pulled)) {
            why = "naturality fails for t = " + show(theory, *ctx, *t);
            return false;
          }
        }
        return true;
      }));

  return out;
}

// ---- umbrella ---------------------------------------------------------------------

std::vector<LawResult> run_all_laws(const Theory& theory, const LawOptions& o) {
  std::vector<LawResult> out;
  auto absorb = [&](std::vector<LawResult> rs) {
    for (LawResult& r : rs) out.push_back(std::move(r));
  };
  absorb(context_law_suite(theory, o));
  absorb(rename_law_suite(theory, o));
  absorb(substitution_law_suite(theory, o));
  absorb(subst_lemma_suite(theory, o));
  absorb(satisfaction_suite(theory, o));
  absorb(meta_suite(theory, o));
  absorb(clone_law_suite(theory, o));
  absorb(dsl_roundtrip_suite(theory, o));
  try {
    absorb(finmodel_suite(theory, o, 2));
  } catch (const Error& e) {
    if (e.code() != Code::UnsupportedTheory) throw;
  }
  return out;
}

bool all_passed(const std::vector<LawResult>& results) {
  for (const LawResult& r : results)
    if (!r.ok()) return false;
  return true;
}

}  // namespace stt
