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

#include "stt/term.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "stt/signature.hpp"

namespace stt {

namespace {
inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

struct Term::Node {
  bool is_var = false;
  std::size_t id = 0;  // var index or term operator index
  std::vector<TypeExpr> inst;
  std::vector<std::size_t> params;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::size_t op_nodes = 0;
};

Term Term::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->id = index;
  node->hash = hash_mix(0x766172, index);
  return Term(std::move(node));
}

Term Term::make_op(std::size_t op, std::vector<TypeExpr> inst,
                   std::vector<std::size_t> params, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->id = op;
  std::size_t h = hash_mix(0x746d6f70, op);
  std::size_t sz = 1;
  for (const TypeExpr& t : inst) h = hash_mix(h, t.hash());
  for (std::size_t p : params) h = hash_mix(h, p + 1);
  for (const Term& a : args) {
    h = hash_mix(h, a.hash());
    sz += a.op_node_count();
  }
  node->hash = h;
  node->op_nodes = sz;
  node->inst = std::move(inst);
  node->params = std::move(params);
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_var() const { return node_->is_var; }
std::size_t Term::var_index() const { return node_->id; }
std::size_t Term::op() const { return node_->id; }
const std::vector<TypeExpr>& Term::inst() const { return node_->inst; }
const std::vector<std::size_t>& Term::params() const { return node_->params; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::size_t Term::op_node_count() const { return node_->op_nodes; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.is_var() != b.is_var() ||
      a.node_->id != b.node_->id)
    return false;
  if (a.is_var()) return true;
  if (a.inst() != b.inst() || a.params() != b.params()) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

std::vector<TypeExpr> instantiated_binders(const Theory& theory, const Term& t,
                                           std::size_t premiss) {
  const SecondOrderArity& ar = theory.term_ops[t.op()].arity;
  std::vector<TypeExpr> out;
  out.reserve(ar.premisses[premiss].binders.size());
  for (const TypeExpr& b : ar.premisses[premiss].binders)
    out.push_back(ty_normalize(theory, ty_subst(b, t.inst())));
  return out;
}

namespace {

Term map_free_impl(const Theory& theory, const Term& t, std::size_t depth,
                   const std::function<std::size_t(std::size_t, std::size_t)>& fn) {
  if (t.is_var()) {
    std::size_t i = t.var_index();
    return i < depth ? t : Term::var(fn(i, depth));
  }
  std::vector<std::size_t> params;
  params.reserve(t.params().size());
  for (std::size_t p : t.params()) params.push_back(p < depth ? p : fn(p, depth));
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::size_t k = theory.term_ops[t.op()].arity.premisses[i].binders.size();
    args.push_back(map_free_impl(theory, t.args()[i], depth + k, fn));
  }
  return Term::make_op(t.op(), t.inst(), std::move(params), std::move(args));
}

}  // namespace

Term map_free_vars(const Theory& theory, const Term& t,
                   const std::function<std::size_t(std::size_t, std::size_t)>& fn) {
  return map_free_impl(theory, t, 0, fn);
}

Term shift_free(const Theory& theory, const Term& t, std::size_t amount) {
  if (amount == 0) return t;
  return map_free_impl(theory, t, 0,
                       [amount](std::size_t idx, std::size_t) { return idx + amount; });
}

Result<TypeExpr> check(const Theory& theory, const Context& ctx, const Term& t) {
  if (!t.valid())
    return Diagnostic{Code::Internal, "empty term handle", "", std::nullopt};
  if (t.is_var()) {
    if (t.var_index() >= ctx.size())
      return Diagnostic{Code::UnboundVariable,
                        "variable index " + std::to_string(t.var_index()) +
                            " in a context of size " + std::to_string(ctx.size()),
                        "", std::nullopt};
    return ctx.sort_of_index(t.var_index());
  }
  if (t.op() >= theory.term_ops.size())
    return Diagnostic{Code::UnknownTermOp,
                      "term operator index " + std::to_string(t.op()) +
                          " out of range",
                      "", std::nullopt};
  const TermOp& op = theory.term_ops[t.op()];
  const SecondOrderArity& ar = op.arity;
  if (t.inst().size() != ar.meta_count)
    return Diagnostic{Code::LengthMismatch,
                      "operator " + op.name + " expects " +
                          std::to_string(ar.meta_count) +
                          " type instantiations, got " +
                          std::to_string(t.inst().size()),
                      op.name, std::nullopt};
  for (const TypeExpr& c : t.inst())
    if (!c.is_ground())
      return Diagnostic{Code::MetaIndexOutOfRange,
                        "operator instantiations must be ground", op.name,
                        std::nullopt};
  if (t.params().size() != ar.parameters.size())
    return Diagnostic{Code::LengthMismatch,
                      "operator " + op.name + " expects " +
                          std::to_string(ar.parameters.size()) +
                          " parameter variables, got " +
                          std::to_string(t.params().size()),
                      op.name, std::nullopt};
  for (std::size_t j = 0; j < t.params().size(); ++j) {
    std::size_t idx = t.params()[j];
    if (idx >= ctx.size())
      return Diagnostic{Code::UnboundVariable,
                        "parameter variable index " + std::to_string(idx) +
                            " in a context of size " + std::to_string(ctx.size()),
                        op.name, std::nullopt};
    TypeExpr expected = ty_normalize(theory, ty_subst(ar.parameters[j], t.inst()));
    if (!(ctx.sort_of_index(idx) == expected))
      return Diagnostic{Code::ParamSortMismatch,
                        "parameter slot " + std::to_string(j) + " of " + op.name +
                            " is bound to a variable of the wrong sort",
                        op.name, std::nullopt};
  }
  if (t.args().size() != ar.premisses.size())
    return Diagnostic{Code::LengthMismatch,
                      "operator " + op.name + " expects " +
                          std::to_string(ar.premisses.size()) + " arguments, got " +
                          std::to_string(t.args().size()),
                      op.name, std::nullopt};
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    Context inner = ctx;
    for (const TypeExpr& b : ar.premisses[i].binders)
      inner.sorts.push_back(ty_normalize(theory, ty_subst(b, t.inst())));
    Result<TypeExpr> got = check(theory, inner, t.args()[i]);
    if (!got.ok()) return got;
    TypeExpr expected =
        ty_normalize(theory, ty_subst(ar.premisses[i].result, t.inst()));
    if (!(got.value() == expected))
      return Diagnostic{Code::SortMismatch,
                        "argument " + std::to_string(i) + " of " + op.name +
                            " has the wrong sort",
                        op.name, std::nullopt};
  }
  return ty_normalize(theory, ty_subst(ar.result, t.inst()));
}

TypeExpr sort_of(const Theory& theory, const Context& ctx, const Term& t) {
  Result<TypeExpr> r = check(theory, ctx, t);
  if (!r.ok()) throw Error(r.diagnostics().front());
  return r.value();
}

Term rename(const Theory& theory, const Term& t, const Renaming& r) {
  std::size_t n = r.source.size();
  std::size_t m = r.target.size();
  return map_free_impl(theory, t, 0, [&](std::size_t idx, std::size_t depth) {
    std::size_t rel = idx - depth;  // index as seen from the renaming's source
    if (rel >= n)
      fail(Code::UnboundVariable, "renaming applied to an unbound variable");
    std::size_t p = n - 1 - rel;
    return m - 1 - r.map[p] + depth;
  });
}

// ---- enumeration ----------------------------------------------------------

namespace {

void collect_subexprs(const TypeExpr& t, std::vector<TypeExpr>& out) {
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  if (!t.is_meta())
    for (const TypeExpr& a : t.args()) collect_subexprs(a, out);
}

bool in_universe(const std::vector<TypeExpr>& universe, const TypeExpr& t) {
  return std::find(universe.begin(), universe.end(), t) != universe.end();
}

// An operator is enumerable only if each of its metavariables occurs
// somewhere in its declared sorts; a metavariable mentioned nowhere would
// admit infinitely many instantiations distinguished only by the inst field.
bool op_enumerable(const SecondOrderArity& ar) {
  std::vector<bool> seen(ar.meta_count, false);
  auto mark = [&](const TypeExpr& t) {
    auto rec = [&](const TypeExpr& x, auto&& self) -> void {
      if (x.is_meta()) {
        if (x.meta_index() < seen.size()) seen[x.meta_index()] = true;
        return;
      }
      for (const TypeExpr& a : x.args()) self(a, self);
    };
    rec(t, rec);
  };
  mark(ar.result);
  for (const TypeExpr& p : ar.parameters) mark(p);
  for (const Premiss& pr : ar.premisses) {
    mark(pr.result);
    for (const TypeExpr& b : pr.binders) mark(b);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

struct Enumerator {
  const Theory& theory;
  std::vector<TypeExpr> universe;

  Enumerator(const Theory& th, std::vector<TypeExpr> u)
      : theory(th), universe(std::move(u)) {}

  struct Key {
    Context ctx;
    TypeExpr sort;
    std::size_t size;
    bool operator==(const Key& o) const {
      return size == o.size && sort == o.sort && ctx == o.ctx;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_mix(hash_mix(k.ctx.hash(), k.sort.hash()), k.size);
    }
  };
  std::unordered_map<Key, std::vector<Term>, KeyHash> memo;

  struct InstKey {
    std::size_t op;
    TypeExpr sort;
    bool operator==(const InstKey& o) const { return op == o.op && sort == o.sort; }
  };
  struct InstKeyHash {
    std::size_t operator()(const InstKey& k) const {
      return hash_mix(k.op, k.sort.hash());
    }
  };
  std::unordered_map<InstKey, std::vector<std::vector<TypeExpr>>, InstKeyHash>
      inst_memo;

  // Instantiations of op's metavariables from the universe whose conclusion
  // is `sort` and whose premiss, binder, and parameter sorts stay inside the
  // universe. Lexicographic in the universe order.
  const std::vector<std::vector<TypeExpr>>& insts_for(std::size_t op,
                                                      const TypeExpr& sort) {
    InstKey key{op, sort};
    auto it = inst_memo.find(key);
    if (it != inst_memo.end()) return it->second;

    std::vector<std::vector<TypeExpr>> out;
    const SecondOrderArity& ar = theory.term_ops[op].arity;
    std::vector<TypeExpr> inst(ar.meta_count);
    auto admissible = [&]() {
      if (!(ty_normalize(theory, ty_subst(ar.result, inst)) == sort)) return false;
      for (const TypeExpr& p : ar.parameters)
        if (!in_universe(universe, ty_normalize(theory, ty_subst(p, inst))))
          return false;
      for (const Premiss& pr : ar.premisses) {
        if (!in_universe(universe, ty_normalize(theory, ty_subst(pr.result, inst))))
          return false;
        for (const TypeExpr& b : pr.binders)
          if (!in_universe(universe, ty_normalize(theory, ty_subst(b, inst))))
            return false;
      }
      return true;
    };
    auto rec = [&](std::size_t i, auto&& self) -> void {
      if (i == ar.meta_count) {
        if (admissible()) out.push_back(inst);
        return;
      }
      for (const TypeExpr& s : universe) {
        inst[i] = s;
        self(i + 1, self);
      }
    };
    if (ar.meta_count == 0 || !universe.empty()) rec(0, rec);
    return inst_memo.emplace(key, std::move(out)).first->second;
  }

  // All terms of the given sort with exactly `size` operator nodes.
  const std::vector<Term>& exact(const Context& ctx, const TypeExpr& sort,
                                 std::size_t size) {
    Key key{ctx, sort, size};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<Term> out;
    if (size == 0) {
      for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ctx.sort_of_index(i) == sort) out.push_back(Term::var(i));
    } else {
      for (std::size_t op = 0; op < theory.term_ops.size(); ++op) {
        const SecondOrderArity& ar = theory.term_ops[op].arity;
        for (const std::vector<TypeExpr>& inst : insts_for(op, sort)) {
          std::vector<std::vector<std::size_t>> param_choices{{}};
          for (const TypeExpr& psort_raw : ar.parameters) {
            TypeExpr psort = ty_normalize(theory, ty_subst(psort_raw, inst));
            std::vector<std::size_t> positions;
            for (std::size_t i = 0; i < ctx.size(); ++i)
              if (ctx.sort_of_index(i) == psort) positions.push_back(i);
            std::vector<std::vector<std::size_t>> next;
            for (const auto& prefix : param_choices)
              for (std::size_t i : positions) {
                auto copy = prefix;
                copy.push_back(i);
                next.push_back(std::move(copy));
              }
            param_choices = std::move(next);
            if (param_choices.empty()) break;
          }
          if (param_choices.empty()) continue;

          std::size_t n = ar.premisses.size();
          if (n == 0) {
            if (size != 1) continue;
            for (const auto& params : param_choices)
              out.push_back(Term::make_op(op, inst, params, {}));
            continue;
          }

          std::vector<Context> arg_ctx(n);
          std::vector<TypeExpr> arg_sort(n);
          for (std::size_t i = 0; i < n; ++i) {
            Context inner = ctx;
            for (const TypeExpr& b : ar.premisses[i].binders)
              inner.sorts.push_back(ty_normalize(theory, ty_subst(b, inst)));
            arg_ctx[i] = std::move(inner);
            arg_sort[i] =
                ty_normalize(theory, ty_subst(ar.premisses[i].result, inst));
          }

          // argument size compositions of size-1, lexicographic
          std::vector<std::size_t> comp(n, 0);
          auto emit = [&]() {
            std::vector<const std::vector<Term>*> choices(n);
            for (std::size_t i = 0; i < n; ++i) {
              choices[i] = &exact(arg_ctx[i], arg_sort[i], comp[i]);
              if (choices[i]->empty()) return;
            }
            std::vector<std::size_t> pick(n, 0);
            for (;;) {
              std::vector<Term> args;
              args.reserve(n);
              for (std::size_t i = 0; i < n; ++i)
                args.push_back((*choices[i])[pick[i]]);
              for (const auto& params : param_choices)
                out.push_back(Term::make_op(op, inst, params, args));
              std::size_t i = n;
              for (;;) {
                if (i == 0) return;
                --i;
                if (++pick[i] < choices[i]->size()) break;
                pick[i] = 0;
              }
            }
          };
          auto rec = [&](std::size_t i, std::size_t remaining, auto&& self) -> void {
            if (i + 1 == n) {
              comp[i] = remaining;
              emit();
              return;
            }
            for (std::size_t v = 0; v <= remaining; ++v) {
              comp[i] = v;
              self(i + 1, remaining - v, self);
            }
          };
          rec(0, size - 1, rec);
        }
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }
};

}  // namespace

std::vector<TypeExpr> enumeration_universe(const Theory& theory,
                                           const Context& ctx,
                                           const TypeExpr& sort) {
  std::vector<TypeExpr> universe;
  for (const TypeExpr& s : ctx.sorts) collect_subexprs(s, universe);
  collect_subexprs(ty_normalize(theory, sort), universe);
  for (const TypeExpr& b : theory.base_sorts())
    collect_subexprs(ty_normalize(theory, b), universe);
  std::sort(universe.begin(), universe.end(),
            [](const TypeExpr& a, const TypeExpr& b) { return compare(a, b) < 0; });
  return universe;
}

std::vector<std::vector<TypeExpr>> admissible_instantiations(
    const Theory& theory, std::size_t op, const TypeExpr& sort,
    const std::vector<TypeExpr>& universe) {
  Enumerator e(theory, universe);
  return e.insts_for(op, ty_normalize(theory, sort));
}

std::vector<Term> enumerate(const Theory& theory, const Context& ctx,
                            const TypeExpr& sort, std::size_t size_bound) {
  for (const TermOp& op : theory.term_ops)
    if (!op_enumerable(op.arity))
      fail(Code::NonEnumerableOperator,
           "operator " + op.name +
               " has a metavariable that occurs in none of its sorts");
  Enumerator e(theory, enumeration_universe(theory, ctx, sort));
  TypeExpr target = ty_normalize(theory, sort);
  std::vector<Term> out;
  for (std::size_t s = 0; s <= size_bound; ++s) {
    const std::vector<Term>& level = e.exact(ctx, target, s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace stt
