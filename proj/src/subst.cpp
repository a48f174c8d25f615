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

#include "stt/subst.hpp"

#include <string>

#include "stt/signature.hpp"

namespace stt {

struct ExplicitTerm::Node {
  Kind kind = Kind::Var;
  std::size_t id = 0;
  std::vector<TypeExpr> inst;
  std::vector<std::size_t> params;
  std::vector<ExplicitTerm> args;  // op arguments, or {body, arg} for Subst
  std::size_t subst_nodes = 0;
};

ExplicitTerm ExplicitTerm::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->id = index;
  return ExplicitTerm(std::move(node));
}

ExplicitTerm ExplicitTerm::make_op(std::size_t op, std::vector<TypeExpr> inst,
                                   std::vector<std::size_t> params,
                                   std::vector<ExplicitTerm> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Op;
  node->id = op;
  for (const ExplicitTerm& a : args) node->subst_nodes += a.subst_node_count();
  node->inst = std::move(inst);
  node->params = std::move(params);
  node->args = std::move(args);
  return ExplicitTerm(std::move(node));
}

ExplicitTerm ExplicitTerm::subst(ExplicitTerm body, ExplicitTerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Subst;
  node->subst_nodes = 1 + body.subst_node_count() + arg.subst_node_count();
  node->args = {std::move(body), std::move(arg)};
  return ExplicitTerm(std::move(node));
}

ExplicitTerm ExplicitTerm::from_term(const Term& t) {
  if (t.is_var()) return var(t.var_index());
  std::vector<ExplicitTerm> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(from_term(a));
  return make_op(t.op(), t.inst(), t.params(), std::move(args));
}

ExplicitTerm::Kind ExplicitTerm::kind() const { return node_->kind; }
std::size_t ExplicitTerm::var_index() const { return node_->id; }
std::size_t ExplicitTerm::op() const { return node_->id; }
const std::vector<TypeExpr>& ExplicitTerm::inst() const { return node_->inst; }
const std::vector<std::size_t>& ExplicitTerm::params() const { return node_->params; }
const std::vector<ExplicitTerm>& ExplicitTerm::args() const { return node_->args; }
const ExplicitTerm& ExplicitTerm::body() const { return node_->args[0]; }
const ExplicitTerm& ExplicitTerm::arg() const { return node_->args[1]; }
std::size_t ExplicitTerm::subst_node_count() const { return node_->subst_nodes; }

bool operator==(const ExplicitTerm& a, const ExplicitTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind() || a.node_->id != b.node_->id) return false;
  if (a.node_->inst != b.node_->inst || a.node_->params != b.node_->params)
    return false;
  if (a.node_->args.size() != b.node_->args.size()) return false;
  for (std::size_t i = 0; i < a.node_->args.size(); ++i)
    if (!(a.node_->args[i] == b.node_->args[i])) return false;
  return true;
}

Result<TypeExpr> check_explicit(const Theory& theory, const Context& ctx,
                                const ExplicitTerm& t) {
  switch (t.kind()) {
    case ExplicitTerm::Kind::Var: {
      if (t.var_index() >= ctx.size())
        return Diagnostic{Code::UnboundVariable,
                          "variable index " + std::to_string(t.var_index()) +
                              " in a context of size " + std::to_string(ctx.size()),
                          "", std::nullopt};
      return ctx.sort_of_index(t.var_index());
    }
    case ExplicitTerm::Kind::Subst: {
      Result<TypeExpr> arg_sort = check_explicit(theory, ctx, t.arg());
      if (!arg_sort.ok()) return arg_sort;
      return check_explicit(theory, extend(theory, ctx, arg_sort.value()), t.body());
    }
    case ExplicitTerm::Kind::Op: {
      // Reuse the Term checker by checking each argument here; the premiss
      // and parameter bookkeeping is identical.
      if (t.op() >= theory.term_ops.size())
        return Diagnostic{Code::UnknownTermOp, "term operator index out of range",
                          "", std::nullopt};
      const TermOp& op = theory.term_ops[t.op()];
      const SecondOrderArity& ar = op.arity;
      if (t.inst().size() != ar.meta_count ||
          t.params().size() != ar.parameters.size() ||
          t.args().size() != ar.premisses.size())
        return Diagnostic{Code::LengthMismatch,
                          "operator " + op.name + " applied with the wrong shape",
                          op.name, std::nullopt};
      for (std::size_t j = 0; j < t.params().size(); ++j) {
        if (t.params()[j] >= ctx.size())
          return Diagnostic{Code::UnboundVariable, "parameter variable out of range",
                            op.name, std::nullopt};
        TypeExpr expected =
            ty_normalize(theory, ty_subst(ar.parameters[j], t.inst()));
        if (!(ctx.sort_of_index(t.params()[j]) == expected))
          return Diagnostic{Code::ParamSortMismatch,
                            "parameter slot " + std::to_string(j) + " of " +
                                op.name + " is bound to a variable of the wrong sort",
                            op.name, std::nullopt};
      }
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        Context inner = ctx;
        for (const TypeExpr& b : ar.premisses[i].binders)
          inner.sorts.push_back(ty_normalize(theory, ty_subst(b, t.inst())));
        Result<TypeExpr> got = check_explicit(theory, inner, t.args()[i]);
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
  }
  return Diagnostic{Code::Internal, "invalid explicit term", "", std::nullopt};
}

namespace {

// Single-variable substitution at depth: replaces the variable whose index
// equals the current depth. u is closed over the ambient context below the
// substituted entry.
Term subst_at(const Theory& theory, const Term& t, const Term& u, std::size_t depth) {
  if (t.is_var()) {
    std::size_t i = t.var_index();
    if (i < depth) return t;
    if (i == depth) return shift_free(theory, u, depth);
    return Term::var(i - 1);
  }
  std::vector<std::size_t> params;
  params.reserve(t.params().size());
  for (std::size_t p : t.params()) {
    if (p == depth)
      fail(Code::ParamSubstitution,
           "substituted variable occurs in a parameter slot of operator " +
               theory.term_ops[t.op()].name);
    params.push_back(p < depth ? p : p - 1);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::size_t k = theory.term_ops[t.op()].arity.premisses[i].binders.size();
    args.push_back(subst_at(theory, t.args()[i], u, depth + k));
  }
  return Term::make_op(t.op(), t.inst(), std::move(params), std::move(args));
}

Term msubst_at(const Theory& theory, const std::vector<Term>& sigma,
               std::size_t source_size, const Term& t, std::size_t depth) {
  if (t.is_var()) {
    std::size_t i = t.var_index();
    if (i < depth) return t;
    std::size_t rel = i - depth;
    if (rel >= source_size)
      fail(Code::UnboundVariable, "substitution applied to an unbound variable");
    return shift_free(theory, sigma[source_size - 1 - rel], depth);
  }
  std::vector<std::size_t> params;
  params.reserve(t.params().size());
  for (std::size_t p : t.params()) {
    if (p < depth) {
      params.push_back(p);
      continue;
    }
    std::size_t rel = p - depth;
    if (rel >= source_size)
      fail(Code::UnboundVariable, "substitution applied to an unbound variable");
    const Term& image = sigma[source_size - 1 - rel];
    if (!image.is_var())
      fail(Code::ParamSubstitution,
           "substitution would place a non-variable in a parameter slot of "
           "operator " +
               theory.term_ops[t.op()].name);
    params.push_back(image.var_index() + depth);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::size_t k = theory.term_ops[t.op()].arity.premisses[i].binders.size();
    args.push_back(msubst_at(theory, sigma, source_size, t.args()[i], depth + k));
  }
  return Term::make_op(t.op(), t.inst(), std::move(params), std::move(args));
}

}  // namespace

Term subst1(const Theory& theory, const Context& ctx, const Term& t, const Term& u) {
  (void)ctx;
  return subst_at(theory, t, u, 0);
}

std::vector<Term> identity_subst(const Context& ctx) {
  std::vector<Term> sigma(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p)
    sigma[p] = Term::var(ctx.size() - 1 - p);
  return sigma;
}

Term msubst_unchecked(const Theory& theory, const std::vector<Term>& sigma,
                      std::size_t source_size, const Term& t) {
  return msubst_at(theory, sigma, source_size, t, 0);
}

Term msubst(const Theory& theory, const Context& source, const Context& target,
            const std::vector<Term>& sigma, const Term& t, bool validate) {
  if (sigma.size() != source.size())
    fail(Code::LengthMismatch,
         "substitution provides " + std::to_string(sigma.size()) +
             " terms for a context of size " + std::to_string(source.size()));
  if (validate) {
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      TypeExpr got = sort_of(theory, target, sigma[p]);
      if (!ty_equal(theory, got, source[p]))
        fail(Code::SortMismatch,
             "substitution entry " + std::to_string(p) + " has the wrong sort");
    }
  }
  return msubst_at(theory, sigma, source.size(), t, 0);
}

Term eliminate_subst(const Theory& theory, const Context& ctx,
                     const ExplicitTerm& t) {
  switch (t.kind()) {
    case ExplicitTerm::Kind::Var:
      return Term::var(t.var_index());
    case ExplicitTerm::Kind::Subst: {
      Term arg = eliminate_subst(theory, ctx, t.arg());
      TypeExpr sort = sort_of(theory, ctx, arg);
      Term body = eliminate_subst(theory, extend(theory, ctx, sort), t.body());
      return subst1(theory, ctx, body, arg);
    }
    case ExplicitTerm::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      const SecondOrderArity& ar = theory.term_ops[t.op()].arity;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        Context inner = ctx;
        for (const TypeExpr& b : ar.premisses[i].binders)
          inner.sorts.push_back(ty_normalize(theory, ty_subst(b, t.inst())));
        args.push_back(eliminate_subst(theory, inner, t.args()[i]));
      }
      return Term::make_op(t.op(), t.inst(), t.params(), std::move(args));
    }
  }
  fail(Code::Internal, "invalid explicit term");
}

}  // namespace stt
