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

#include "stt/signature.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stt/equations.hpp"

namespace stt {

std::optional<std::size_t> Theory::find_type_op(std::string_view name) const {
  for (std::size_t i = 0; i < type_ops.size(); ++i)
    if (type_ops[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Theory::find_term_op(std::string_view name) const {
  for (std::size_t i = 0; i < term_ops.size(); ++i)
    if (term_ops[i].name == name) return i;
  return std::nullopt;
}

std::vector<TypeExpr> Theory::base_sorts() const {
  std::vector<TypeExpr> out;
  for (std::size_t i = 0; i < type_ops.size(); ++i)
    if (type_ops[i].arity == 0) out.push_back(TypeExpr::app(i));
  return out;
}

namespace {

bool premiss_eq(const Premiss& a, const Premiss& b) {
  return a.binders == b.binders && a.result == b.result;
}

bool arity_eq(const SecondOrderArity& a, const SecondOrderArity& b) {
  if (a.meta_count != b.meta_count || a.parameters != b.parameters ||
      !(a.result == b.result) || a.premisses.size() != b.premisses.size())
    return false;
  for (std::size_t i = 0; i < a.premisses.size(); ++i)
    if (!premiss_eq(a.premisses[i], b.premisses[i])) return false;
  return true;
}

}  // namespace

bool operator==(const Theory& a, const Theory& b) {
  if (a.name != b.name || a.type_ops.size() != b.type_ops.size() ||
      a.type_eqs.size() != b.type_eqs.size() ||
      a.term_ops.size() != b.term_ops.size() ||
      a.term_eqs.size() != b.term_eqs.size())
    return false;
  for (std::size_t i = 0; i < a.type_ops.size(); ++i)
    if (a.type_ops[i].name != b.type_ops[i].name ||
        a.type_ops[i].arity != b.type_ops[i].arity)
      return false;
  for (std::size_t i = 0; i < a.type_eqs.size(); ++i) {
    const TypeEquation &x = a.type_eqs[i], &y = b.type_eqs[i];
    if (x.meta_count != y.meta_count || !(x.lhs == y.lhs) || !(x.rhs == y.rhs) ||
        x.orientation != y.orientation)
      return false;
  }
  for (std::size_t i = 0; i < a.term_ops.size(); ++i)
    if (a.term_ops[i].name != b.term_ops[i].name ||
        !arity_eq(a.term_ops[i].arity, b.term_ops[i].arity))
      return false;
  for (std::size_t i = 0; i < a.term_eqs.size(); ++i) {
    const TermEquation &x = a.term_eqs[i], &y = b.term_eqs[i];
    if (x.name != y.name || x.meta_count != y.meta_count ||
        x.param_context != y.param_context || !(x.result == y.result) ||
        !(x.lhs == y.lhs) || !(x.rhs == y.rhs) ||
        x.orientation != y.orientation ||
        x.placeholders.size() != y.placeholders.size())
      return false;
    for (std::size_t j = 0; j < x.placeholders.size(); ++j)
      if (!premiss_eq(x.placeholders[j], y.placeholders[j])) return false;
  }
  return true;
}

// ---- validation -----------------------------------------------------------

namespace {

struct Validator {
  const Theory& th;
  std::vector<Diagnostic> diags;

  void report(Code code, std::string where, std::string message) {
    diags.push_back(Diagnostic{code, std::move(message), std::move(where), {}});
  }

  // Checks operator references, arities, and the metavariable range of a
  // type expression under `meta_count` metavariables.
  void check_type_expr(const TypeExpr& t, std::size_t meta_count,
                       const std::string& where) {
    if (!t.valid()) {
      report(Code::UnknownTypeOp, where, "missing type expression");
      return;
    }
    if (t.is_meta()) {
      if (t.meta_index() >= meta_count)
        report(Code::MetaIndexOutOfRange, where,
               "type metavariable index " + std::to_string(t.meta_index()) +
                   " exceeds the declared count " + std::to_string(meta_count));
      return;
    }
    if (t.op() >= th.type_ops.size()) {
      report(Code::UnknownTypeOp, where, "reference to an undeclared type operator");
      return;
    }
    if (t.args().size() != th.type_ops[t.op()].arity)
      report(Code::ArityMismatch, where,
             "type operator " + th.type_ops[t.op()].name + " expects " +
                 std::to_string(th.type_ops[t.op()].arity) + " arguments, got " +
                 std::to_string(t.args().size()));
    for (const TypeExpr& a : t.args()) check_type_expr(a, meta_count, where);
  }

  void check_meta_term_refs(const MetaTerm& t, const TermEquation& eq,
                            const std::string& where) {
    switch (t.kind()) {
      case MetaTerm::Kind::Var:
        return;
      case MetaTerm::Kind::MVar: {
        if (t.placeholder() >= eq.placeholders.size()) {
          report(Code::PlaceholderArityMismatch, where,
                 "placeholder index out of range");
          return;
        }
        for (const MetaTerm& s : t.sub()) check_meta_term_refs(s, eq, where);
        return;
      }
      case MetaTerm::Kind::Op: {
        if (t.op() >= th.term_ops.size()) {
          report(Code::UnknownTermOp, where, "reference to an undeclared term operator");
          return;
        }
        for (const TypeExpr& i : t.inst()) check_type_expr(i, eq.meta_count, where);
        for (const MetaTerm& a : t.args()) check_meta_term_refs(a, eq, where);
        return;
      }
    }
  }

  void duplicate_names() {
    std::set<std::string> seen;
    for (const TypeOp& op : th.type_ops)
      if (!seen.insert(op.name).second)
        report(Code::DuplicateName, op.name, "duplicate type operator name");
    // Term operators share a namespace of their own.
    std::set<std::string> term_seen;
    for (const TermOp& op : th.term_ops)
      if (!term_seen.insert(op.name).second)
        report(Code::DuplicateName, op.name, "duplicate term operator name");
    std::set<std::string> eq_seen;
    for (const TermEquation& eq : th.term_eqs)
      if (!eq.name.empty() && !eq_seen.insert(eq.name).second)
        report(Code::DuplicateName, eq.name, "duplicate equation name");
  }

  void run() {
    duplicate_names();
    for (const TypeEquation& eq : th.type_eqs) {
      check_type_expr(eq.lhs, eq.meta_count, "type equation");
      check_type_expr(eq.rhs, eq.meta_count, "type equation");
    }
    for (const TermOp& op : th.term_ops) {
      const SecondOrderArity& ar = op.arity;
      check_type_expr(ar.result, ar.meta_count, op.name);
      for (const TypeExpr& p : ar.parameters) check_type_expr(p, ar.meta_count, op.name);
      for (const Premiss& pr : ar.premisses) {
        check_type_expr(pr.result, ar.meta_count, op.name);
        for (const TypeExpr& b : pr.binders) check_type_expr(b, ar.meta_count, op.name);
      }
    }
    for (const TermEquation& eq : th.term_eqs) {
      const std::string& where = eq.name.empty() ? "term equation" : eq.name;
      std::size_t diags_before = diags.size();
      check_type_expr(eq.result, eq.meta_count, where);
      for (const TypeExpr& p : eq.param_context) check_type_expr(p, eq.meta_count, where);
      for (const Premiss& ph : eq.placeholders) {
        check_type_expr(ph.result, eq.meta_count, where);
        for (const TypeExpr& b : ph.binders) check_type_expr(b, eq.meta_count, where);
      }
      if (eq.placeholder_names.size() != eq.placeholders.size() &&
          !eq.placeholder_names.empty())
        report(Code::LengthMismatch, where,
               "placeholder name list does not match the placeholder count");
      check_meta_term_refs(eq.lhs, eq, where);
      check_meta_term_refs(eq.rhs, eq, where);
      if (diags.size() != diags_before) continue;  // sort checking needs sane references
      for (const MetaTerm* side : {&eq.lhs, &eq.rhs}) {
        Result<TypeExpr> sort = check_meta(th, eq, *side);
        if (!sort.ok()) {
          report(Code::IllTypedEquationSide, where,
                 std::string(side == &eq.lhs ? "left" : "right") +
                     "-hand side: " + sort.diagnostics().front().message);
        } else {
          TypeExpr expected = ty_normalize(th, eq.result);
          if (!(sort.value() == expected))
            report(Code::IllTypedEquationSide, where,
                   std::string(side == &eq.lhs ? "left" : "right") +
                       "-hand side does not have the declared sort");
        }
      }
      if (eq.orientation == Orientation::LeftToRight) {
        if (auto why = pattern_violation(th, eq))
          report(Code::NonPatternLhs, where, *why);
      }
    }
  }
};

}  // namespace

Result<Theory> validate(const Theory& raw) {
  Validator v{raw, {}};
  v.run();
  if (!v.diags.empty()) return v.diags;
  return raw;
}

// ---- builtin theories -------------------------------------------------------

namespace {

// Shorthands for assembling theories.
TypeExpr M(std::size_t i) { return TypeExpr::meta(i); }

struct TheoryBuilder {
  Theory th;

  std::size_t type_op(const std::string& name, std::size_t arity) {
    th.type_ops.push_back(TypeOp{name, arity});
    return th.type_ops.size() - 1;
  }
  std::size_t term_op(const std::string& name, SecondOrderArity ar) {
    th.term_ops.push_back(TermOp{name, std::move(ar)});
    return th.term_ops.size() - 1;
  }
};

Theory make_stlc(std::size_t n_bases) {
  TheoryBuilder b;
  b.th.name = "stlc";
  for (std::size_t i = 0; i < n_bases; ++i)
    b.type_op(n_bases == 1 ? "o" : "o" + std::to_string(i + 1), 0);
  std::size_t Unit = b.type_op("Unit", 0);
  std::size_t Prod = b.type_op("Prod", 2);
  std::size_t Fun = b.type_op("Fun", 2);

  auto unit = TypeExpr::app(Unit);
  auto fun = [&](TypeExpr a, TypeExpr c) {
    return TypeExpr::app(Fun, {std::move(a), std::move(c)});
  };
  auto prod = [&](TypeExpr a, TypeExpr c) {
    return TypeExpr::app(Prod, {std::move(a), std::move(c)});
  };

  std::size_t u = b.term_op("u", SecondOrderArity{0, {}, {}, unit});
  std::size_t abs = b.term_op(
      "abs", SecondOrderArity{2, {Premiss{{M(0)}, M(1)}}, {}, fun(M(0), M(1))});
  std::size_t app = b.term_op(
      "app", SecondOrderArity{
                 2, {Premiss{{}, fun(M(0), M(1))}, Premiss{{}, M(0)}}, {}, M(1)});
  b.term_op("pair", SecondOrderArity{2,
                                     {Premiss{{}, M(0)}, Premiss{{}, M(1)}},
                                     {},
                                     prod(M(0), M(1))});
  b.term_op("proj1", SecondOrderArity{2, {Premiss{{}, prod(M(0), M(1))}}, {}, M(0)});
  b.term_op("proj2", SecondOrderArity{2, {Premiss{{}, prod(M(0), M(1))}}, {}, M(1)});
  (void)u;

  // beta: app(abs((z) t[z]), a) == t[a]
  {
    TermEquation eq;
    eq.name = "beta";
    eq.meta_count = 2;
    eq.placeholders = {Premiss{{M(0)}, M(1)}, Premiss{{}, M(0)}};
    eq.placeholder_names = {"t", "a"};
    eq.result = M(1);
    eq.lhs = MetaTerm::make_op(
        app, {M(0), M(1)}, {},
        {MetaTerm::make_op(abs, {M(0), M(1)}, {},
                           {MetaTerm::mvar(0, {MetaTerm::var(0)})}),
         MetaTerm::mvar(1, {})});
    eq.rhs = MetaTerm::mvar(0, {MetaTerm::mvar(1, {})});
    b.th.term_eqs.push_back(std::move(eq));
  }
  // eta: abs((x) app(f, x)) == f
  {
    TermEquation eq;
    eq.name = "eta";
    eq.meta_count = 2;
    eq.placeholders = {Premiss{{}, fun(M(0), M(1))}};
    eq.placeholder_names = {"f"};
    eq.result = fun(M(0), M(1));
    eq.lhs = MetaTerm::make_op(
        abs, {M(0), M(1)}, {},
        {MetaTerm::make_op(app, {M(0), M(1)}, {},
                           {MetaTerm::mvar(0, {}), MetaTerm::var(0)})});
    eq.rhs = MetaTerm::mvar(0, {});
    b.th.term_eqs.push_back(std::move(eq));
  }
  return b.th;
}

Theory make_ulc() {
  TheoryBuilder b;
  b.th.name = "ulc";
  std::size_t D = b.type_op("D", 0);
  std::size_t Fun = b.type_op("Fun", 2);
  // The quotient identifies Fun(D, D) with D; oriented so that the base
  // constant is the normal form.
  TypeEquation eq;
  eq.meta_count = 0;
  eq.lhs = TypeExpr::app(Fun, {TypeExpr::app(D), TypeExpr::app(D)});
  eq.rhs = TypeExpr::app(D);
  eq.orientation = Orientation::LeftToRight;
  b.th.type_eqs.push_back(std::move(eq));
  return b.th;
}

Theory make_comp_lc() {
  Theory th = make_stlc(1);
  th.name = "comp-lc";
  TheoryBuilder b{std::move(th)};
  std::size_t T = b.type_op("T", 1);
  auto monad = [&](TypeExpr a) { return TypeExpr::app(T, {std::move(a)}); };

  std::size_t ret =
      b.term_op("return", SecondOrderArity{1, {Premiss{{}, M(0)}}, {}, monad(M(0))});
  std::size_t bind = b.term_op(
      "bind",
      SecondOrderArity{
          2, {Premiss{{}, monad(M(0))}, Premiss{{M(0)}, monad(M(1))}}, {}, monad(M(1))});

  // bind(return(a), (z) f[z]) == f[a]
  {
    TermEquation eq;
    eq.name = "bind_beta";
    eq.meta_count = 2;
    eq.placeholders = {Premiss{{}, M(0)}, Premiss{{M(0)}, monad(M(1))}};
    eq.placeholder_names = {"a", "f"};
    eq.result = monad(M(1));
    eq.lhs = MetaTerm::make_op(
        bind, {M(0), M(1)}, {},
        {MetaTerm::make_op(ret, {M(0)}, {}, {MetaTerm::mvar(0, {})}),
         MetaTerm::mvar(1, {MetaTerm::var(0)})});
    eq.rhs = MetaTerm::mvar(1, {MetaTerm::mvar(0, {})});
    b.th.term_eqs.push_back(std::move(eq));
  }
  // bind(m, (x) return(x)) == m
  {
    TermEquation eq;
    eq.name = "bind_eta";
    eq.meta_count = 1;
    eq.placeholders = {Premiss{{}, monad(M(0))}};
    eq.placeholder_names = {"m"};
    eq.result = monad(M(0));
    eq.lhs = MetaTerm::make_op(
        bind, {M(0), M(0)}, {},
        {MetaTerm::mvar(0, {}),
         MetaTerm::make_op(ret, {M(0)}, {}, {MetaTerm::var(0)})});
    eq.rhs = MetaTerm::mvar(0, {});
    b.th.term_eqs.push_back(std::move(eq));
  }
  // bind(m, (a) bind(f[a], (b) g[b])) == bind(bind(m, (a) f[a]), (b) g[b])
  {
    TermEquation eq;
    eq.name = "bind_assoc";
    eq.meta_count = 3;
    eq.placeholders = {Premiss{{}, monad(M(0))}, Premiss{{M(0)}, monad(M(1))},
                       Premiss{{M(1)}, monad(M(2))}};
    eq.placeholder_names = {"m", "f", "g"};
    eq.result = monad(M(2));
    eq.lhs = MetaTerm::make_op(
        bind, {M(0), M(2)}, {},
        {MetaTerm::mvar(0, {}),
         MetaTerm::make_op(bind, {M(1), M(2)}, {},
                           {MetaTerm::mvar(1, {MetaTerm::var(0)}),
                            MetaTerm::mvar(2, {MetaTerm::var(0)})})});
    eq.rhs = MetaTerm::make_op(
        bind, {M(1), M(2)}, {},
        {MetaTerm::make_op(bind, {M(0), M(1)}, {},
                           {MetaTerm::mvar(0, {}),
                            MetaTerm::mvar(1, {MetaTerm::var(0)})}),
         MetaTerm::mvar(2, {MetaTerm::var(0)})});
    b.th.term_eqs.push_back(std::move(eq));
  }
  return b.th;
}

Theory make_monoid() {
  TheoryBuilder b;
  b.th.name = "monoid";
  std::size_t o = b.type_op("o", 0);
  auto sort = TypeExpr::app(o);
  std::size_t e = b.term_op("e", SecondOrderArity{0, {}, {}, sort});
  std::size_t mul = b.term_op(
      "mul", SecondOrderArity{0, {Premiss{{}, sort}, Premiss{{}, sort}}, {}, sort});

  auto ph = [&](std::size_t i) { return MetaTerm::mvar(i, {}); };
  auto app2 = [&](MetaTerm x, MetaTerm y) {
    return MetaTerm::make_op(mul, {}, {}, {std::move(x), std::move(y)});
  };
  auto unit = MetaTerm::make_op(e, {}, {}, {});

  {
    TermEquation eq;
    eq.name = "assoc";
    eq.placeholders = {Premiss{{}, sort}, Premiss{{}, sort}, Premiss{{}, sort}};
    eq.placeholder_names = {"x", "y", "z"};
    eq.result = sort;
    eq.lhs = app2(app2(ph(0), ph(1)), ph(2));
    eq.rhs = app2(ph(0), app2(ph(1), ph(2)));
    b.th.term_eqs.push_back(std::move(eq));
  }
  {
    TermEquation eq;
    eq.name = "unit_left";
    eq.placeholders = {Premiss{{}, sort}};
    eq.placeholder_names = {"x"};
    eq.result = sort;
    eq.lhs = app2(unit, ph(0));
    eq.rhs = ph(0);
    b.th.term_eqs.push_back(std::move(eq));
  }
  {
    TermEquation eq;
    eq.name = "unit_right";
    eq.placeholders = {Premiss{{}, sort}};
    eq.placeholder_names = {"x"};
    eq.result = sort;
    eq.lhs = app2(ph(0), unit);
    eq.rhs = ph(0);
    b.th.term_eqs.push_back(std::move(eq));
  }
  return b.th;
}

}  // namespace

Theory builtin(std::string_view name) {
  Theory th;
  if (name == "stlc") {
    th = make_stlc(1);
  } else if (name.rfind("stlc(", 0) == 0 && name.back() == ')') {
    std::string digits(name.substr(5, name.size() - 6));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      fail(Code::UnknownBuiltin, "unknown builtin theory: " + std::string(name));
    th = make_stlc(static_cast<std::size_t>(std::stoul(digits)));
  } else if (name == "ulc") {
    th = make_ulc();
  } else if (name == "comp-lc") {
    th = make_comp_lc();
  } else if (name == "monoid") {
    th = make_monoid();
  } else {
    fail(Code::UnknownBuiltin, "unknown builtin theory: " + std::string(name));
  }
  Result<Theory> validated = validate(th);
  if (!validated.ok())
    throw Error(validated.diagnostics().front());  // would be a kernel bug
  return validated.value();
}

std::vector<std::string> builtin_names() {
  return {"stlc", "stlc(n)", "ulc", "comp-lc", "monoid"};
}

}  // namespace stt
