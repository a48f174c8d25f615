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

#include "stt/serialize.hpp"

#include "stt/dsl.hpp"

namespace stt {

using nlohmann::json;

json type_to_json(const Theory& theory, const TypeExpr& t) {
  if (t.is_meta()) return json{{"meta", t.meta_index()}};
  json args = json::array();
  for (const TypeExpr& a : t.args()) args.push_back(type_to_json(theory, a));
  return json{{"op", theory.type_ops[t.op()].name}, {"args", std::move(args)}};
}

json term_to_json(const Theory& theory, const Term& t) {
  if (t.is_var()) return json{{"var", t.var_index()}};
  const SecondOrderArity& ar = theory.term_ops[t.op()].arity;
  json inst = json::array();
  for (const TypeExpr& i : t.inst()) inst.push_back(type_to_json(theory, i));
  json args = json::array();
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    json binders = json::array();
    for (const TypeExpr& b : ar.premisses[i].binders)
      binders.push_back(type_to_json(theory, ty_subst(b, t.inst())));
    args.push_back(json{{"binders", std::move(binders)},
                        {"body", term_to_json(theory, t.args()[i])}});
  }
  return json{{"op", theory.term_ops[t.op()].name},
              {"inst", std::move(inst)},
              {"params", t.params()},
              {"args", std::move(args)}};
}

json explicit_to_json(const Theory& theory, const ExplicitTerm& t) {
  switch (t.kind()) {
    case ExplicitTerm::Kind::Var:
      return json{{"var", t.var_index()}};
    case ExplicitTerm::Kind::Subst:
      return json{{"subst",
                   json{{"body", explicit_to_json(theory, t.body())},
                        {"arg", explicit_to_json(theory, t.arg())}}}};
    case ExplicitTerm::Kind::Op: {
      const SecondOrderArity& ar = theory.term_ops[t.op()].arity;
      json inst = json::array();
      for (const TypeExpr& i : t.inst()) inst.push_back(type_to_json(theory, i));
      json args = json::array();
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        json binders = json::array();
        for (const TypeExpr& b : ar.premisses[i].binders)
          binders.push_back(type_to_json(theory, ty_subst(b, t.inst())));
        args.push_back(json{{"binders", std::move(binders)},
                            {"body", explicit_to_json(theory, t.args()[i])}});
      }
      return json{{"op", theory.term_ops[t.op()].name},
                  {"inst", std::move(inst)},
                  {"params", t.params()},
                  {"args", std::move(args)}};
    }
  }
  return json();
}

json context_to_json(const Theory& theory, const Context& ctx) {
  json out = json::array();
  for (const TypeExpr& s : ctx.sorts) out.push_back(type_to_json(theory, s));
  return out;
}

json theory_to_json(const Theory& theory) {
  json type_ops = json::array();
  for (const TypeOp& op : theory.type_ops)
    type_ops.push_back(json{{"name", op.name}, {"arity", op.arity}});
  json type_eqs = json::array();
  for (const TypeEquation& eq : theory.type_eqs)
    type_eqs.push_back(json{
        {"meta_count", eq.meta_count},
        {"lhs", type_to_json(theory, eq.lhs)},
        {"rhs", type_to_json(theory, eq.rhs)},
        {"oriented", eq.orientation == Orientation::LeftToRight}});
  json term_ops = json::array();
  for (const TermOp& op : theory.term_ops) {
    json premisses = json::array();
    for (const Premiss& pr : op.arity.premisses) {
      json binders = json::array();
      for (const TypeExpr& b : pr.binders) binders.push_back(type_to_json(theory, b));
      premisses.push_back(json{{"binders", std::move(binders)},
                               {"result", type_to_json(theory, pr.result)}});
    }
    json parameters = json::array();
    for (const TypeExpr& p : op.arity.parameters)
      parameters.push_back(type_to_json(theory, p));
    term_ops.push_back(json{{"name", op.name},
                            {"meta_count", op.arity.meta_count},
                            {"premisses", std::move(premisses)},
                            {"parameters", std::move(parameters)},
                            {"result", type_to_json(theory, op.arity.result)}});
  }
  json term_eqs = json::array();
  for (const TermEquation& eq : theory.term_eqs)
    term_eqs.push_back(json{
        {"name", eq.name},
        {"meta_count", eq.meta_count},
        {"placeholders", eq.placeholder_names},
        {"oriented", eq.orientation == Orientation::LeftToRight}});
  return json{{"name", theory.name},
              {"type_ops", std::move(type_ops)},
              {"type_eqs", std::move(type_eqs)},
              {"term_ops", std::move(term_ops)},
              {"term_eqs", std::move(term_eqs)}};
}

json law_results_to_json(const std::vector<LawResult>& results) {
  json out = json::array();
  for (const LawResult& r : results)
    out.push_back(json{{"suite", r.suite},
                       {"law", r.law},
                       {"passed", r.passed},
                       {"total", r.total},
                       {"ok", r.ok()},
                       {"failures", r.failures}});
  return out;
}

json homset_to_json(const Theory& theory, const HomSet& homs) {
  json reps = json::array();
  for (const CloneHom& h : homs.homs)
    reps.push_back(json{
        {"term", term_to_json(theory, h.representative)},
        {"text", print_term(theory, default_names(h.domain), h.representative)}});
  return json{{"count", homs.homs.size()},
              {"count_is_upper_bound", homs.count_is_upper_bound},
              {"representatives", std::move(reps)}};
}

json oracle_report_to_json(const OracleReport& report) {
  return json{{"agrees", report.agrees},
              {"elements", report.elements},
              {"fiber_elements", report.fiber_elements},
              {"accepted_nodes", report.accepted_nodes},
              {"mismatches", report.mismatches}};
}

json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const Diagnostic& d : diags) {
    json entry{{"code", code_name(d.code)}, {"message", d.message}};
    if (!d.where.empty()) entry["where"] = d.where;
    if (d.span)
      entry["span"] = json{{"file", d.span->file},
                           {"line", d.span->line},
                           {"col_begin", d.span->col_begin},
                           {"col_end", d.span->col_end}};
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace stt
