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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stt/clone.hpp"
#include "stt/dsl.hpp"
#include "stt/equations.hpp"
#include "stt/finmodel.hpp"
#include "stt/gen.hpp"
#include "stt/laws.hpp"
#include "stt/polysem.hpp"
#include "stt/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct CommonArgs {
  std::string builtin;
  std::string theory_file;
  std::string format = "human";
  std::size_t budget = 0;  // 0 = default / STT_BUDGET
};

std::size_t effective_budget(const CommonArgs& args) {
  if (args.budget > 0) return args.budget;
  if (const char* env = std::getenv("STT_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return stt::kDefaultBudget;
}

bool json_mode(const CommonArgs& args) { return args.format == "json"; }

void add_common(CLI::App* cmd, CommonArgs& args) {
  auto* builtin =
      cmd->add_option("--builtin", args.builtin, "use a bundled theory");
  auto* file = cmd->add_option("--theory", args.theory_file, "load a .stt file");
  builtin->excludes(file);
  cmd->add_option("--format", args.format, "output format: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--budget", args.budget, "rewrite step budget");
}

void print_diags(const std::vector<stt::Diagnostic>& diags, const CommonArgs& args) {
  if (json_mode(args)) {
    std::cerr << stt::diagnostics_to_json(diags).dump(2) << "\n";
    return;
  }
  for (const stt::Diagnostic& d : diags) std::cerr << d.render() << "\n";
}

stt::Theory load_theory(const CommonArgs& args) {
  if (!args.builtin.empty()) return stt::builtin(args.builtin);
  if (args.theory_file.empty())
    throw stt::Error(stt::Code::SyntaxError,
                     "one of --builtin or --theory is required");
  std::ifstream in(args.theory_file);
  if (!in)
    throw stt::Error(stt::Code::SyntaxError,
                     "cannot open theory file " + args.theory_file);
  std::stringstream buf;
  buf << in.rdbuf();
  stt::Result<stt::Theory> parsed = stt::parse_theory(buf.str(), args.theory_file);
  if (!parsed.ok()) throw stt::Error(parsed.diagnostics().front());
  stt::Result<stt::Theory> validated = stt::validate(parsed.value());
  if (!validated.ok()) throw stt::Error(validated.diagnostics().front());
  return validated.value();
}

stt::NamedContext parse_context_or_throw(const stt::Theory& th,
                                         const std::string& text) {
  stt::Result<stt::NamedContext> ctx = stt::parse_context(th, text);
  if (!ctx.ok()) throw stt::Error(ctx.diagnostics().front());
  return ctx.value();
}

stt::ExplicitTerm parse_term_or_throw(const stt::Theory& th,
                                      const stt::NamedContext& ctx,
                                      const std::string& text) {
  stt::Result<stt::ExplicitTerm> t = stt::parse_term(th, ctx, text);
  if (!t.ok()) throw stt::Error(t.diagnostics().front());
  return t.value();
}

int exit_code_for(const stt::Error& e) {
  switch (e.code()) {
    case stt::Code::BudgetExhausted:
      return kExitBudget;
    case stt::Code::SyntaxError:
    case stt::Code::UnknownIdentifier:
    case stt::Code::UnknownBuiltin:
    case stt::Code::UnknownTypeOp:
    case stt::Code::UnknownTermOp:
    case stt::Code::ArityMismatch:
    case stt::Code::MetaIndexOutOfRange:
    case stt::Code::DuplicateName:
    case stt::Code::IllTypedEquationSide:
    case stt::Code::NonPatternLhs:
      return kExitBadInput;
    default:
      return kExitNotEqual;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stt: a kernel for simple type theories"};
  app.require_subcommand(1);

  CommonArgs args;

  // check
  auto* check_cmd = app.add_subcommand("check", "sort of a term in a context");
  std::string ctx_text, term_text, term2_text;
  add_common(check_cmd, args);
  check_cmd->add_option("--context", ctx_text, "context, e.g. \"x:A, y:B\"");
  check_cmd->add_option("--term", term_text, "term to check")->required();

  // normalize
  auto* norm_cmd = app.add_subcommand("normalize", "equational normal form");
  add_common(norm_cmd, args);
  norm_cmd->add_option("--context", ctx_text, "context");
  norm_cmd->add_option("--term", term_text, "term to normalize")->required();

  // eq
  auto* eq_cmd = app.add_subcommand("eq", "decide equality by rewriting");
  add_common(eq_cmd, args);
  eq_cmd->add_option("--context", ctx_text, "context");
  eq_cmd->add_option("--term", term_text, "first term")->required();
  eq_cmd->add_option("--term2", term2_text, "second term")->required();

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "hom-set of the classifying clone");
  std::string domain_text, codomain_text;
  std::size_t size_bound = 3;
  add_common(enum_cmd, args);
  enum_cmd->add_option("--domain", domain_text, "domain sorts, e.g. \"o,o\"");
  enum_cmd->add_option("--codomain", codomain_text, "codomain sort")->required();
  enum_cmd->add_option("--size", size_bound, "operator-count bound");

  // laws
  auto* laws_cmd = app.add_subcommand("laws", "run the property-law suites");
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::string suite_filter;
  add_common(laws_cmd, args);
  laws_cmd->add_option("--seed", seed, "random seed");
  laws_cmd->add_option("--samples", samples, "samples per law");
  laws_cmd->add_option("--suite", suite_filter, "run one suite only");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "polynomial-extension agreement");
  std::string op_name;
  add_common(oracle_cmd, args);
  oracle_cmd->add_option("--op", op_name, "term operator to test")->required();
  oracle_cmd->add_option("--context", ctx_text, "ambient context");
  oracle_cmd->add_option("--codomain", codomain_text,
                         "target sort (default: the operator's conclusion at "
                         "the first admissible instantiation)");
  oracle_cmd->add_option("--size", size_bound, "per-argument size bound");

  // interp
  auto* interp_cmd = app.add_subcommand("interp", "finite-model denotation table");
  std::size_t base_size = 2;
  add_common(interp_cmd, args);
  interp_cmd->add_option("--base-size", base_size, "cardinality of base types");
  interp_cmd->add_option("--context", ctx_text, "context");
  interp_cmd->add_option("--term", term_text, "term to interpret")->required();

  // show
  auto* show_cmd = app.add_subcommand("show", "print the theory");
  add_common(show_cmd, args);

  CLI11_PARSE(app, argc, argv);

  try {
    stt::Theory th = load_theory(args);
    std::size_t budget = effective_budget(args);

    if (check_cmd->parsed()) {
      stt::NamedContext ctx = parse_context_or_throw(th, ctx_text);
      stt::ExplicitTerm t = parse_term_or_throw(th, ctx, term_text);
      stt::Result<stt::TypeExpr> sort = stt::check_explicit(th, ctx.ctx, t);
      if (!sort.ok()) {
        print_diags(sort.diagnostics(), args);
        return kExitNotEqual;
      }
      if (json_mode(args))
        std::cout << nlohmann::json{{"sort", stt::type_to_json(th, sort.value())},
                                    {"text", stt::print_type(th, sort.value())}}
                         .dump(2)
                  << "\n";
      else
        std::cout << stt::print_type(th, sort.value()) << "\n";
      return kExitOk;
    }

    if (norm_cmd->parsed()) {
      stt::NamedContext ctx = parse_context_or_throw(th, ctx_text);
      stt::ExplicitTerm e = parse_term_or_throw(th, ctx, term_text);
      stt::Term t = stt::eliminate_subst(th, ctx.ctx, e);
      stt::Term nf = stt::normalize_term(th, ctx.ctx, t, budget);
      if (json_mode(args))
        std::cout << nlohmann::json{{"term", stt::term_to_json(th, nf)},
                                    {"text", stt::print_term(th, ctx.names, nf)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << stt::print_term(th, ctx.names, nf) << "\n";
      return kExitOk;
    }

    if (eq_cmd->parsed()) {
      stt::NamedContext ctx = parse_context_or_throw(th, ctx_text);
      stt::Term a = stt::eliminate_subst(th, ctx.ctx,
                                         parse_term_or_throw(th, ctx, term_text));
      stt::Term b = stt::eliminate_subst(th, ctx.ctx,
                                         parse_term_or_throw(th, ctx, term2_text));
      stt::TypeExpr sa = stt::sort_of(th, ctx.ctx, a);
      stt::TypeExpr sb = stt::sort_of(th, ctx.ctx, b);
      if (!(sa == sb)) {
        std::cerr << "terms have different sorts: " << stt::print_type(th, sa)
                  << " vs " << stt::print_type(th, sb) << "\n";
        return kExitNotEqual;
      }
      stt::Verdict v = stt::term_equal(th, ctx.ctx, a, b, budget);
      bool equal = v == stt::Verdict::Equal;
      if (json_mode(args))
        std::cout << nlohmann::json{{"verdict",
                                     equal ? "Equal" : "NotProvedEqual"}}
                         .dump(2)
                  << "\n";
      else
        std::cout << (equal ? "Equal" : "NotProvedEqual") << "\n";
      return equal ? kExitOk : kExitNotEqual;
    }

    if (enum_cmd->parsed()) {
      stt::Context domain;
      if (!domain_text.empty()) {
        // a bare comma-separated list of sorts
        std::stringstream ss(domain_text);
        std::string one;
        std::size_t n = 0;
        std::string ctx_decl;
        while (std::getline(ss, one, ',')) {
          if (n) ctx_decl += ", ";
          ctx_decl += "x" + std::to_string(n++) + ":" + one;
        }
        domain = parse_context_or_throw(th, ctx_decl).ctx;
      }
      // the codomain is a type; reuse the context parser for it
      stt::NamedContext cod_ctx =
          parse_context_or_throw(th, "it:" + codomain_text);
      stt::TypeExpr codomain = cod_ctx.ctx[0];
      stt::HomSet homs = stt::hom(th, domain, codomain, size_bound, budget);
      if (json_mode(args)) {
        std::cout << stt::homset_to_json(th, homs).dump(2) << "\n";
      } else {
        for (const stt::CloneHom& h : homs.homs)
          std::cout << stt::print_term(th, stt::default_names(domain),
                                       h.representative)
                    << "\n";
        std::cout << "count: " << homs.homs.size()
                  << (homs.count_is_upper_bound
                          ? " (upper bound; distinctness is not certified)"
                          : "")
                  << "\n";
      }
      return kExitOk;
    }

    if (laws_cmd->parsed()) {
      stt::LawOptions opts{seed, samples, budget};
      std::vector<stt::LawResult> results;
      if (suite_filter.empty()) {
        results = stt::run_all_laws(th, opts);
      } else if (suite_filter == "context") {
        results = stt::context_law_suite(th, opts);
      } else if (suite_filter == "rename") {
        results = stt::rename_law_suite(th, opts);
      } else if (suite_filter == "substitution") {
        results = stt::substitution_law_suite(th, opts);
      } else if (suite_filter == "subst_lemma") {
        results = stt::subst_lemma_suite(th, opts);
      } else if (suite_filter == "satisfaction") {
        results = stt::satisfaction_suite(th, opts);
      } else if (suite_filter == "meta") {
        results = stt::meta_suite(th, opts);
      } else if (suite_filter == "clone") {
        results = stt::clone_law_suite(th, opts);
      } else if (suite_filter == "dsl") {
        results = stt::dsl_roundtrip_suite(th, opts);
      } else if (suite_filter == "finmodel") {
        results = stt::finmodel_suite(th, opts, 2);
      } else {
        std::cerr << "unknown suite: " << suite_filter << "\n";
        return kExitBadInput;
      }
      if (json_mode(args)) {
        std::cout << stt::law_results_to_json(results).dump(2) << "\n";
      } else {
        for (const stt::LawResult& r : results) {
          std::cout << (r.ok() ? "ok   " : "FAIL ") << r.suite << "." << r.law
                    << " " << r.passed << "/" << r.total << "\n";
          for (const std::string& f : r.failures)
            std::cout << "     reproducer: " << f << "\n";
        }
      }
      return stt::all_passed(results) ? kExitOk : kExitNotEqual;
    }

    if (oracle_cmd->parsed()) {
      auto op = th.find_term_op(op_name);
      if (!op) {
        std::cerr << "unknown term operator: " << op_name << "\n";
        return kExitBadInput;
      }
      stt::Context ctx = ctx_text.empty()
                             ? stt::Context{}
                             : parse_context_or_throw(th, ctx_text).ctx;
      stt::TypeExpr target;
      if (!codomain_text.empty()) {
        target = parse_context_or_throw(th, "it:" + codomain_text).ctx[0];
      } else {
        // default: instantiate every metavariable with the first base sort
        std::vector<stt::TypeExpr> bases = th.base_sorts();
        if (bases.empty()) {
          std::cerr << "theory has no base sorts; pass --codomain\n";
          return kExitBadInput;
        }
        const stt::SecondOrderArity& ar = th.term_ops[*op].arity;
        std::vector<stt::TypeExpr> inst(ar.meta_count, bases.front());
        target = stt::ty_normalize(th, stt::ty_subst(ar.result, inst));
      }
      stt::OracleReport report = stt::oracle_agreement(th, *op, ctx, target, size_bound);
      if (json_mode(args)) {
        std::cout << stt::oracle_report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << "operator:        " << op_name << "\n"
                  << "target sort:     " << stt::print_type(th, target) << "\n"
                  << "elements:        " << report.elements << "\n"
                  << "fiber elements:  " << report.fiber_elements << "\n"
                  << "accepted nodes:  " << report.accepted_nodes << "\n"
                  << "agrees:          " << (report.agrees ? "yes" : "no") << "\n";
        for (const std::string& m : report.mismatches)
          std::cout << "mismatch: " << m << "\n";
      }
      return report.agrees ? kExitOk : kExitNotEqual;
    }

    if (interp_cmd->parsed()) {
      std::map<std::string, std::size_t> sizes;
      for (const stt::TypeOp& op : th.type_ops)
        if (op.arity == 0 && op.name != "Unit") sizes[op.name] = base_size;
      stt::FinModel model(th, sizes);
      stt::NamedContext ctx = parse_context_or_throw(th, ctx_text);
      stt::Term t = stt::eliminate_subst(
          th, ctx.ctx, parse_term_or_throw(th, ctx, term_text));
      stt::TypeExpr sort = stt::sort_of(th, ctx.ctx, t);
      nlohmann::json rows = nlohmann::json::array();
      for (const stt::Environment& env : model.all_envs(ctx.ctx)) {
        std::size_t value = model.interp_term(ctx.ctx, t, env);
        if (json_mode(args)) {
          rows.push_back(nlohmann::json{{"env", env}, {"value", value}});
        } else {
          std::cout << "[";
          for (std::size_t i = 0; i < env.size(); ++i)
            std::cout << (i ? " " : "") << env[i];
          std::cout << "] -> " << value << "\n";
        }
      }
      if (json_mode(args))
        std::cout << nlohmann::json{{"sort", stt::print_type(th, sort)},
                                    {"carrier", model.card(sort)},
                                    {"table", std::move(rows)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "sort: " << stt::print_type(th, sort)
                  << " (carrier size " << model.card(sort) << ")\n";
      return kExitOk;
    }

    if (show_cmd->parsed()) {
      if (json_mode(args))
        std::cout << stt::theory_to_json(th).dump(2) << "\n";
      else
        std::cout << stt::print_theory(th);
      return kExitOk;
    }
  } catch (const stt::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitOk;
}
