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

#include "stt/polysem.hpp"

#include <algorithm>
#include <deque>

#include "stt/dsl.hpp"

namespace stt {

const TermTable::Cell* TermTable::find_cell(const TypeExpr& sort,
                                            const Context& ctx) const {
  for (const Cell& c : cells)
    if (c.sort == sort && c.ctx == ctx) return &c;
  return nullptr;
}

void TermTable::set_cell(const TypeExpr& sort, const Context& ctx,
                         std::size_t count) {
  for (Cell& c : cells)
    if (c.sort == sort && c.ctx == ctx) {
      c.count = count;
      return;
    }
  cells.push_back(Cell{sort, ctx, count});
}

namespace {

bool in_universe(const std::vector<TypeExpr>& universe, const TypeExpr& t) {
  return std::find(universe.begin(), universe.end(), t) != universe.end();
}

void for_each_inst(const std::vector<TypeExpr>& universe, std::size_t count,
                   const std::function<void(const std::vector<TypeExpr>&)>& fn) {
  std::vector<TypeExpr> inst(count);
  auto rec = [&](std::size_t i, auto&& self) -> void {
    if (i == count) {
      fn(inst);
      return;
    }
    for (const TypeExpr& s : universe) {
      inst[i] = s;
      self(i + 1, self);
    }
  };
  if (count == 0)
    fn(inst);
  else if (!universe.empty())
    rec(0, rec);
}

}  // namespace

std::vector<TypeExpr> polysem_universe(const Theory& theory, const Context& ctx,
                                       const TypeExpr& target) {
  std::vector<TypeExpr> base;
  auto add = [&](const TypeExpr& t) {
    TypeExpr n = ty_normalize(theory, t);
    if (!in_universe(base, n)) base.push_back(n);
  };
  for (const TypeExpr& s : ctx.sorts) add(s);
  add(target);
  for (const TypeExpr& b : theory.base_sorts()) add(b);

  std::vector<TypeExpr> out = base;
  for (std::size_t op = 0; op < theory.type_ops.size(); ++op) {
    std::vector<TypeExpr> args(theory.type_ops[op].arity);
    auto rec = [&](std::size_t i, auto&& self) -> void {
      if (i == args.size()) {
        TypeExpr t = ty_normalize(theory, TypeExpr::app(op, args));
        if (!in_universe(out, t)) out.push_back(t);
        return;
      }
      for (const TypeExpr& s : base) {
        args[i] = s;
        self(i + 1, self);
      }
    };
    if (args.empty() || !base.empty()) rec(0, rec);
  }
  std::sort(out.begin(), out.end(),
            [](const TypeExpr& a, const TypeExpr& b) { return compare(a, b) < 0; });
  return out;
}

std::vector<PolyElement> poly_extension(const Theory& theory, std::size_t op,
                                        const TermTable& table,
                                        const Context& ctx) {
  if (op >= theory.term_ops.size())
    fail(Code::UnknownTermOp, "term operator index out of range");
  const SecondOrderArity& ar = theory.term_ops[op].arity;
  std::vector<PolyElement> out;

  for_each_inst(table.sort_universe, ar.meta_count, [&](const std::vector<TypeExpr>&
                                                            inst) {
    // premiss lookups must stay inside the universe; instantiations that
    // escape lie outside this finite truncation of the coproduct
    std::vector<TypeExpr> premiss_sorts(ar.premisses.size());
    std::vector<Context> premiss_ctxs(ar.premisses.size());
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      premiss_sorts[i] = ty_normalize(theory, ty_subst(ar.premisses[i].result, inst));
      if (!in_universe(table.sort_universe, premiss_sorts[i])) return;
      Context inner = ctx;
      for (const TypeExpr& b : ar.premisses[i].binders) {
        TypeExpr bs = ty_normalize(theory, ty_subst(b, inst));
        if (!in_universe(table.sort_universe, bs)) return;
        inner.sorts.push_back(bs);
      }
      premiss_ctxs[i] = std::move(inner);
    }
    // the V^k factor: choices of ambient variables at the parameter sorts
    std::vector<std::vector<std::size_t>> param_choices{{}};
    for (const TypeExpr& p_raw : ar.parameters) {
      TypeExpr p = ty_normalize(theory, ty_subst(p_raw, inst));
      std::vector<std::size_t> positions;
      for (std::size_t pos = 0; pos < ctx.size(); ++pos)
        if (ctx[pos] == p) positions.push_back(pos);
      std::vector<std::vector<std::size_t>> next;
      for (const auto& prefix : param_choices)
        for (std::size_t pos : positions) {
          auto copy = prefix;
          copy.push_back(pos);
          next.push_back(std::move(copy));
        }
      param_choices = std::move(next);
      if (param_choices.empty()) return;
    }
    // product over premisses of the table entries
    std::vector<std::size_t> counts(ar.premisses.size());
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      const TermTable::Cell* cell = table.find_cell(premiss_sorts[i], premiss_ctxs[i]);
      if (!cell)
        fail(Code::SortOutsideUniverse,
             "table has no entry for an in-universe premiss sort of operator " +
                 theory.term_ops[op].name);
      counts[i] = cell->count;
      if (counts[i] == 0) return;  // product with an empty factor
    }
    std::vector<std::size_t> pick(ar.premisses.size(), 0);
    for (;;) {
      for (const auto& params : param_choices)
        out.push_back(PolyElement{inst, params, pick});
      std::size_t i = ar.premisses.size();
      for (;;) {
        if (i == 0) return;
        --i;
        if (++pick[i] < counts[i]) break;
        pick[i] = 0;
      }
    }
  });
  return out;
}

OracleReport oracle_agreement(const Theory& theory, std::size_t op,
                              const Context& ctx, const TypeExpr& target,
                              std::size_t size_bound) {
  const SecondOrderArity& ar = theory.term_ops[op].arity;
  TypeExpr want = ty_normalize(theory, target);

  TermTable table;
  table.sort_universe = polysem_universe(theory, ctx, want);

  // Token source: the enumerated well-sorted terms per required cell.
  struct CellTerms {
    TypeExpr sort;
    Context ctx;
    std::vector<Term> terms;
  };
  std::deque<CellTerms> cell_terms;  // reference stability under growth
  auto terms_at = [&](const TypeExpr& sort, const Context& c) -> const std::vector<Term>& {
    for (const CellTerms& ct : cell_terms)
      if (ct.sort == sort && ct.ctx == c) return ct.terms;
    cell_terms.push_back(CellTerms{sort, c, enumerate(theory, c, sort, size_bound)});
    table.set_cell(sort, c, cell_terms.back().terms.size());
    return cell_terms.back().terms;
  };

  // Fill every in-universe cell the polynomial can request.
  for_each_inst(table.sort_universe, ar.meta_count,
                [&](const std::vector<TypeExpr>& inst) {
                  for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
                    TypeExpr ps =
                        ty_normalize(theory, ty_subst(ar.premisses[i].result, inst));
                    if (!in_universe(table.sort_universe, ps)) return;
                    Context inner = ctx;
                    bool ok = true;
                    for (const TypeExpr& b : ar.premisses[i].binders) {
                      TypeExpr bs = ty_normalize(theory, ty_subst(b, inst));
                      if (!in_universe(table.sort_universe, bs)) {
                        ok = false;
                        break;
                      }
                      inner.sorts.push_back(bs);
                    }
                    if (!ok) return;
                    terms_at(ps, inner);
                  }
                });

  OracleReport report;
  std::vector<PolyElement> elements = poly_extension(theory, op, table, ctx);
  report.elements = elements.size();

  for (const PolyElement& el : elements) {
    // Reassemble the premiss cells this element draws from.
    std::vector<Term> args;
    args.reserve(ar.premisses.size());
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      TypeExpr ps = ty_normalize(theory, ty_subst(ar.premisses[i].result, el.inst));
      Context inner = ctx;
      for (const TypeExpr& b : ar.premisses[i].binders)
        inner.sorts.push_back(ty_normalize(theory, ty_subst(b, el.inst)));
      args.push_back(terms_at(ps, inner)[el.tokens[i]]);
    }
    Term node = Term::make_op(op, el.inst, el.params, std::move(args));
    TypeExpr predicted = ty_normalize(theory, ty_subst(ar.result, el.inst));
    Result<TypeExpr> got = check(theory, ctx, node);
    if (!got.ok()) {
      report.mismatches.push_back(
          "element rejected by check: " +
          print_term(theory, default_names(ctx), node) + " (" +
          got.diagnostics().front().message + ")");
      continue;
    }
    if (!(got.value() == predicted)) {
      report.mismatches.push_back(
          "element accepted at sort " + print_type(theory, got.value()) +
          ", polynomial predicts " + print_type(theory, predicted) + ": " +
          print_term(theory, default_names(ctx), node));
      continue;
    }
    if (predicted == want) {
      ++report.fiber_elements;
      ++report.accepted_nodes;
    }
  }

  // Converse direction: tuples drawn from the wrong cells must be rejected.
  // For every instantiation in the target fiber, perturb each premiss with a
  // representative of every other sort available in the same context.
  for_each_inst(table.sort_universe, ar.meta_count, [&](const std::vector<TypeExpr>&
                                                            inst) {
    if (!(ty_normalize(theory, ty_subst(ar.result, inst)) == want)) return;
    std::vector<TypeExpr> premiss_sorts(ar.premisses.size());
    std::vector<Context> premiss_ctxs(ar.premisses.size());
    std::vector<Term> base_args;
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      premiss_sorts[i] = ty_normalize(theory, ty_subst(ar.premisses[i].result, inst));
      if (!in_universe(table.sort_universe, premiss_sorts[i])) return;
      Context inner = ctx;
      bool ok = true;
      for (const TypeExpr& b : ar.premisses[i].binders) {
        TypeExpr bs = ty_normalize(theory, ty_subst(b, inst));
        if (!in_universe(table.sort_universe, bs)) {
          ok = false;
          break;
        }
        inner.sorts.push_back(bs);
      }
      if (!ok) return;
      premiss_ctxs[i] = inner;
      const std::vector<Term>& cell = terms_at(premiss_sorts[i], inner);
      if (cell.empty()) return;
      base_args.push_back(cell.front());
    }
    std::vector<std::vector<std::size_t>> params{{}};
    for (const TypeExpr& p_raw : ar.parameters) {
      TypeExpr p = ty_normalize(theory, ty_subst(p_raw, inst));
      std::vector<std::size_t> positions;
      for (std::size_t pos = 0; pos < ctx.size(); ++pos)
        if (ctx[pos] == p) positions.push_back(pos);
      if (positions.empty()) return;
      for (auto& prefix : params) prefix.push_back(positions.front());
    }
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      for (const TypeExpr& alt : table.sort_universe) {
        if (alt == premiss_sorts[i]) continue;
        const std::vector<Term>& cell = terms_at(alt, premiss_ctxs[i]);
        if (cell.empty()) continue;
        std::vector<Term> args = base_args;
        args[i] = cell.front();
        Term node = Term::make_op(op, inst, params.front(), std::move(args));
        Result<TypeExpr> got = check(theory, ctx, node);
        if (got.ok() && got.value() == want)
          report.mismatches.push_back(
              "check accepted a tuple outside the polynomial: " +
              print_term(theory, default_names(ctx), node));
      }
    }
  });

  report.agrees = report.mismatches.empty();
  return report;
}

}  // namespace stt
