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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "stt/term.hpp"

using namespace stt;
using stt_test::ctx_of;
using stt_test::term_of;

TEST_CASE("sort checking the simply-typed constants") {
  Theory stlc = builtin("stlc");
  NamedContext empty = ctx_of(stlc, "");

  Term u = term_of(stlc, empty, "u()");
  CHECK(print_type(stlc, sort_of(stlc, empty.ctx, u)) == "Unit");

  Term pair = term_of(stlc, empty, "pair<Unit,Unit>(u(), u())");
  CHECK(print_type(stlc, sort_of(stlc, empty.ctx, pair)) == "Prod(Unit,Unit)");

  Term id_abs = term_of(stlc, empty, "abs<Unit,Unit>((x:Unit. x))");
  CHECK(print_type(stlc, sort_of(stlc, empty.ctx, id_abs)) == "Fun(Unit,Unit)");

  Term applied = term_of(stlc, empty, "app<Unit,Unit>(abs<Unit,Unit>((x:Unit. x)), u())");
  CHECK(print_type(stlc, sort_of(stlc, empty.ctx, applied)) == "Unit");
}

TEST_CASE("sort checking failures carry diagnostics") {
  Theory stlc = builtin("stlc");
  Context empty;
  Result<TypeExpr> unbound = check(stlc, empty, Term::var(0));
  REQUIRE_FALSE(unbound.ok());
  CHECK(unbound.diagnostics().front().code == Code::UnboundVariable);

  // app of u() to u(): first premiss wants a function
  std::size_t app_op = *stlc.find_term_op("app");
  std::size_t u_op = *stlc.find_term_op("u");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  Term bad = Term::make_op(app_op, {unit, unit}, {},
                           {Term::make_op(u_op, {}, {}, {}),
                            Term::make_op(u_op, {}, {}, {})});
  Result<TypeExpr> mismatch = check(stlc, empty, bad);
  REQUIRE_FALSE(mismatch.ok());
  CHECK(mismatch.diagnostics().front().code == Code::SortMismatch);
}

TEST_CASE("parameterised operators check their distinguished variables") {
  Theory boxes = stt_test::param_theory();
  NamedContext ctx = ctx_of(boxes, "a:A, b:B");
  Term ok = term_of(boxes, ctx, "box[a](mk())");
  CHECK(print_type(boxes, sort_of(boxes, ctx.ctx, ok)) == "B");

  // a parameter slot pointing at a variable of the wrong sort
  std::size_t box = *boxes.find_term_op("box");
  std::size_t mk = *boxes.find_term_op("mk");
  Term bad = Term::make_op(box, {}, {0 /* b : B */},
                           {Term::make_op(mk, {}, {}, {})});
  Result<TypeExpr> r = check(boxes, ctx.ctx, bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics().front().code == Code::ParamSortMismatch);
}

TEST_CASE("renaming acts naturally on terms") {
  Theory stlc = builtin("stlc");
  NamedContext ctx = ctx_of(stlc, "x:o, f:Fun(o,o)");
  Term t = term_of(stlc, ctx, "app<o,o>(f, x)");

  Renaming id = rename_id(ctx.ctx);
  CHECK(rename(stlc, t, id) == t);

  Renaming w = weaken(stlc, ctx.ctx, TypeExpr::app(*stlc.find_type_op("Unit")));
  Term moved = rename(stlc, t, w);
  CHECK(sort_of(stlc, w.target, moved) == sort_of(stlc, ctx.ctx, t));

  Renaming ex = exchange(stlc, ctx.ctx, 0);
  Term swapped = rename(stlc, t, ex);
  CHECK(sort_of(stlc, ex.target, swapped) == sort_of(stlc, ctx.ctx, t));
  // positions swapped: the function is now position 0
  NamedContext swapped_ctx = ctx_of(stlc, "f:Fun(o,o), x:o");
  CHECK(swapped == term_of(stlc, swapped_ctx, "app<o,o>(f, x)"));
}

TEST_CASE("enumeration lists exactly the small simply-typed terms") {
  Theory stlc = builtin("stlc");
  Context empty;
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  CHECK(enumerate(stlc, empty, unit, 0).empty());
  std::vector<Term> one = enumerate(stlc, empty, unit, 1);
  REQUIRE(one.size() == 1);
  CHECK(print_term(stlc, {}, one[0]) == "u()");
}

TEST_CASE("enumeration starts with the variables in index order") {
  Theory monoid = builtin("monoid");
  NamedContext ctx = ctx_of(monoid, "x:o, y:o");
  TypeExpr o = TypeExpr::app(*monoid.find_type_op("o"));
  std::vector<Term> vars = enumerate(monoid, ctx.ctx, o, 0);
  REQUIRE(vars.size() == 2);
  CHECK(vars[0] == Term::var(0));
  CHECK(vars[1] == Term::var(1));
}

namespace {

// Brute-force oracle: build every tree over {e, mul, variables} with at most
// `bound` operator nodes and keep the ones check() accepts at sort o.
std::vector<Term> monoid_brute_force(const Theory& monoid, const Context& ctx,
                                     std::size_t bound) {
  std::size_t e_op = *monoid.find_term_op("e");
  std::size_t mul_op = *monoid.find_term_op("mul");
  std::vector<std::vector<Term>> by_size(bound + 1);
  for (std::size_t i = 0; i < ctx.size(); ++i) by_size[0].push_back(Term::var(i));
  for (std::size_t s = 1; s <= bound; ++s) {
    by_size[s].push_back(Term::make_op(e_op, {}, {}, {}));
    for (std::size_t l = 0; l + 1 <= s - 1; ++l)
      for (const Term& a : by_size[l])
        for (const Term& b : by_size[s - 1 - l])
          by_size[s].push_back(Term::make_op(mul_op, {}, {}, {a, b}));
  }
  std::vector<Term> all;
  for (const auto& level : by_size)
    for (const Term& t : level)
      if (check(monoid, ctx, t).ok()) all.push_back(t);
  return all;
}

}  // namespace

TEST_CASE("enumeration matches a brute-force generator for the monoid") {
  Theory monoid = builtin("monoid");
  NamedContext ctx = ctx_of(monoid, "x:o");
  TypeExpr o = TypeExpr::app(*monoid.find_type_op("o"));
  std::vector<Term> ours = enumerate(monoid, ctx.ctx, o, 2);
  std::vector<Term> brute = monoid_brute_force(monoid, ctx.ctx, 2);
  CHECK(ours.size() == brute.size());
  // same sets
  for (const Term& t : brute)
    CHECK(std::find(ours.begin(), ours.end(), t) != ours.end());
  // no duplicates
  for (std::size_t i = 0; i < ours.size(); ++i)
    for (std::size_t j = i + 1; j < ours.size(); ++j) CHECK_FALSE(ours[i] == ours[j]);
}

TEST_CASE("operators with unused metavariables are not enumerable") {
  Theory phantom = stt_test::theory_from(
      "theory phantom\n"
      "type o/0\n"
      "term ghost [A] : -> o\n");
  Context empty;
  TypeExpr o = TypeExpr::app(*phantom.find_type_op("o"));
  CHECK_THROWS_AS(enumerate(phantom, empty, o, 2), Error);
  try {
    enumerate(phantom, empty, o, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Code::NonEnumerableOperator);
  }
}

TEST_CASE("enumeration covers parameter slot choices") {
  Theory boxes = stt_test::param_theory();
  NamedContext ctx = ctx_of(boxes, "a1:A, a2:A");
  TypeExpr b = TypeExpr::app(*boxes.find_type_op("B"));
  std::vector<Term> terms = enumerate(boxes, ctx.ctx, b, 2);
  // box[a1](mk()), box[a2](mk()), box[a1](a_i)... plus wraps of size 2
  std::set<std::string> printed;
  for (const Term& t : terms) printed.insert(print_term(boxes, ctx.names, t));
  CHECK(printed.count("box[a1](a1)"));
  CHECK(printed.count("box[a2](a1)"));
  CHECK(printed.count("box[a1](mk())"));
  CHECK(printed.count("wrap(box[a2](a2))"));
}
