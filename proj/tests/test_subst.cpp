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

#include "helpers.hpp"
#include "stt/gen.hpp"
#include "stt/subst.hpp"

using namespace stt;
using stt_test::ctx_of;
using stt_test::term_of;

TEST_CASE("substituting for the sole variable") {
  Theory stlc = builtin("stlc");
  Context empty;
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  Term u = Term::make_op(*stlc.find_term_op("u"), {}, {}, {});
  CHECK(subst1(stlc, empty, Term::var(0), u) == u);
  (void)unit;
}

TEST_CASE("substitution after weakening is the identity") {
  Theory stlc = builtin("stlc");
  NamedContext ctx = ctx_of(stlc, "x:o, f:Fun(o,o)");
  Term t = term_of(stlc, ctx, "app<o,o>(f, x)");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  Term u = Term::make_op(*stlc.find_term_op("u"), {}, {}, {});
  Term weakened = rename(stlc, t, weaken(stlc, ctx.ctx, unit));
  CHECK(subst1(stlc, ctx.ctx, weakened, u) == t);
}

TEST_CASE("substitution preserves sorts on random instances") {
  Theory stlc = builtin("stlc");
  TermGen gen(stlc, 2024);
  int done = 0;
  for (int tries = 0; tries < 4000 && done < 500; ++tries) {
    Context ctx = gen.random_context(3);
    auto picked = gen.random_inhabited(ctx, 4);
    if (!picked) continue;
    Context inner = extend(stlc, ctx, picked->first);
    auto t = gen.random_term(inner, gen.random_sort(), 4);
    if (!t) continue;
    Term result = subst1(stlc, ctx, *t, picked->second);
    CHECK(sort_of(stlc, ctx, result) == sort_of(stlc, inner, *t));
    ++done;
  }
  CHECK(done == 500);
}

TEST_CASE("simultaneous substitution duplicates variables") {
  Theory monoid = builtin("monoid");
  NamedContext source = ctx_of(monoid, "x:o, y:o");
  NamedContext target = ctx_of(monoid, "z:o");
  Term t = term_of(monoid, source, "mul(x, y)");
  std::vector<Term> sigma{Term::var(0), Term::var(0)};
  Term got = msubst(monoid, source.ctx, target.ctx, sigma, t);
  CHECK(got == term_of(monoid, target, "mul(z, z)"));
}

TEST_CASE("identity substitution is the identity") {
  Theory monoid = builtin("monoid");
  NamedContext ctx = ctx_of(monoid, "x:o, y:o");
  Term t = term_of(monoid, ctx, "mul(mul(x, y), e())");
  CHECK(msubst(monoid, ctx.ctx, ctx.ctx, identity_subst(ctx.ctx), t) == t);
}

TEST_CASE("substitution refuses to fill parameter slots with non-variables") {
  Theory boxes = stt_test::param_theory();
  NamedContext outer = ctx_of(boxes, "");
  Context with_a = extend(boxes, outer.ctx, TypeExpr::app(*boxes.find_type_op("A")));
  NamedContext inner{with_a, {"y"}};
  Term body = term_of(boxes, inner, "box[y](mk())");
  Term mk = Term::make_op(*boxes.find_term_op("mk"), {}, {}, {});
  CHECK_THROWS_AS(subst1(boxes, outer.ctx, body, mk), Error);
  try {
    subst1(boxes, outer.ctx, body, mk);
  } catch (const Error& e) {
    CHECK(e.code() == Code::ParamSubstitution);
  }
  // substituting a variable into the slot is fine via msubst
  NamedContext two = ctx_of(boxes, "z:A");
  Context src = with_a;
  std::vector<Term> sigma{Term::var(0)};
  Term moved = msubst(boxes, src, two.ctx, sigma, body);
  CHECK(print_term(boxes, two.names, moved) == "box[z](mk())");
}

TEST_CASE("explicit substitution checks and eliminates") {
  Theory stlc = builtin("stlc");
  NamedContext ctx = ctx_of(stlc, "");
  Result<ExplicitTerm> parsed = parse_term(stlc, ctx, "x[u()/x]");
  REQUIRE(parsed.ok());
  const ExplicitTerm& e = parsed.value();
  CHECK(e.is_subst());
  Result<TypeExpr> sort = check_explicit(stlc, ctx.ctx, e);
  REQUIRE(sort.ok());
  CHECK(print_type(stlc, sort.value()) == "Unit");
  Term pure = eliminate_subst(stlc, ctx.ctx, e);
  CHECK(print_term(stlc, {}, pure) == "u()");

  // a term with no substitution nodes eliminates to itself
  Term plain = term_of(stlc, ctx, "pair<Unit,Unit>(u(), u())");
  CHECK(eliminate_subst(stlc, ctx.ctx, ExplicitTerm::from_term(plain)) == plain);
}

TEST_CASE("elimination preserves sorts on random explicit terms") {
  Theory comp = builtin("comp-lc");
  TermGen gen(comp, 77);
  int done = 0;
  for (int tries = 0; tries < 4000 && done < 200; ++tries) {
    Context ctx = gen.random_context(2);
    TypeExpr sort = gen.random_sort();
    auto e = gen.random_explicit(ctx, sort, 5);
    if (!e) continue;
    Result<TypeExpr> before = check_explicit(comp, ctx, *e);
    REQUIRE(before.ok());
    Term pure = eliminate_subst(comp, ctx, *e);
    CHECK(sort_of(comp, ctx, pure) == before.value());
    ++done;
  }
  CHECK(done == 200);
}
