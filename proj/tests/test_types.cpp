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

#include <random>

#include "helpers.hpp"
#include "stt/types.hpp"

using namespace stt;

namespace {

// Independent rewriter for cross-checking ty_normalize: applies any oriented
// equation at any position, breadth-first, until a fixpoint.
TypeExpr exhaustive_normalize(const Theory& th, TypeExpr t) {
  auto match = [&](const TypeExpr& pat, const TypeExpr& sub, auto&& self,
                   std::vector<std::optional<TypeExpr>>& binding) -> bool {
    if (pat.is_meta()) {
      auto& slot = binding[pat.meta_index()];
      if (slot) return *slot == sub;
      slot = sub;
      return true;
    }
    if (sub.is_meta() || sub.op() != pat.op()) return false;
    for (std::size_t i = 0; i < pat.args().size(); ++i)
      if (!self(pat.args()[i], sub.args()[i], self, binding)) return false;
    return true;
  };
  std::function<TypeExpr(const TypeExpr&, const std::vector<std::optional<TypeExpr>>&)>
      inst = [&](const TypeExpr& pat,
                 const std::vector<std::optional<TypeExpr>>& binding) -> TypeExpr {
    if (pat.is_meta()) return *binding[pat.meta_index()];
    std::vector<TypeExpr> args;
    for (const TypeExpr& a : pat.args()) args.push_back(inst(a, binding));
    return TypeExpr::app(pat.op(), std::move(args));
  };
  std::function<std::optional<TypeExpr>(const TypeExpr&)> step =
      [&](const TypeExpr& e) -> std::optional<TypeExpr> {
    for (const TypeEquation& eq : th.type_eqs) {
      std::vector<std::optional<TypeExpr>> binding(eq.meta_count);
      if (match(eq.lhs, e, match, binding)) return inst(eq.rhs, binding);
    }
    if (e.is_meta()) return std::nullopt;
    for (std::size_t i = 0; i < e.args().size(); ++i) {
      if (auto r = step(e.args()[i])) {
        std::vector<TypeExpr> args = e.args();
        args[i] = *r;
        return TypeExpr::app(e.op(), std::move(args));
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < 10000; ++i) {
    auto next = step(t);
    if (!next) return t;
    t = *next;
  }
  FAIL("exhaustive rewriter did not terminate");
  return t;
}

TypeExpr random_type(std::mt19937_64& rng, const Theory& th, std::size_t metas,
                     int depth) {
  if (depth == 0 || (metas > 0 && rng() % 3 == 0))
    return metas > 0 ? TypeExpr::meta(rng() % metas)
                     : TypeExpr::app(0);  // first op is a base in our theories
  std::size_t op = rng() % th.type_ops.size();
  std::vector<TypeExpr> args;
  for (std::size_t i = 0; i < th.type_ops[op].arity; ++i)
    args.push_back(random_type(rng, th, metas, depth - 1));
  return TypeExpr::app(op, std::move(args));
}

}  // namespace

TEST_CASE("type substitution replaces metavariables homomorphically") {
  Theory stlc = builtin("stlc");
  std::size_t unit = *stlc.find_type_op("Unit");
  std::size_t prod = *stlc.find_type_op("Prod");
  TypeExpr a = TypeExpr::app(prod, {TypeExpr::meta(0), TypeExpr::meta(1)});
  TypeExpr u = TypeExpr::app(unit);
  CHECK(ty_subst(a, {u, u}) == TypeExpr::app(prod, {u, u}));

  Theory ulc = builtin("ulc");
  std::size_t d = *ulc.find_type_op("D");
  std::size_t fun = *ulc.find_type_op("Fun");
  TypeExpr fdd = TypeExpr::app(fun, {TypeExpr::app(d), TypeExpr::app(d)});
  CHECK(ty_subst(TypeExpr::meta(0), {fdd}) == fdd);

  CHECK_THROWS_WITH_AS(ty_subst(TypeExpr::meta(2), {u}), doctest::Contains("not covered"),
                       Error);
}

TEST_CASE("type substitution composes") {
  Theory stlc = builtin("stlc");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    TypeExpr a = random_type(rng, stlc, 3, 3);
    std::vector<TypeExpr> f, g;
    for (int j = 0; j < 3; ++j) f.push_back(random_type(rng, stlc, 2, 2));
    for (int j = 0; j < 2; ++j) g.push_back(random_type(rng, stlc, 0, 2));
    std::vector<TypeExpr> composed;
    for (const TypeExpr& x : f) composed.push_back(ty_subst(x, g));
    CHECK(ty_subst(ty_subst(a, f), g) == ty_subst(a, composed));
  }
}

TEST_CASE("identity instantiation is the identity") {
  Theory stlc = builtin("stlc");
  std::mt19937_64 rng(8);
  std::vector<TypeExpr> id{TypeExpr::meta(0), TypeExpr::meta(1), TypeExpr::meta(2)};
  for (int i = 0; i < 100; ++i) {
    TypeExpr a = random_type(rng, stlc, 3, 3);
    CHECK(ty_subst(a, id) == a);
  }
}

TEST_CASE("normalization collapses the unityped function sort") {
  Theory ulc = builtin("ulc");
  std::size_t d = *ulc.find_type_op("D");
  std::size_t fun = *ulc.find_type_op("Fun");
  TypeExpr D = TypeExpr::app(d);
  TypeExpr fdd = TypeExpr::app(fun, {D, D});
  CHECK(ty_normalize(ulc, fdd) == D);
  TypeExpr nested = TypeExpr::app(fun, {fdd, fdd});
  CHECK(ty_normalize(ulc, nested) == D);
  CHECK(ty_normalize(ulc, nested) == exhaustive_normalize(ulc, nested));
  CHECK(ty_equal(ulc, D, fdd));
}

TEST_CASE("theories without type equations normalize to themselves") {
  Theory stlc = builtin("stlc");
  std::size_t unit = *stlc.find_type_op("Unit");
  std::size_t prod = *stlc.find_type_op("Prod");
  TypeExpr t = TypeExpr::app(prod, {TypeExpr::app(unit), TypeExpr::app(unit)});
  CHECK(ty_normalize(stlc, t) == t);
  CHECK_FALSE(ty_equal(stlc, TypeExpr::app(unit), t));
}

TEST_CASE("normalization agrees with the exhaustive rewriter on random types") {
  Theory ulc = builtin("ulc");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    TypeExpr t = random_type(rng, ulc, 0, 4);
    CHECK(ty_normalize(ulc, t) == exhaustive_normalize(ulc, t));
  }
}

TEST_CASE("normalization is idempotent and equality is an equivalence") {
  Theory ulc = builtin("ulc");
  std::mt19937_64 rng(10);
  std::vector<TypeExpr> sample;
  for (int i = 0; i < 60; ++i) sample.push_back(random_type(rng, ulc, 0, 3));
  for (const TypeExpr& t : sample) {
    TypeExpr n = ty_normalize(ulc, t);
    CHECK(ty_normalize(ulc, n) == n);
    CHECK(ty_equal(ulc, t, t));
  }
  for (std::size_t i = 0; i < sample.size(); i += 7)
    for (std::size_t j = 0; j < sample.size(); j += 11) {
      bool ij = ty_equal(ulc, sample[i], sample[j]);
      bool ji = ty_equal(ulc, sample[j], sample[i]);
      CHECK(ij == ji);
      if (!ij) continue;
      for (std::size_t k = 0; k < sample.size(); k += 13)
        if (ty_equal(ulc, sample[j], sample[k]))
          CHECK(ty_equal(ulc, sample[i], sample[k]));
    }
}

TEST_CASE("non-terminating orientations exhaust the budget loudly") {
  Theory growing = stt_test::theory_from(
      "theory growing\n"
      "type D/0\n"
      "type F/1\n"
      "tyeq [] D == F(D) orient ltr\n");
  TypeExpr d = TypeExpr::app(*growing.find_type_op("D"));
  CHECK_THROWS_AS(ty_normalize(growing, d, 100), Error);
  try {
    ty_normalize(growing, d, 100);
  } catch (const Error& e) {
    CHECK(e.code() == Code::BudgetExhausted);
  }
}

TEST_CASE("unoriented type equations refuse to normalize") {
  Theory sym = stt_test::theory_from(
      "theory sym\n"
      "type D/0\n"
      "type E/0\n"
      "tyeq [] D == E orient none\n");
  TypeExpr d = TypeExpr::app(*sym.find_type_op("D"));
  CHECK_THROWS_AS(ty_normalize(sym, d), Error);
  try {
    ty_normalize(sym, d);
  } catch (const Error& e) {
    CHECK(e.code() == Code::UnorientedEquation);
  }
}
