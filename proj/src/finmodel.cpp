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

#include "stt/finmodel.hpp"

#include <limits>

#include "stt/signature.hpp"

namespace stt {

namespace {

// The operator shapes this model interprets. Anything else (a monad former,
// a user operator) has no canonical finite semantics here.
const char* kKnownTermOps[] = {"u", "abs", "app", "pair", "proj1", "proj2"};

bool known_term_op(const std::string& name) {
  for (const char* k : kKnownTermOps)
    if (name == k) return true;
  return false;
}

}  // namespace

FinModel::FinModel(const Theory& theory, std::map<std::string, std::size_t> base_sizes,
                   std::size_t guard)
    : theory_(&theory), base_sizes_(std::move(base_sizes)), guard_(guard) {
  auto unit = theory.find_type_op("Unit");
  auto prod = theory.find_type_op("Prod");
  auto fun = theory.find_type_op("Fun");
  if (!unit || !prod || !fun || theory.type_ops[*unit].arity != 0 ||
      theory.type_ops[*prod].arity != 2 || theory.type_ops[*fun].arity != 2)
    fail(Code::UnsupportedTheory,
         "finite models are defined for the simply-typed theory (Unit, Prod, "
         "Fun)");
  unit_op_ = *unit;
  prod_op_ = *prod;
  fun_op_ = *fun;
  for (const TypeOp& op : theory.type_ops) {
    if (op.arity == 0 && op.name != "Unit" && base_sizes_.find(op.name) == base_sizes_.end())
      fail(Code::UnsupportedTheory,
           "no cardinality given for base type " + op.name);
    if (op.arity != 0 && op.name != "Prod" && op.name != "Fun")
      fail(Code::UnsupportedTheory,
           "type operator " + op.name + " has no finite interpretation here");
  }
  for (const TermOp& op : theory.term_ops)
    if (!known_term_op(op.name))
      fail(Code::UnsupportedTheory,
           "term operator " + op.name + " has no finite interpretation here");
}

std::size_t FinModel::checked_mul(std::size_t a, std::size_t b) const {
  if (b != 0 && a > guard_ / b)
    fail(Code::CarrierTooLarge, "carrier exceeds the size guard");
  std::size_t r = a * b;
  if (r > guard_) fail(Code::CarrierTooLarge, "carrier exceeds the size guard");
  return r;
}

std::size_t FinModel::checked_pow(std::size_t b, std::size_t e) const {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::size_t FinModel::card(const TypeExpr& sort) const {
  auto it = card_memo_.find(sort);
  if (it != card_memo_.end()) return it->second;
  if (sort.is_meta())
    fail(Code::UnsupportedTheory, "carriers exist for ground sorts only");
  std::size_t result;
  if (sort.op() == unit_op_) {
    result = 1;
  } else if (sort.op() == prod_op_) {
    result = checked_mul(card(sort.args()[0]), card(sort.args()[1]));
  } else if (sort.op() == fun_op_) {
    result = checked_pow(card(sort.args()[1]), card(sort.args()[0]));
  } else {
    result = base_sizes_.at(theory_->type_ops[sort.op()].name);
    if (result > guard_) fail(Code::CarrierTooLarge, "carrier exceeds the size guard");
  }
  card_memo_.emplace(sort, result);
  return result;
}

std::size_t FinModel::apply(const TypeExpr& fun_sort, std::size_t fun,
                            std::size_t arg) const {
  std::size_t cod = card(fun_sort.args()[1]);
  std::size_t digit = fun;
  for (std::size_t i = 0; i < arg; ++i) digit /= cod;
  return digit % cod;
}

std::size_t FinModel::interp_term(const Context& ctx, const Term& t,
                                  const Environment& env) const {
  const Theory& th = *theory_;
  if (env.size() != ctx.size())
    fail(Code::LengthMismatch, "environment does not match the context");
  if (t.is_var()) {
    if (t.var_index() >= ctx.size())
      fail(Code::UnboundVariable, "unbound variable in interpretation");
    return env[env.size() - 1 - t.var_index()];
  }
  const std::string& name = th.term_ops[t.op()].name;
  if (name == "u") return 0;
  if (name == "pair") {
    TypeExpr b = t.inst()[1];
    std::size_t x = interp_term(ctx, t.args()[0], env);
    std::size_t y = interp_term(ctx, t.args()[1], env);
    return x * card(b) + y;
  }
  if (name == "proj1") {
    TypeExpr b = t.inst()[1];
    return interp_term(ctx, t.args()[0], env) / card(b);
  }
  if (name == "proj2") {
    TypeExpr b = t.inst()[1];
    return interp_term(ctx, t.args()[0], env) % card(b);
  }
  if (name == "app") {
    TypeExpr fun_sort =
        ty_normalize(th, TypeExpr::app(fun_op_, {t.inst()[0], t.inst()[1]}));
    std::size_t f = interp_term(ctx, t.args()[0], env);
    std::size_t a = interp_term(ctx, t.args()[1], env);
    return apply(fun_sort, f, a);
  }
  if (name == "abs") {
    TypeExpr a = t.inst()[0];
    TypeExpr b = t.inst()[1];
    std::size_t ca = card(a);
    std::size_t cb = card(b);
    Context inner = ctx;
    inner.sorts.push_back(ty_normalize(th, a));
    std::size_t table = 0;
    std::size_t weight = 1;
    for (std::size_t x = 0; x < ca; ++x) {
      Environment inner_env = env;
      inner_env.push_back(x);
      std::size_t y = interp_term(inner, t.args()[0], inner_env);
      table += y * weight;
      weight = checked_mul(weight, cb);
    }
    return table;
  }
  fail(Code::UnsupportedTheory, "operator " + name + " has no interpretation");
}

std::vector<Environment> FinModel::all_envs(const Context& ctx) const {
  std::size_t total = 1;
  std::vector<std::size_t> cards;
  cards.reserve(ctx.size());
  for (const TypeExpr& s : ctx.sorts) {
    cards.push_back(card(s));
    total = checked_mul(total, cards.back());
  }
  std::vector<Environment> out;
  out.reserve(total);
  Environment env(ctx.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    out.push_back(env);
    for (std::size_t i = ctx.size(); i > 0;) {
      --i;
      if (++env[i] < cards[i]) break;
      env[i] = 0;
    }
  }
  return out;
}

}  // namespace stt
