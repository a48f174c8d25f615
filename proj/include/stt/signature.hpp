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

#ifndef STT_SIGNATURE_HPP
#define STT_SIGNATURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stt/diagnostics.hpp"
#include "stt/metaterm.hpp"
#include "stt/types.hpp"

namespace stt {

enum class Orientation { LeftToRight, Unoriented };

struct TypeOp {
  std::string name;
  std::size_t arity = 0;
};

struct TypeEquation {
  std::size_t meta_count = 0;
  TypeExpr lhs;
  TypeExpr rhs;
  Orientation orientation = Orientation::LeftToRight;
};

// One premiss of a second-order arity: a list of bound-variable sorts and
// the sort of the argument formed under those binders. Placeholder
// declarations in equations have the same shape.
struct Premiss {
  std::vector<TypeExpr> binders;
  TypeExpr result;
};

struct SecondOrderArity {
  std::size_t meta_count = 0;
  std::vector<Premiss> premisses;
  std::vector<TypeExpr> parameters;  // empty <=> unparameterised
  TypeExpr result;
};

struct TermOp {
  std::string name;
  SecondOrderArity arity;
};

struct TermEquation {
  std::string name;
  std::size_t meta_count = 0;
  std::vector<Premiss> placeholders;
  std::vector<std::string> placeholder_names;  // surface names, for printing
  std::vector<TypeExpr> param_context;
  TypeExpr result;
  MetaTerm lhs;
  MetaTerm rhs;
  Orientation orientation = Orientation::LeftToRight;
};

// Validated bundle of an equational type signature and an equational term
// signature. Immutable after validation; safe to share across threads.
struct Theory {
  std::string name;
  std::vector<TypeOp> type_ops;
  std::vector<TypeEquation> type_eqs;
  std::vector<TermOp> term_ops;
  std::vector<TermEquation> term_eqs;

  std::optional<std::size_t> find_type_op(std::string_view name) const;
  std::optional<std::size_t> find_term_op(std::string_view name) const;

  // Ground sorts of the nullary type operators, in declaration order.
  std::vector<TypeExpr> base_sorts() const;

  friend bool operator==(const Theory& a, const Theory& b);
  friend bool operator!=(const Theory& a, const Theory& b) { return !(a == b); }
};

// Checks every structural invariant of the raw theory data: name
// uniqueness, operator arities, metavariable ranges, well-sortedness of
// both sides of every term equation, and the pattern restriction on
// oriented left-hand sides. Returns the theory unchanged on success and
// the full list of diagnostics otherwise.
Result<Theory> validate(const Theory& raw);

// The bundled example theories: "stlc" / "stlc(n)", "ulc", "comp-lc",
// "monoid". Throws UnknownBuiltin.
Theory builtin(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace stt

#endif  // STT_SIGNATURE_HPP
