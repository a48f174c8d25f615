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

#ifndef STT_TYPES_HPP
#define STT_TYPES_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "stt/diagnostics.hpp"

namespace stt {

struct Theory;

// Element of the free type algebra over a set of type metavariables:
// either a metavariable Meta(index) or an operator application
// Op(op, args) with the operator referenced by its index in the theory.
// Values are immutable and share structure; copying is cheap.
class TypeExpr {
 public:
  TypeExpr() = default;  // empty handle; only assignment is valid

  static TypeExpr meta(std::size_t index);
  static TypeExpr app(std::size_t op, std::vector<TypeExpr> args = {});

  bool valid() const { return node_ != nullptr; }
  bool is_meta() const;
  std::size_t meta_index() const;
  std::size_t op() const;
  const std::vector<TypeExpr>& args() const;

  bool is_ground() const;             // contains no Meta
  std::size_t max_meta_plus1() const;  // 0 when ground
  std::size_t hash() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Total structural order; used only to fix deterministic enumeration orders.
int compare(const TypeExpr& a, const TypeExpr& b);

struct TypeExprHash {
  std::size_t operator()(const TypeExpr& t) const { return t.hash(); }
};

// Homomorphic replacement of Meta(i) by inst[i].
// Throws LengthMismatch when a metavariable index is not covered by inst.
TypeExpr ty_subst(const TypeExpr& a, const std::vector<TypeExpr>& inst);

// Exhaustive leftmost-innermost rewriting with the theory's oriented type
// equations. Works on open expressions (metavariables are treated as opaque
// constants). Throws BudgetExhausted / UnorientedEquation.
TypeExpr ty_normalize(const Theory& theory, const TypeExpr& a,
                      std::size_t budget = 10000);

// Equality modulo the theory's type equations, decided on normal forms.
bool ty_equal(const Theory& theory, const TypeExpr& a, const TypeExpr& b,
              std::size_t budget = 10000);

}  // namespace stt

#endif  // STT_TYPES_HPP
