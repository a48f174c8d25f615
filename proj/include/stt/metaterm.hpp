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

#ifndef STT_METATERM_HPP
#define STT_METATERM_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "stt/types.hpp"

namespace stt {

// Term grammar extended with second-order placeholder occurrences
// MVar(i, sub): the i-th placeholder of the enclosing equation with an
// explicit instantiation of its binders. Operator nodes carry type
// expressions over the equation's metavariables rather than ground sorts.
class MetaTerm {
 public:
  MetaTerm() = default;

  static MetaTerm var(std::size_t index);
  static MetaTerm make_op(std::size_t op, std::vector<TypeExpr> inst,
                          std::vector<std::size_t> params,
                          std::vector<MetaTerm> args);
  static MetaTerm mvar(std::size_t placeholder, std::vector<MetaTerm> sub);

  enum class Kind { Var, Op, MVar };

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_op() const { return kind() == Kind::Op; }
  bool is_mvar() const { return kind() == Kind::MVar; }

  std::size_t var_index() const;
  std::size_t op() const;
  const std::vector<TypeExpr>& inst() const;
  const std::vector<std::size_t>& params() const;
  const std::vector<MetaTerm>& args() const;
  std::size_t placeholder() const;
  const std::vector<MetaTerm>& sub() const;

  friend bool operator==(const MetaTerm& a, const MetaTerm& b);
  friend bool operator!=(const MetaTerm& a, const MetaTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit MetaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace stt

#endif  // STT_METATERM_HPP
