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

#include "stt/metaterm.hpp"

namespace stt {

struct MetaTerm::Node {
  Kind kind = Kind::Var;
  std::size_t id = 0;  // var index, op index, or placeholder index
  std::vector<TypeExpr> inst;
  std::vector<std::size_t> params;
  std::vector<MetaTerm> args;  // op arguments or placeholder instantiation
};

MetaTerm MetaTerm::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->id = index;
  return MetaTerm(std::move(node));
}

MetaTerm MetaTerm::make_op(std::size_t op, std::vector<TypeExpr> inst,
                           std::vector<std::size_t> params,
                           std::vector<MetaTerm> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Op;
  node->id = op;
  node->inst = std::move(inst);
  node->params = std::move(params);
  node->args = std::move(args);
  return MetaTerm(std::move(node));
}

MetaTerm MetaTerm::mvar(std::size_t placeholder, std::vector<MetaTerm> sub) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::MVar;
  node->id = placeholder;
  node->args = std::move(sub);
  return MetaTerm(std::move(node));
}

MetaTerm::Kind MetaTerm::kind() const { return node_->kind; }
std::size_t MetaTerm::var_index() const { return node_->id; }
std::size_t MetaTerm::op() const { return node_->id; }
const std::vector<TypeExpr>& MetaTerm::inst() const { return node_->inst; }
const std::vector<std::size_t>& MetaTerm::params() const { return node_->params; }
const std::vector<MetaTerm>& MetaTerm::args() const { return node_->args; }
std::size_t MetaTerm::placeholder() const { return node_->id; }
const std::vector<MetaTerm>& MetaTerm::sub() const { return node_->args; }

bool operator==(const MetaTerm& a, const MetaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind() || a.node_->id != b.node_->id) return false;
  if (a.node_->inst != b.node_->inst || a.node_->params != b.node_->params)
    return false;
  if (a.node_->args.size() != b.node_->args.size()) return false;
  for (std::size_t i = 0; i < a.node_->args.size(); ++i)
    if (!(a.node_->args[i] == b.node_->args[i])) return false;
  return true;
}

}  // namespace stt
