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

#include "stt/types.hpp"

#include <algorithm>
#include <optional>

#include "stt/signature.hpp"

namespace stt {

namespace {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct TypeExpr::Node {
  bool is_meta = false;
  std::size_t id = 0;  // meta index or type operator index
  std::vector<TypeExpr> args;
  std::size_t hash = 0;
  bool ground = true;
};

TypeExpr TypeExpr::meta(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->is_meta = true;
  node->id = index;
  node->hash = hash_mix(0x6d657461, index);
  node->ground = false;
  return TypeExpr(std::move(node));
}

TypeExpr TypeExpr::app(std::size_t op, std::vector<TypeExpr> args) {
  auto node = std::make_shared<Node>();
  node->is_meta = false;
  node->id = op;
  std::size_t h = hash_mix(0x74796f70, op);
  bool ground = true;
  for (const TypeExpr& a : args) {
    h = hash_mix(h, a.hash());
    ground = ground && a.is_ground();
  }
  node->hash = h;
  node->ground = ground;
  node->args = std::move(args);
  return TypeExpr(std::move(node));
}

bool TypeExpr::is_meta() const { return node_->is_meta; }
std::size_t TypeExpr::meta_index() const { return node_->id; }
std::size_t TypeExpr::op() const { return node_->id; }
const std::vector<TypeExpr>& TypeExpr::args() const { return node_->args; }
bool TypeExpr::is_ground() const { return node_->ground; }
std::size_t TypeExpr::hash() const { return node_->hash; }

std::size_t TypeExpr::max_meta_plus1() const {
  if (is_meta()) return meta_index() + 1;
  std::size_t m = 0;
  for (const TypeExpr& a : args()) m = std::max(m, a.max_meta_plus1());
  return m;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash()) return false;
  if (a.is_meta() != b.is_meta() || a.node_->id != b.node_->id) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

int compare(const TypeExpr& a, const TypeExpr& b) {
  if (a.is_meta() != b.is_meta()) return a.is_meta() ? -1 : 1;
  if (a.is_meta()) {
    if (a.meta_index() != b.meta_index())
      return a.meta_index() < b.meta_index() ? -1 : 1;
    return 0;
  }
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    int c = compare(a.args()[i], b.args()[i]);
    if (c != 0) return c;
  }
  return 0;
}

TypeExpr ty_subst(const TypeExpr& a, const std::vector<TypeExpr>& inst) {
  if (a.is_meta()) {
    if (a.meta_index() >= inst.size())
      fail(Code::LengthMismatch,
           "type metavariable index " + std::to_string(a.meta_index()) +
               " not covered by an instantiation of length " +
               std::to_string(inst.size()));
    return inst[a.meta_index()];
  }
  if (a.args().empty()) return a;
  std::vector<TypeExpr> args;
  args.reserve(a.args().size());
  for (const TypeExpr& x : a.args()) args.push_back(ty_subst(x, inst));
  return TypeExpr::app(a.op(), std::move(args));
}

namespace {

// First-order matching of an equation side (over its own metavariables)
// against a subject expression. Subject metavariables are opaque constants.
bool match_type(const TypeExpr& pattern, const TypeExpr& subject,
                std::vector<std::optional<TypeExpr>>& binding) {
  if (pattern.is_meta()) {
    auto& slot = binding[pattern.meta_index()];
    if (slot) return *slot == subject;
    slot = subject;
    return true;
  }
  if (subject.is_meta() || subject.op() != pattern.op()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_type(pattern.args()[i], subject.args()[i], binding)) return false;
  return true;
}

TypeExpr instantiate_type(const TypeExpr& pattern,
                          const std::vector<std::optional<TypeExpr>>& binding) {
  if (pattern.is_meta()) return *binding[pattern.meta_index()];
  std::vector<TypeExpr> args;
  args.reserve(pattern.args().size());
  for (const TypeExpr& x : pattern.args())
    args.push_back(instantiate_type(x, binding));
  return TypeExpr::app(pattern.op(), std::move(args));
}

struct TypeRewriter {
  const Theory& theory;
  std::size_t budget;

  TypeExpr normalize(const TypeExpr& e) {
    if (e.is_meta()) return e;
    std::vector<TypeExpr> args;
    args.reserve(e.args().size());
    for (const TypeExpr& a : e.args()) args.push_back(normalize(a));
    TypeExpr cur = TypeExpr::app(e.op(), std::move(args));
    // Arguments are normal; retry rules at this node until none applies.
    for (;;) {
      bool stepped = false;
      for (const TypeEquation& eq : theory.type_eqs) {
        std::vector<std::optional<TypeExpr>> binding(eq.meta_count);
        if (!match_type(eq.lhs, cur, binding)) continue;
        if (budget == 0)
          fail(Code::BudgetExhausted,
               "type rewriting exceeded its step budget; the orientation of "
               "the type equations may not terminate");
        --budget;
        cur = normalize(instantiate_type(eq.rhs, binding));
        stepped = true;
        break;
      }
      if (!stepped) return cur;
    }
  }
};

}  // namespace

TypeExpr ty_normalize(const Theory& theory, const TypeExpr& a, std::size_t budget) {
  if (theory.type_eqs.empty()) return a;
  for (const TypeEquation& eq : theory.type_eqs)
    if (eq.orientation == Orientation::Unoriented)
      fail(Code::UnorientedEquation,
           "theory has an unoriented type equation; type normal forms are "
           "not defined");
  TypeRewriter rw{theory, budget};
  return rw.normalize(a);
}

bool ty_equal(const Theory& theory, const TypeExpr& a, const TypeExpr& b,
              std::size_t budget) {
  if (a == b) return true;
  return ty_normalize(theory, a, budget) == ty_normalize(theory, b, budget);
}

}  // namespace stt
