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

#ifndef STT_SUBST_HPP
#define STT_SUBST_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "stt/context.hpp"
#include "stt/term.hpp"

namespace stt {

// Term grammar extended with explicit substitution nodes
// Subst(body, arg): body lives in the ambient context extended by the sort
// of arg. Substitution on plain Terms is a meta-operation; ExplicitTerm
// exists to state its admissibility operationally.
class ExplicitTerm {
 public:
  ExplicitTerm() = default;

  static ExplicitTerm var(std::size_t index);
  static ExplicitTerm make_op(std::size_t op, std::vector<TypeExpr> inst,
                              std::vector<std::size_t> params,
                              std::vector<ExplicitTerm> args);
  static ExplicitTerm subst(ExplicitTerm body, ExplicitTerm arg);
  static ExplicitTerm from_term(const Term& t);

  enum class Kind { Var, Op, Subst };

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_op() const { return kind() == Kind::Op; }
  bool is_subst() const { return kind() == Kind::Subst; }

  std::size_t var_index() const;
  std::size_t op() const;
  const std::vector<TypeExpr>& inst() const;
  const std::vector<std::size_t>& params() const;
  const std::vector<ExplicitTerm>& args() const;
  const ExplicitTerm& body() const;
  const ExplicitTerm& arg() const;

  std::size_t subst_node_count() const;

  friend bool operator==(const ExplicitTerm& a, const ExplicitTerm& b);
  friend bool operator!=(const ExplicitTerm& a, const ExplicitTerm& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit ExplicitTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Sort checking for explicit terms: a Subst node checks when its argument
// checks at some sort A and its body checks in the context extended by A.
Result<TypeExpr> check_explicit(const Theory& theory, const Context& ctx,
                                const ExplicitTerm& t);

// Capture-avoiding replacement of de Bruijn index 0 of t (over extend(ctx, A))
// by u (of sort A over ctx), shifting indices under binders. Throws
// ParamSubstitution when the substituted variable sits in a parameter slot.
Term subst1(const Theory& theory, const Context& ctx, const Term& t, const Term& u);

// Simultaneous substitution: sigma[p] (a term over `target`) replaces the
// variable at source position p. Sorts of sigma must match `source`
// pointwise; pass validate=false to skip that check on trusted calls.
Term msubst(const Theory& theory, const Context& source, const Context& target,
            const std::vector<Term>& sigma, const Term& t, bool validate = true);

// The identity substitution [Var(n-1), ..., Var(0)] for a context of size n.
std::vector<Term> identity_subst(const Context& ctx);

// Positional substitution without sort validation; source_size gives the
// length of the implicit source context. Internal building block for
// meta-substitution and rewriting.
Term msubst_unchecked(const Theory& theory, const std::vector<Term>& sigma,
                      std::size_t source_size, const Term& t);

// Interprets every Subst node via subst1, bottom-up, yielding a pure term of
// the same sort in the same context.
Term eliminate_subst(const Theory& theory, const Context& ctx,
                     const ExplicitTerm& t);

}  // namespace stt

#endif  // STT_SUBST_HPP
