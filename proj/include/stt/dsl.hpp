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

#ifndef STT_DSL_HPP
#define STT_DSL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "stt/context.hpp"
#include "stt/signature.hpp"
#include "stt/subst.hpp"
#include "stt/term.hpp"

namespace stt {

// Context together with the surface names of its entries (the kernel is
// nameless; names exist only at this layer).
struct NamedContext {
  Context ctx;
  std::vector<std::string> names;
};

// Theory files: line-oriented, `#` comments.
//   theory NAME
//   type NAME/ARITY
//   tyeq [A B ...] TYPE == TYPE orient ltr|none
//   term NAME [A B ...] : (x:T,... . T), (T), ... -> [y:T,...] T
//   eq NAME [A B ...] (p : (x:T,...) T), ... : [x:T,...] T = MT == MT orient ltr|none
// Name resolution happens here; the result still goes through validate().
Result<Theory> parse_theory(std::string_view text,
                            std::string filename = "<input>");

// Surface context syntax: "x:A, y:B" (empty string for the empty context).
Result<NamedContext> parse_context(const Theory& theory, std::string_view text,
                                   std::string filename = "<context>");

// Surface term syntax:
//   op<T1,...>[y1,...]((x:A,... . arg), arg, ...)   operator application
//   x                                               variable
//   t[u/x]                                          explicit substitution
// Instantiations <...> are mandatory for operators with metavariables.
Result<ExplicitTerm> parse_term(const Theory& theory, const NamedContext& ctx,
                                std::string_view text,
                                std::string filename = "<term>");

// Conversion; diagnoses Subst nodes rather than eliminating them.
Result<Term> as_pure_term(const ExplicitTerm& t);

// ---- printing -------------------------------------------------------------

// Canonical metavariable names: A..Z then M26, M27, ...
std::string meta_name(std::size_t index);

// Positional fallback names x0, x1, ... for a context.
std::vector<std::string> default_names(const Context& ctx);

std::string print_type(const Theory& theory, const TypeExpr& t);
std::string print_type(const Theory& theory, const TypeExpr& t,
                       const std::vector<std::string>& meta_names);
std::string print_context(const Theory& theory, const NamedContext& ctx);
std::string print_term(const Theory& theory,
                       const std::vector<std::string>& ctx_names, const Term& t);
std::string print_explicit(const Theory& theory,
                           const std::vector<std::string>& ctx_names,
                           const ExplicitTerm& t);

// Canonical theory rendering; parse_theory of the output reproduces the
// theory exactly.
std::string print_theory(const Theory& theory);

}  // namespace stt

#endif  // STT_DSL_HPP
