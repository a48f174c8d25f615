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

#ifndef STT_POLYSEM_HPP
#define STT_POLYSEM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stt/context.hpp"
#include "stt/signature.hpp"
#include "stt/term.hpp"

namespace stt {

// Finite table of opaque tokens indexed by (sort, context) cells. Tokens in
// a cell are the numbers 0..count-1; what they stand for is the caller's
// business, which keeps this oracle independent of the term checker.
struct TermTable {
  std::vector<TypeExpr> sort_universe;
  struct Cell {
    TypeExpr sort;
    Context ctx;
    std::size_t count = 0;
  };
  std::vector<Cell> cells;

  // Missing cells are distinct from empty ones; the lookup fails loudly.
  const Cell* find_cell(const TypeExpr& sort, const Context& ctx) const;
  void set_cell(const TypeExpr& sort, const Context& ctx, std::size_t count);
};

// One element of a term operator's polynomial extension over a table:
// a choice of type instantiation, a choice of parameter variables in the
// ambient context, and one token per premiss.
struct PolyElement {
  std::vector<TypeExpr> inst;
  std::vector<std::size_t> params;  // positions in the ambient context
  std::vector<std::size_t> tokens;  // token per premiss, within its cell
};

// Evaluates the operator's polynomial pointwise over the table: the
// coproduct over instantiations (drawn from the universe, skipping those
// whose premiss or binder sorts leave it) of the product over premisses of
// that premiss's table entries, crossed with the parameter-variable choices.
// Throws SortOutsideUniverse when a required in-universe cell is missing.
std::vector<PolyElement> poly_extension(const Theory& theory, std::size_t op,
                                        const TermTable& table,
                                        const Context& ctx);

// The default instantiation universe: sorts of ctx, the target sort, and the
// nullary type operators, closed once under the theory's type operators.
std::vector<TypeExpr> polysem_universe(const Theory& theory, const Context& ctx,
                                       const TypeExpr& target);

struct OracleReport {
  bool agrees = false;
  std::size_t elements = 0;        // extension size over the whole universe
  std::size_t fiber_elements = 0;  // elements whose conclusion is the target
  std::size_t accepted_nodes = 0;  // fiber nodes accepted by check at target
  std::vector<std::string> mismatches;
};

// Builds the table from enumerate() (tokens = enumerated terms of each cell,
// arguments bounded by size_bound each), evaluates the polynomial, and
// checks that rule-driven sort checking accepts exactly the predicted
// elements at exactly the predicted sorts.
OracleReport oracle_agreement(const Theory& theory, std::size_t op,
                              const Context& ctx, const TypeExpr& target,
                              std::size_t size_bound);

}  // namespace stt

#endif  // STT_POLYSEM_HPP
