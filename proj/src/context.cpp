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

#include "stt/context.hpp"

#include <string>

#include "stt/signature.hpp"

namespace stt {

const TypeExpr& Context::sort_of_index(std::size_t index) const {
  if (index >= sorts.size())
    fail(Code::UnboundVariable,
         "variable index " + std::to_string(index) + " in a context of size " +
             std::to_string(sorts.size()));
  return sorts[sorts.size() - 1 - index];
}

std::size_t Context::hash() const {
  std::size_t h = 0x63747821;
  for (const TypeExpr& s : sorts)
    h = h ^ (s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  return h;
}

Context extend(const Theory& theory, const Context& ctx, const TypeExpr& sort) {
  Context out = ctx;
  out.sorts.push_back(ty_normalize(theory, sort));
  return out;
}

Context concat(const Theory& theory, const Context& ctx,
               const std::vector<TypeExpr>& sorts) {
  Context out = ctx;
  for (const TypeExpr& s : sorts) out.sorts.push_back(ty_normalize(theory, s));
  return out;
}

Renaming rename_id(const Context& ctx) {
  Renaming r{ctx, ctx, {}};
  r.map.resize(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p) r.map[p] = p;
  return r;
}

Renaming rename_compose(const Renaming& r, const Renaming& s) {
  if (r.target != s.source)
    fail(Code::ContextMismatch, "renamings are not composable");
  Renaming out{r.source, s.target, {}};
  out.map.resize(r.map.size());
  for (std::size_t p = 0; p < r.map.size(); ++p) out.map[p] = s.map[r.map[p]];
  return out;
}

Renaming weaken(const Theory& theory, const Context& ctx, const TypeExpr& sort) {
  Renaming r{ctx, extend(theory, ctx, sort), {}};
  r.map.resize(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p) r.map[p] = p;
  return r;
}

Renaming exchange(const Theory& theory, const Context& ctx, std::size_t position) {
  (void)theory;
  if (position + 1 >= ctx.size())
    fail(Code::IndexOutOfRange,
         "exchange at position " + std::to_string(position) +
             " in a context of size " + std::to_string(ctx.size()));
  Context target = ctx;
  std::swap(target.sorts[position], target.sorts[position + 1]);
  Renaming r{ctx, std::move(target), {}};
  r.map.resize(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p) r.map[p] = p;
  r.map[position] = position + 1;
  r.map[position + 1] = position;
  return r;
}

Renaming contract(const Theory& theory, const Context& ctx, std::size_t i,
                  std::size_t j) {
  if (i >= ctx.size() || j >= ctx.size() || i == j)
    fail(Code::IndexOutOfRange, "contract positions out of range");
  if (i > j) std::swap(i, j);
  if (!ty_equal(theory, ctx[i], ctx[j]))
    fail(Code::SortMismatch, "contract requires equal sorts at both positions");
  Context target;
  target.sorts.reserve(ctx.size() - 1);
  for (std::size_t p = 0; p < ctx.size(); ++p)
    if (p != j) target.sorts.push_back(ctx[p]);
  Renaming r{ctx, std::move(target), {}};
  r.map.resize(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p) {
    std::size_t q = (p == j) ? i : p;
    r.map[p] = q > j ? q - 1 : q;
  }
  return r;
}

void validate_renaming(const Theory& theory, const Renaming& r) {
  if (r.map.size() != r.source.size())
    fail(Code::ContextMismatch, "renaming map length differs from its source");
  for (std::size_t p = 0; p < r.map.size(); ++p) {
    if (r.map[p] >= r.target.size())
      fail(Code::ContextMismatch, "renaming maps outside its target context");
    if (!ty_equal(theory, r.target[r.map[p]], r.source[p]))
      fail(Code::ContextMismatch, "renaming does not preserve sorts");
  }
}

}  // namespace stt
