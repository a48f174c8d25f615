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

#include "stt/clone.hpp"

#include <algorithm>
#include <string>

#include "stt/subst.hpp"

namespace stt {

HomSet hom(const Theory& theory, const Context& domain, const TypeExpr& codomain,
           std::size_t size_bound, std::size_t budget) {
  TypeExpr target = ty_normalize(theory, codomain);
  std::vector<Term> terms = enumerate(theory, domain, target, size_bound);
  HomSet out;
  for (const Term& t : terms) {
    Term nf = normalize_term(theory, domain, t, budget);
    bool fresh = std::none_of(
        out.homs.begin(), out.homs.end(),
        [&](const CloneHom& h) { return h.representative == nf; });
    if (fresh) out.homs.push_back(CloneHom{domain, target, nf});
  }
  out.count_is_upper_bound = out.homs.size() > 1;
  return out;
}

CloneHom identity_hom(const Theory& theory, const Context& domain, std::size_t p) {
  if (p >= domain.size()) fail(Code::IndexOutOfRange, "identity position out of range");
  (void)theory;
  return CloneHom{domain, domain[p], Term::var(domain.size() - 1 - p)};
}

CloneHom compose(const Theory& theory, const CloneHom& f,
                 const std::vector<CloneHom>& gs, std::size_t budget) {
  if (gs.size() != f.domain.size())
    fail(Code::LengthMismatch,
         "composition needs one hom per position of the outer domain");
  Context common = gs.empty() ? Context{} : gs.front().domain;
  std::vector<Term> sigma;
  sigma.reserve(gs.size());
  for (std::size_t p = 0; p < gs.size(); ++p) {
    if (!(gs[p].domain == common))
      fail(Code::ContextMismatch, "inner homs must share a domain");
    if (!ty_equal(theory, gs[p].codomain, f.domain[p]))
      fail(Code::SortMismatch,
           "inner hom " + std::to_string(p) + " does not match the outer domain");
    sigma.push_back(gs[p].representative);
  }
  Term composed =
      msubst(theory, f.domain, common, sigma, f.representative, /*validate=*/false);
  return CloneHom{common, f.codomain,
                  normalize_term(theory, common, composed, budget)};
}

CloneHom structural(const Theory& theory, const CloneHom& f, const Renaming& r,
                    std::size_t budget) {
  if (!(r.source == f.domain))
    fail(Code::ContextMismatch, "renaming does not start at the hom's domain");
  Term moved = rename(theory, f.representative, r);
  return CloneHom{r.target, f.codomain,
                  normalize_term(theory, r.target, moved, budget)};
}

}  // namespace stt
