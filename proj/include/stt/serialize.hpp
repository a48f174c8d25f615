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

#ifndef STT_SERIALIZE_HPP
#define STT_SERIALIZE_HPP

#include <json.hpp>

#include "stt/clone.hpp"
#include "stt/laws.hpp"
#include "stt/polysem.hpp"
#include "stt/signature.hpp"
#include "stt/subst.hpp"
#include "stt/term.hpp"

namespace stt {

// JSON schema (documented in the README): types are {"meta": i} or
// {"op": name, "args": [...]}; terms are {"var": i} or
// {"op": name, "inst": [types], "params": [indices],
//  "args": [{"binders": [types], "body": term}]}.
nlohmann::json type_to_json(const Theory& theory, const TypeExpr& t);
nlohmann::json term_to_json(const Theory& theory, const Term& t);
nlohmann::json explicit_to_json(const Theory& theory, const ExplicitTerm& t);
nlohmann::json context_to_json(const Theory& theory, const Context& ctx);
nlohmann::json theory_to_json(const Theory& theory);
nlohmann::json law_results_to_json(const std::vector<LawResult>& results);
nlohmann::json homset_to_json(const Theory& theory, const HomSet& homs);
nlohmann::json oracle_report_to_json(const OracleReport& report);
nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diags);

}  // namespace stt

#endif  // STT_SERIALIZE_HPP
