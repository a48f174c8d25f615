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

#ifndef STT_LAWS_HPP
#define STT_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stt/signature.hpp"

namespace stt {

struct LawOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::size_t budget = 10000;
};

struct LawResult {
  std::string suite;
  std::string law;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // printed (shrunk) reproducers

  bool ok() const { return passed == total && failures.empty(); }
};

// Category laws of contexts and renamings, plus the agreement of contract
// with the variable-duplication oracle.
std::vector<LawResult> context_law_suite(const Theory& theory, const LawOptions& o);

// Presheaf laws of the renaming action: identity, composition, sort
// preservation, weakening soundness.
std::vector<LawResult> rename_law_suite(const Theory& theory, const LawOptions& o);

// The single-variable substitution law suite: trivial substitution, left and
// right identities, associativity, commutation with unparameterised
// operators, and the simultaneous-substitution laws.
std::vector<LawResult> substitution_law_suite(const Theory& theory,
                                              const LawOptions& o);

// Explicit-substitution elimination: sort preservation and agreement with
// subst1, plus the four laws routed through Subst nodes.
std::vector<LawResult> subst_lemma_suite(const Theory& theory, const LawOptions& o);

// Every declared equation holds under meta-substitution at random
// valuations, decided by rewriting.
std::vector<LawResult> satisfaction_suite(const Theory& theory, const LawOptions& o);

// Second-order matching round-trip and naturality of meta-substitution.
std::vector<LawResult> meta_suite(const Theory& theory, const LawOptions& o);

// Clone laws on sampled homs: units, associativity, structural actions.
std::vector<LawResult> clone_law_suite(const Theory& theory, const LawOptions& o);

// parse . print round-trips for terms, explicit terms, contexts, theories.
std::vector<LawResult> dsl_roundtrip_suite(const Theory& theory, const LawOptions& o);

// Finite-model laws (simply-typed theories only): semantic substitution
// lemma, equation soundness, naturality of the interpretation.
std::vector<LawResult> finmodel_suite(const Theory& theory, const LawOptions& o,
                                      std::size_t base_size);

// Every applicable suite for the theory.
std::vector<LawResult> run_all_laws(const Theory& theory, const LawOptions& o);

bool all_passed(const std::vector<LawResult>& results);

}  // namespace stt

#endif  // STT_LAWS_HPP
