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

#ifndef STT_TESTS_HELPERS_HPP
#define STT_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "stt/dsl.hpp"
#include "stt/signature.hpp"
#include "stt/subst.hpp"

namespace stt_test {

inline std::string source_dir() {
#ifdef STT_SOURCE_DIR
  return STT_SOURCE_DIR;
#else
  return ".";
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline stt::Theory theory_from(const std::string& text) {
  stt::Result<stt::Theory> parsed = stt::parse_theory(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics()) MESSAGE(d.render());
  }
  REQUIRE(parsed.ok());
  stt::Result<stt::Theory> validated = stt::validate(parsed.value());
  if (!validated.ok()) {
    for (const auto& d : validated.diagnostics()) MESSAGE(d.render());
  }
  REQUIRE(validated.ok());
  return validated.value();
}

inline stt::Term term_of(const stt::Theory& th, const stt::NamedContext& ctx,
                         const std::string& text) {
  stt::Result<stt::ExplicitTerm> parsed = stt::parse_term(th, ctx, text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics()) MESSAGE(d.render());
  }
  REQUIRE(parsed.ok());
  stt::Result<stt::Term> pure = stt::as_pure_term(parsed.value());
  REQUIRE(pure.ok());
  return pure.value();
}

inline stt::NamedContext ctx_of(const stt::Theory& th, const std::string& text) {
  stt::Result<stt::NamedContext> parsed = stt::parse_context(th, text);
  REQUIRE(parsed.ok());
  return parsed.value();
}

// A theory with a parameterised operator, used to exercise parameter slots:
// box takes one argument of sort A and one distinguished variable of sort A.
inline stt::Theory param_theory() {
  return theory_from(
      "theory boxes\n"
      "type A/0\n"
      "type B/0\n"
      "term mk [] : -> A\n"
      "term box [] : (A) -> [y:A] B\n"
      "term wrap [] : (B) -> B\n");
}

}  // namespace stt_test

#endif  // STT_TESTS_HELPERS_HPP
