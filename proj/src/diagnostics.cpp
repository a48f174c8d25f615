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

#include "stt/diagnostics.hpp"

namespace stt {

const char* code_name(Code code) {
  switch (code) {
    case Code::UnknownTypeOp: return "UnknownTypeOp";
    case Code::UnknownTermOp: return "UnknownTermOp";
    case Code::ArityMismatch: return "ArityMismatch";
    case Code::MetaIndexOutOfRange: return "MetaIndexOutOfRange";
    case Code::DuplicateName: return "DuplicateName";
    case Code::IllTypedEquationSide: return "IllTypedEquationSide";
    case Code::NonPatternLhs: return "NonPatternLhs";
    case Code::UnknownBuiltin: return "UnknownBuiltin";
    case Code::LengthMismatch: return "LengthMismatch";
    case Code::BudgetExhausted: return "BudgetExhausted";
    case Code::UnorientedEquation: return "UnorientedEquation";
    case Code::ContextMismatch: return "ContextMismatch";
    case Code::SortMismatch: return "SortMismatch";
    case Code::ParamSortMismatch: return "ParamSortMismatch";
    case Code::IndexOutOfRange: return "IndexOutOfRange";
    case Code::UnboundVariable: return "UnboundVariable";
    case Code::ParamSubstitution: return "ParamSubstitution";
    case Code::PlaceholderArityMismatch: return "PlaceholderArityMismatch";
    case Code::NonEnumerableOperator: return "NonEnumerableOperator";
    case Code::SortOutsideUniverse: return "SortOutsideUniverse";
    case Code::CarrierTooLarge: return "CarrierTooLarge";
    case Code::UnsupportedTheory: return "UnsupportedTheory";
    case Code::SyntaxError: return "SyntaxError";
    case Code::UnknownIdentifier: return "UnknownIdentifier";
    case Code::Internal: return "Internal";
  }
  return "Internal";
}

std::string Diagnostic::render() const {
  std::string out;
  if (span) {
    out += span->file + ":" + std::to_string(span->line) + ":" +
           std::to_string(span->col_begin) + ": ";
  }
  out += code_name(code);
  if (!where.empty()) out += " [" + where + "]";
  out += ": ";
  out += message;
  return out;
}

}  // namespace stt
