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

#ifndef STT_DIAGNOSTICS_HPP
#define STT_DIAGNOSTICS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace stt {

enum class Code {
  // validation
  UnknownTypeOp,
  UnknownTermOp,
  ArityMismatch,
  MetaIndexOutOfRange,
  DuplicateName,
  IllTypedEquationSide,
  NonPatternLhs,
  UnknownBuiltin,
  // kernel
  LengthMismatch,
  BudgetExhausted,
  UnorientedEquation,
  ContextMismatch,
  SortMismatch,
  ParamSortMismatch,
  IndexOutOfRange,
  UnboundVariable,
  ParamSubstitution,
  PlaceholderArityMismatch,
  NonEnumerableOperator,
  SortOutsideUniverse,
  CarrierTooLarge,
  UnsupportedTheory,
  // surface syntax
  SyntaxError,
  UnknownIdentifier,
  Internal,
};

const char* code_name(Code code);

// Half-open line/column range in a source file; start <= end.
struct SourceSpan {
  std::string file;
  int line = 0;
  int col_begin = 0;
  int col_end = 0;
};

struct Diagnostic {
  Code code = Code::Internal;
  std::string message;
  std::string where;  // operator / equation name, when known
  std::optional<SourceSpan> span;

  std::string render() const;
};

// Kernel operations throw this for the error conditions listed in their
// contracts; validation and parsing collect Diagnostic values instead.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic diag)
      : std::runtime_error(diag.render()), diag_(std::move(diag)) {}
  Error(Code code, std::string message)
      : Error(Diagnostic{code, std::move(message), {}, std::nullopt}) {}

  const Diagnostic& diagnostic() const { return diag_; }
  Code code() const { return diag_.code; }

 private:
  Diagnostic diag_;
};

[[noreturn]] inline void fail(Code code, std::string message) {
  throw Error(code, std::move(message));
}

// Minimal expected-style result carrying either a value or diagnostics.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}  // NOLINT: implicit by design
  Result(Diagnostic diag) : v_(std::vector<Diagnostic>{std::move(diag)}) {}
  Result(std::vector<Diagnostic> diags) : v_(std::move(diags)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw Error(diagnostics().front());
    return std::get<T>(v_);
  }
  T&& value() && {
    if (!ok()) throw Error(diagnostics().front());
    return std::get<T>(std::move(v_));
  }
  const T& operator*() const& { return value(); }

  const std::vector<Diagnostic>& diagnostics() const {
    static const std::vector<Diagnostic> empty;
    return ok() ? empty : std::get<std::vector<Diagnostic>>(v_);
  }

 private:
  std::variant<T, std::vector<Diagnostic>> v_;
};

}  // namespace stt

#endif  // STT_DIAGNOSTICS_HPP
