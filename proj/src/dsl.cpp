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

#include "stt/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "stt/equations.hpp"

namespace stt {

namespace {

// ---- lexer ------------------------------------------------------------------

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Lt,
  Gt,
  Comma,
  Colon,
  Dot,
  Slash,
  Arrow,    // ->
  Eq,       // =
  EqEq,     // ==
  Newline,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        out.push_back(make(Tok::Newline, "\n"));
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (ident_start(c)) {
        SourceSpan span = here();
        std::string s;
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
          // '-' starts an arrow when followed by '>'
          if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')
            break;
          s += text_[pos_];
          advance();
        }
        span.col_end = col_;
        out.push_back(Token{Tok::Ident, s, span});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        SourceSpan span = here();
        std::string s;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          s += text_[pos_];
          advance();
        }
        span.col_end = col_;
        out.push_back(Token{Tok::Number, s, span});
        continue;
      }
      switch (c) {
        case '(': out.push_back(make(Tok::LParen, "(")); advance(); break;
        case ')': out.push_back(make(Tok::RParen, ")")); advance(); break;
        case '[': out.push_back(make(Tok::LBracket, "[")); advance(); break;
        case ']': out.push_back(make(Tok::RBracket, "]")); advance(); break;
        case '<': out.push_back(make(Tok::Lt, "<")); advance(); break;
        case '>': out.push_back(make(Tok::Gt, ">")); advance(); break;
        case ',': out.push_back(make(Tok::Comma, ",")); advance(); break;
        case ':': out.push_back(make(Tok::Colon, ":")); advance(); break;
        case '.': out.push_back(make(Tok::Dot, ".")); advance(); break;
        case '/': out.push_back(make(Tok::Slash, "/")); advance(); break;
        case '-':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            out.push_back(make(Tok::Arrow, "->"));
            advance();
            advance();
          } else {
            diags.push_back(Diagnostic{Code::SyntaxError, "stray '-'", "", here()});
            advance();
          }
          break;
        case '=':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
            out.push_back(make(Tok::EqEq, "=="));
            advance();
            advance();
          } else {
            out.push_back(make(Tok::Eq, "="));
            advance();
          }
          break;
        default:
          diags.push_back(Diagnostic{
              Code::SyntaxError, std::string("unexpected character '") + c + "'",
              "", here()});
          advance();
      }
    }
    out.push_back(Token{Tok::End, "", here()});
    return out;
  }

 private:
  SourceSpan here() const { return SourceSpan{file_, line_, col_, col_ + 1}; }
  Token make(Tok kind, std::string text) const {
    SourceSpan s = here();
    s.col_end = col_ + static_cast<int>(text.size());
    return Token{kind, std::move(text), s};
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---- surface syntax trees -----------------------------------------------------

struct SurfaceType {
  std::string name;
  std::vector<SurfaceType> args;
  bool has_args = false;  // distinguishes "D" from "D()" (the latter is invalid)
  SourceSpan span;
};

struct SurfaceTerm;

struct SurfaceArg {
  std::vector<std::pair<std::string, std::optional<SurfaceType>>> binders;
  std::shared_ptr<SurfaceTerm> body;
};

struct SurfaceTerm {
  enum class Kind { Name, Apply, Bracket, Subst } kind = Kind::Name;
  std::string name;                      // Name / Apply / Bracket head
  std::vector<SurfaceType> inst;         // Apply
  bool has_inst = false;
  std::vector<std::string> paramvars;    // Apply
  bool has_params = false;
  std::vector<SurfaceArg> args;          // Apply
  std::vector<std::shared_ptr<SurfaceTerm>> bracket;  // Bracket: name[mt, ...]
  std::shared_ptr<SurfaceTerm> body, arg;             // Subst: body[arg/var]
  std::string subst_var;
  SourceSpan span;
};

// ---- parser -------------------------------------------------------------------

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++i_;
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) {
      error("expected " + what);
      return Token{k, "", peek().span};
    }
    return next();
  }
  void error(const std::string& msg) {
    diags_.push_back(Diagnostic{Code::SyntaxError, msg, "", peek().span});
    throw Error(diags_.back());
  }
  void skip_line() {
    while (!at(Tok::Newline) && !at(Tok::End)) ++i_;
    accept(Tok::Newline);
  }
  void skip_newlines() {
    while (accept(Tok::Newline)) {
    }
  }

  SurfaceType parse_type() {
    Token head = expect(Tok::Ident, "a type name");
    SurfaceType t;
    t.name = head.text;
    t.span = head.span;
    if (accept(Tok::LParen)) {
      t.has_args = true;
      if (!at(Tok::RParen)) {
        t.args.push_back(parse_type());
        while (accept(Tok::Comma)) t.args.push_back(parse_type());
      }
      expect(Tok::RParen, "')'");
    }
    return t;
  }

  std::shared_ptr<SurfaceTerm> parse_term() {
    auto t = parse_term_head();
    // postfix explicit substitution: t[u/x], left-associative
    while (at(Tok::LBracket) && is_subst_bracket()) {
      next();  // '['
      auto arg = parse_term();
      expect(Tok::Slash, "'/'");
      Token var = expect(Tok::Ident, "a variable name");
      expect(Tok::RBracket, "']'");
      auto node = std::make_shared<SurfaceTerm>();
      node->kind = SurfaceTerm::Kind::Subst;
      node->body = t;
      node->arg = arg;
      node->subst_var = var.text;
      node->span = t->span;
      t = node;
    }
    return t;
  }

  std::shared_ptr<SurfaceTerm> parse_term_head() {
    Token head = expect(Tok::Ident, "a term");
    auto t = std::make_shared<SurfaceTerm>();
    t->name = head.text;
    t->span = head.span;
    bool saw_inst = false, saw_params = false;
    if (accept(Tok::Lt)) {
      saw_inst = true;
      t->has_inst = true;
      if (!at(Tok::Gt)) {
        t->inst.push_back(parse_type());
        while (accept(Tok::Comma)) t->inst.push_back(parse_type());
      }
      expect(Tok::Gt, "'>'");
    }
    if (at(Tok::LBracket) && !is_subst_bracket()) {
      // Either an operator's parameter-variable block or a placeholder
      // instantiation; disambiguated during elaboration via the head name.
      next();
      t->has_params = true;
      saw_params = true;
      if (!at(Tok::RBracket)) {
        t->bracket.push_back(parse_term());
        while (accept(Tok::Comma)) t->bracket.push_back(parse_term());
      }
      expect(Tok::RBracket, "']'");
    }
    if (at(Tok::LParen)) {
      next();
      t->kind = SurfaceTerm::Kind::Apply;
      if (!at(Tok::RParen)) {
        t->args.push_back(parse_arg());
        while (accept(Tok::Comma)) t->args.push_back(parse_arg());
      }
      expect(Tok::RParen, "')'");
    } else if (saw_params) {
      t->kind = SurfaceTerm::Kind::Bracket;
    } else if (saw_inst) {
      error("operator instantiation must be followed by an argument list");
    }
    return t;
  }

  // A '[' opens an explicit substitution iff a '/' occurs before the
  // matching ']' at depth 0.
  bool is_subst_bracket() const {
    std::size_t j = i_;
    int depth = 0;
    while (j < toks_.size()) {
      switch (toks_[j].kind) {
        case Tok::LBracket:
        case Tok::LParen:
          ++depth;
          break;
        case Tok::RBracket:
        case Tok::RParen:
          --depth;
          if (depth == 0) return false;
          break;
        case Tok::Slash:
          if (depth == 1) return true;
          break;
        case Tok::Newline:
        case Tok::End:
          return false;
        default:
          break;
      }
      ++j;
    }
    return false;
  }

  SurfaceArg parse_arg() {
    SurfaceArg arg;
    // "(x:T, ... . body)" — binders need lookahead: a '(' starts a binder
    // block iff a '.' occurs before the matching ')' at depth 1.
    if (at(Tok::LParen) && has_dot_at_depth1()) {
      next();
      for (;;) {
        Token name = expect(Tok::Ident, "a binder name");
        std::optional<SurfaceType> sort;
        if (accept(Tok::Colon)) sort = parse_type();
        arg.binders.emplace_back(name.text, std::move(sort));
        if (accept(Tok::Comma)) continue;
        break;
      }
      expect(Tok::Dot, "'.'");
      arg.body = parse_term();
      expect(Tok::RParen, "')'");
    } else {
      arg.body = parse_term();
    }
    return arg;
  }

  bool has_dot_at_depth1() const {
    std::size_t j = i_;
    int depth = 0;
    while (j < toks_.size()) {
      switch (toks_[j].kind) {
        case Tok::LParen:
        case Tok::LBracket:
          ++depth;
          break;
        case Tok::RParen:
        case Tok::RBracket:
          --depth;
          if (depth == 0) return false;
          break;
        case Tok::Dot:
          if (depth == 1) return true;
          break;
        case Tok::Newline:
        case Tok::End:
          return false;
        default:
          break;
      }
      ++j;
    }
    return false;
  }

  // Same lookahead when the opening '(' has already been consumed.
  bool dot_before_close() const {
    std::size_t j = i_;
    int depth = 1;
    while (j < toks_.size()) {
      switch (toks_[j].kind) {
        case Tok::LParen:
        case Tok::LBracket:
          ++depth;
          break;
        case Tok::RParen:
        case Tok::RBracket:
          --depth;
          if (depth == 0) return false;
          break;
        case Tok::Dot:
          if (depth == 1) return true;
          break;
        case Tok::Newline:
        case Tok::End:
          return false;
        default:
          break;
      }
      ++j;
    }
    return false;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t i_ = 0;
};

// ---- elaboration ---------------------------------------------------------------

struct MetaScope {
  std::vector<std::string> names;
  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }
};

TypeExpr elab_type(const Theory& th, const MetaScope& metas, const SurfaceType& t,
                   std::vector<Diagnostic>& diags) {
  if (!t.has_args) {
    if (auto m = metas.find(t.name)) return TypeExpr::meta(*m);
  }
  auto op = th.find_type_op(t.name);
  if (!op) {
    diags.push_back(Diagnostic{Code::UnknownIdentifier,
                               "unknown type '" + t.name + "'", "", t.span});
    throw Error(diags.back());
  }
  if (t.args.size() != th.type_ops[*op].arity) {
    diags.push_back(Diagnostic{
        Code::ArityMismatch,
        "type operator " + t.name + " expects " +
            std::to_string(th.type_ops[*op].arity) + " arguments, got " +
            std::to_string(t.args.size()),
        "", t.span});
    throw Error(diags.back());
  }
  std::vector<TypeExpr> args;
  args.reserve(t.args.size());
  for (const SurfaceType& a : t.args) args.push_back(elab_type(th, metas, a, diags));
  return TypeExpr::app(*op, std::move(args));
}

// Scope stack for term elaboration: context names plus binder names, and
// optionally the placeholder names of the enclosing equation.
struct TermScope {
  const Theory& th;
  MetaScope metas;
  std::vector<std::string> vars;  // position order (oldest first)
  const std::vector<std::string>* placeholders = nullptr;

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::size_t pos = vars.size() - 1 - i;
      if (vars[pos] == name) return i;  // innermost match wins
    }
    return std::nullopt;
  }
  std::optional<std::size_t> placeholder_index(const std::string& name) const {
    if (!placeholders) return std::nullopt;
    for (std::size_t i = 0; i < placeholders->size(); ++i)
      if ((*placeholders)[i] == name) return i;
    return std::nullopt;
  }
};

// Elaborates surface terms to MetaTerms; plain terms are the placeholder-free
// fragment. The flag tracks whether a Subst node occurred (only allowed when
// elaborating executable terms, not equation sides).
struct ElabResult {
  MetaTerm meta;          // valid when no Subst nodes occurred
  ExplicitTerm explicit_; // always valid in term mode
};

MetaTerm elab_meta_term(TermScope& scope, const SurfaceTerm& t,
                        std::vector<Diagnostic>& diags);

std::vector<MetaTerm> elab_meta_args(TermScope& scope, std::size_t op,
                                     const SurfaceTerm& t,
                                     std::vector<Diagnostic>& diags) {
  const Theory& th = scope.th;
  const SecondOrderArity& ar = th.term_ops[op].arity;
  if (t.args.size() != ar.premisses.size()) {
    diags.push_back(Diagnostic{
        Code::ArityMismatch,
        "operator " + t.name + " expects " + std::to_string(ar.premisses.size()) +
            " arguments, got " + std::to_string(t.args.size()),
        "", t.span});
    throw Error(diags.back());
  }
  std::vector<MetaTerm> args;
  args.reserve(t.args.size());
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    const SurfaceArg& a = t.args[i];
    if (a.binders.size() != ar.premisses[i].binders.size()) {
      diags.push_back(Diagnostic{
          Code::ArityMismatch,
          "argument " + std::to_string(i) + " of " + t.name + " binds " +
              std::to_string(ar.premisses[i].binders.size()) +
              " variables, got " + std::to_string(a.binders.size()),
          "", t.span});
      throw Error(diags.back());
    }
    for (const auto& [name, sort] : a.binders) scope.vars.push_back(name);
    args.push_back(elab_meta_term(scope, *a.body, diags));
    scope.vars.resize(scope.vars.size() - a.binders.size());
  }
  return args;
}

MetaTerm elab_meta_term(TermScope& scope, const SurfaceTerm& t,
                        std::vector<Diagnostic>& diags) {
  const Theory& th = scope.th;
  switch (t.kind) {
    case SurfaceTerm::Kind::Subst: {
      diags.push_back(Diagnostic{Code::SyntaxError,
                                 "explicit substitution is not allowed in "
                                 "equation sides; instantiate a placeholder "
                                 "instead",
                                 "", t.span});
      throw Error(diags.back());
    }
    case SurfaceTerm::Kind::Name: {
      if (auto i = scope.var_index(t.name)) return MetaTerm::var(*i);
      if (auto p = scope.placeholder_index(t.name)) return MetaTerm::mvar(*p, {});
      diags.push_back(Diagnostic{Code::UnknownIdentifier,
                                 "unknown variable '" + t.name + "'", "", t.span});
      throw Error(diags.back());
    }
    case SurfaceTerm::Kind::Bracket: {
      if (auto p = scope.placeholder_index(t.name)) {
        std::vector<MetaTerm> sub;
        sub.reserve(t.bracket.size());
        for (const auto& s : t.bracket)
          sub.push_back(elab_meta_term(scope, *s, diags));
        return MetaTerm::mvar(*p, std::move(sub));
      }
      diags.push_back(Diagnostic{Code::UnknownIdentifier,
                                 "'" + t.name + "' is not a placeholder", "",
                                 t.span});
      throw Error(diags.back());
    }
    case SurfaceTerm::Kind::Apply: {
      auto op = th.find_term_op(t.name);
      if (!op) {
        diags.push_back(Diagnostic{Code::UnknownIdentifier,
                                   "unknown term operator '" + t.name + "'", "",
                                   t.span});
        throw Error(diags.back());
      }
      const SecondOrderArity& ar = th.term_ops[*op].arity;
      std::vector<TypeExpr> inst;
      if (ar.meta_count > 0 && !t.has_inst) {
        diags.push_back(Diagnostic{
            Code::SyntaxError,
            "operator " + t.name + " requires an explicit instantiation <...>",
            "", t.span});
        throw Error(diags.back());
      }
      if (t.inst.size() != ar.meta_count) {
        diags.push_back(Diagnostic{
            Code::ArityMismatch,
            "operator " + t.name + " expects " + std::to_string(ar.meta_count) +
                " type instantiations, got " + std::to_string(t.inst.size()),
            "", t.span});
        throw Error(diags.back());
      }
      for (const SurfaceType& s : t.inst)
        inst.push_back(elab_type(th, scope.metas, s, diags));
      std::vector<std::size_t> params;
      if (t.bracket.size() != ar.parameters.size() &&
          !(ar.parameters.empty() && !t.has_params)) {
        diags.push_back(Diagnostic{
            Code::ArityMismatch,
            "operator " + t.name + " expects " +
                std::to_string(ar.parameters.size()) + " parameter variables",
            "", t.span});
        throw Error(diags.back());
      }
      for (const auto& s : t.bracket) {
        if (s->kind != SurfaceTerm::Kind::Name) {
          diags.push_back(Diagnostic{Code::SyntaxError,
                                     "parameter slots take variable names", "",
                                     s->span});
          throw Error(diags.back());
        }
        auto i = scope.var_index(s->name);
        if (!i) {
          diags.push_back(Diagnostic{Code::UnknownIdentifier,
                                     "unknown variable '" + s->name + "'", "",
                                     s->span});
          throw Error(diags.back());
        }
        params.push_back(*i);
      }
      std::vector<MetaTerm> args = elab_meta_args(scope, *op, t, diags);
      return MetaTerm::make_op(*op, std::move(inst), std::move(params),
                               std::move(args));
    }
  }
  throw Error(Code::Internal, "invalid surface term");
}

// Plain-term elaboration produces ExplicitTerms; binder sorts are derived
// from the operator and optional annotations are verified against them.
struct TermElab {
  const Theory& th;
  NamedContext scope;  // mutated as we walk under binders
  std::vector<Diagnostic>& diags;

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < scope.names.size(); ++i) {
      std::size_t pos = scope.names.size() - 1 - i;
      if (scope.names[pos] == name) return i;
    }
    return std::nullopt;
  }

  ExplicitTerm run(const SurfaceTerm& t) {
    switch (t.kind) {
      case SurfaceTerm::Kind::Name: {
        if (auto i = var_index(t.name)) return ExplicitTerm::var(*i);
        diags.push_back(Diagnostic{Code::UnboundVariable,
                                   "unknown variable '" + t.name + "'", "",
                                   t.span});
        throw Error(diags.back());
      }
      case SurfaceTerm::Kind::Bracket: {
        diags.push_back(Diagnostic{Code::SyntaxError,
                                   "placeholders are only available inside "
                                   "equation declarations",
                                   "", t.span});
        throw Error(diags.back());
      }
      case SurfaceTerm::Kind::Subst: {
        ExplicitTerm arg = run(*t.arg);
        Result<TypeExpr> sort = check_explicit(th, scope.ctx, arg);
        if (!sort.ok()) {
          diags.push_back(sort.diagnostics().front());
          throw Error(diags.back());
        }
        scope.ctx.sorts.push_back(sort.value());
        scope.names.push_back(t.subst_var);
        ExplicitTerm body = run(*t.body);
        scope.ctx.sorts.pop_back();
        scope.names.pop_back();
        return ExplicitTerm::subst(std::move(body), std::move(arg));
      }
      case SurfaceTerm::Kind::Apply: {
        auto op = th.find_term_op(t.name);
        if (!op) {
          diags.push_back(Diagnostic{Code::UnknownIdentifier,
                                     "unknown term operator '" + t.name + "'",
                                     "", t.span});
          throw Error(diags.back());
        }
        const SecondOrderArity& ar = th.term_ops[*op].arity;
        if (ar.meta_count > 0 && !t.has_inst) {
          diags.push_back(Diagnostic{
              Code::SyntaxError,
              "operator " + t.name + " requires an explicit instantiation <...>",
              "", t.span});
          throw Error(diags.back());
        }
        if (t.inst.size() != ar.meta_count) {
          diags.push_back(Diagnostic{
              Code::ArityMismatch,
              "operator " + t.name + " expects " + std::to_string(ar.meta_count) +
                  " type instantiations, got " + std::to_string(t.inst.size()),
              "", t.span});
          throw Error(diags.back());
        }
        std::vector<TypeExpr> inst;
        MetaScope no_metas;
        for (const SurfaceType& s : t.inst) {
          TypeExpr e = elab_type(th, no_metas, s, diags);
          inst.push_back(ty_normalize(th, e));
        }
        if (t.bracket.size() != ar.parameters.size() &&
            !(ar.parameters.empty() && !t.has_params)) {
          diags.push_back(Diagnostic{
              Code::ArityMismatch,
              "operator " + t.name + " expects " +
                  std::to_string(ar.parameters.size()) + " parameter variables",
              "", t.span});
          throw Error(diags.back());
        }
        std::vector<std::size_t> params;
        for (const auto& s : t.bracket) {
          if (s->kind != SurfaceTerm::Kind::Name) {
            diags.push_back(Diagnostic{Code::SyntaxError,
                                       "parameter slots take variable names", "",
                                       s->span});
            throw Error(diags.back());
          }
          auto i = var_index(s->name);
          if (!i) {
            diags.push_back(Diagnostic{Code::UnboundVariable,
                                       "unknown variable '" + s->name + "'", "",
                                       s->span});
            throw Error(diags.back());
          }
          params.push_back(*i);
        }
        if (t.args.size() != ar.premisses.size()) {
          diags.push_back(Diagnostic{
              Code::ArityMismatch,
              "operator " + t.name + " expects " +
                  std::to_string(ar.premisses.size()) + " arguments, got " +
                  std::to_string(t.args.size()),
              "", t.span});
          throw Error(diags.back());
        }
        std::vector<ExplicitTerm> args;
        args.reserve(t.args.size());
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          const SurfaceArg& a = t.args[i];
          if (a.binders.size() != ar.premisses[i].binders.size()) {
            diags.push_back(Diagnostic{
                Code::ArityMismatch,
                "argument " + std::to_string(i) + " of " + t.name + " binds " +
                    std::to_string(ar.premisses[i].binders.size()) +
                    " variables, got " + std::to_string(a.binders.size()),
                "", t.span});
            throw Error(diags.back());
          }
          for (std::size_t j = 0; j < a.binders.size(); ++j) {
            TypeExpr derived = ty_normalize(
                th, ty_subst(ar.premisses[i].binders[j], inst));
            if (a.binders[j].second) {
              TypeExpr annotated =
                  elab_type(th, no_metas, *a.binders[j].second, diags);
              if (!ty_equal(th, annotated, derived)) {
                diags.push_back(Diagnostic{
                    Code::SortMismatch,
                    "binder annotation for '" + a.binders[j].first +
                        "' does not match the operator's binder sort",
                    "", t.span});
                throw Error(diags.back());
              }
            }
            scope.ctx.sorts.push_back(derived);
            scope.names.push_back(a.binders[j].first);
          }
          args.push_back(run(*a.body));
          scope.ctx.sorts.resize(scope.ctx.sorts.size() - a.binders.size());
          scope.names.resize(scope.names.size() - a.binders.size());
        }
        return ExplicitTerm::make_op(*op, std::move(inst), std::move(params),
                                     std::move(args));
      }
    }
    throw Error(Code::Internal, "invalid surface term");
  }
};

// ---- theory statements ----------------------------------------------------------

struct TheoryParser {
  Parser& p;
  std::vector<Diagnostic>& diags;
  Theory th;

  MetaScope parse_meta_block() {
    MetaScope metas;
    if (p.accept(Tok::LBracket)) {
      while (p.at(Tok::Ident)) metas.names.push_back(p.next().text);
      p.expect(Tok::RBracket, "']'");
    }
    return metas;
  }

  // "(x:T, ... . T)" or "(T)": premisses of term declarations.
  Premiss parse_premiss(const MetaScope& metas) {
    Premiss pr;
    p.expect(Tok::LParen, "'('");
    if (p.dot_before_close()) {
      for (;;) {
        p.expect(Tok::Ident, "a binder name");
        p.expect(Tok::Colon, "':'");
        pr.binders.push_back(elab_type(th, metas, p.parse_type(), diags));
        if (p.accept(Tok::Comma)) continue;
        break;
      }
      p.expect(Tok::Dot, "'.'");
    }
    pr.result = elab_type(th, metas, p.parse_type(), diags);
    p.expect(Tok::RParen, "')'");
    return pr;
  }

  void type_stmt() {
    Token name = p.expect(Tok::Ident, "a type operator name");
    p.expect(Tok::Slash, "'/'");
    Token arity = p.expect(Tok::Number, "an arity");
    th.type_ops.push_back(TypeOp{name.text, std::stoul(arity.text)});
  }

  void tyeq_stmt() {
    MetaScope metas = parse_meta_block();
    TypeEquation eq;
    eq.meta_count = metas.names.size();
    eq.lhs = elab_type(th, metas, p.parse_type(), diags);
    p.expect(Tok::EqEq, "'=='");
    eq.rhs = elab_type(th, metas, p.parse_type(), diags);
    eq.orientation = parse_orientation();
    th.type_eqs.push_back(std::move(eq));
  }

  Orientation parse_orientation() {
    Token kw = p.expect(Tok::Ident, "'orient'");
    if (kw.text != "orient") p.error("expected 'orient'");
    Token which = p.expect(Tok::Ident, "'ltr' or 'none'");
    if (which.text == "ltr") return Orientation::LeftToRight;
    if (which.text == "none") return Orientation::Unoriented;
    p.error("expected 'ltr' or 'none'");
    return Orientation::Unoriented;
  }

  void term_stmt() {
    Token name = p.expect(Tok::Ident, "a term operator name");
    MetaScope metas = parse_meta_block();
    SecondOrderArity ar;
    ar.meta_count = metas.names.size();
    p.expect(Tok::Colon, "':'");
    if (!p.at(Tok::Arrow)) {
      ar.premisses.push_back(parse_premiss(metas));
      while (p.accept(Tok::Comma)) ar.premisses.push_back(parse_premiss(metas));
    }
    p.expect(Tok::Arrow, "'->'");
    if (p.accept(Tok::LBracket)) {
      if (!p.at(Tok::RBracket)) {
        for (;;) {
          p.expect(Tok::Ident, "a parameter name");
          p.expect(Tok::Colon, "':'");
          ar.parameters.push_back(elab_type(th, metas, p.parse_type(), diags));
          if (p.accept(Tok::Comma)) continue;
          break;
        }
      }
      p.expect(Tok::RBracket, "']'");
    }
    ar.result = elab_type(th, metas, p.parse_type(), diags);
    th.term_ops.push_back(TermOp{name.text, std::move(ar)});
  }

  void eq_stmt() {
    Token name = p.expect(Tok::Ident, "an equation name");
    MetaScope metas = parse_meta_block();
    TermEquation eq;
    eq.name = name.text;
    eq.meta_count = metas.names.size();
    // placeholder declarations "(t : (x:T, ...) T)"
    while (p.at(Tok::LParen)) {
      p.next();
      Token ph_name = p.expect(Tok::Ident, "a placeholder name");
      p.expect(Tok::Colon, "':'");
      Premiss ph;
      if (p.at(Tok::LParen)) {
        p.next();
        if (!p.at(Tok::RParen)) {
          for (;;) {
            p.expect(Tok::Ident, "a binder name");
            p.expect(Tok::Colon, "':'");
            ph.binders.push_back(elab_type(th, metas, p.parse_type(), diags));
            if (p.accept(Tok::Comma)) continue;
            break;
          }
        }
        p.expect(Tok::RParen, "')'");
      }
      ph.result = elab_type(th, metas, p.parse_type(), diags);
      p.expect(Tok::RParen, "')'");
      eq.placeholders.push_back(std::move(ph));
      eq.placeholder_names.push_back(ph_name.text);
      if (!p.accept(Tok::Comma)) break;
    }
    p.expect(Tok::Colon, "':'");
    // parameter context "[x:T, ...]"
    std::vector<std::string> param_names;
    p.expect(Tok::LBracket, "'[' (the parameter context)");
    if (!p.at(Tok::RBracket)) {
      for (;;) {
        Token v = p.expect(Tok::Ident, "a parameter variable name");
        p.expect(Tok::Colon, "':'");
        eq.param_context.push_back(elab_type(th, metas, p.parse_type(), diags));
        param_names.push_back(v.text);
        if (p.accept(Tok::Comma)) continue;
        break;
      }
    }
    p.expect(Tok::RBracket, "']'");
    eq.result = elab_type(th, metas, p.parse_type(), diags);
    p.expect(Tok::Eq, "'='");
    auto lhs_surface = p.parse_term();
    p.expect(Tok::EqEq, "'=='");
    auto rhs_surface = p.parse_term();
    eq.orientation = parse_orientation();

    TermScope scope{th, metas, param_names, &eq.placeholder_names};
    eq.lhs = elab_meta_term(scope, *lhs_surface, diags);
    scope.vars = param_names;
    eq.rhs = elab_meta_term(scope, *rhs_surface, diags);
    th.term_eqs.push_back(std::move(eq));
  }

  void run() {
    p.skip_newlines();
    while (!p.at(Tok::End)) {
      Token head = p.peek();
      if (head.kind != Tok::Ident) {
        diags.push_back(Diagnostic{Code::SyntaxError, "expected a declaration",
                                   "", head.span});
        p.skip_line();
        continue;
      }
      try {
        p.next();
        if (head.text == "theory") {
          th.name = p.expect(Tok::Ident, "a theory name").text;
        } else if (head.text == "type") {
          type_stmt();
        } else if (head.text == "tyeq") {
          tyeq_stmt();
        } else if (head.text == "term") {
          term_stmt();
        } else if (head.text == "eq") {
          eq_stmt();
        } else {
          diags.push_back(Diagnostic{Code::SyntaxError,
                                     "unknown declaration '" + head.text + "'",
                                     "", head.span});
          p.skip_line();
          continue;
        }
        if (!p.at(Tok::End) && !p.accept(Tok::Newline)) {
          diags.push_back(Diagnostic{Code::SyntaxError,
                                     "unexpected input after declaration", "",
                                     p.peek().span});
          p.skip_line();
        }
        p.skip_newlines();
      } catch (const Error&) {
        p.skip_line();
        p.skip_newlines();
      }
    }
  }
};

}  // namespace

Result<Theory> parse_theory(std::string_view text, std::string filename) {
  std::vector<Diagnostic> diags;
  Lexer lexer(text, std::move(filename));
  std::vector<Token> toks = lexer.run(diags);
  Parser parser(std::move(toks), diags);
  TheoryParser tp{parser, diags, Theory{}};
  tp.run();
  if (!diags.empty()) return diags;
  return tp.th;
}

Result<NamedContext> parse_context(const Theory& theory, std::string_view text,
                                   std::string filename) {
  std::vector<Diagnostic> diags;
  Lexer lexer(text, std::move(filename));
  std::vector<Token> toks = lexer.run(diags);
  Parser p(std::move(toks), diags);
  NamedContext out;
  try {
    p.skip_newlines();
    if (!p.at(Tok::End)) {
      for (;;) {
        Token name = p.expect(Tok::Ident, "a variable name");
        p.expect(Tok::Colon, "':'");
        MetaScope no_metas;
        TypeExpr sort = elab_type(theory, no_metas, p.parse_type(), diags);
        if (!sort.is_ground())
          diags.push_back(
              Diagnostic{Code::SyntaxError, "context sorts must be ground", "",
                         name.span});
        out.ctx.sorts.push_back(ty_normalize(theory, sort));
        out.names.push_back(name.text);
        if (p.accept(Tok::Comma)) continue;
        break;
      }
      p.skip_newlines();
      if (!p.at(Tok::End))
        diags.push_back(Diagnostic{Code::SyntaxError,
                                   "unexpected input after context", "",
                                   p.peek().span});
    }
  } catch (const Error&) {
    // diagnostics already recorded
  }
  if (!diags.empty()) return diags;
  return out;
}

Result<ExplicitTerm> parse_term(const Theory& theory, const NamedContext& ctx,
                                std::string_view text, std::string filename) {
  std::vector<Diagnostic> diags;
  Lexer lexer(text, std::move(filename));
  std::vector<Token> toks = lexer.run(diags);
  Parser p(std::move(toks), diags);
  try {
    p.skip_newlines();
    auto surface = p.parse_term();
    p.skip_newlines();
    if (!p.at(Tok::End))
      diags.push_back(Diagnostic{Code::SyntaxError, "unexpected input after term",
                                 "", p.peek().span});
    if (diags.empty()) {
      TermElab elab{theory, ctx, diags};
      ExplicitTerm t = elab.run(*surface);
      if (diags.empty()) return t;
    }
  } catch (const Error&) {
    // diagnostics already recorded
  }
  return diags;
}

Result<Term> as_pure_term(const ExplicitTerm& t) {
  switch (t.kind()) {
    case ExplicitTerm::Kind::Var:
      return Term::var(t.var_index());
    case ExplicitTerm::Kind::Subst:
      return Diagnostic{Code::SyntaxError,
                        "term contains an explicit substitution; normalize to "
                        "eliminate it",
                        "", std::nullopt};
    case ExplicitTerm::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const ExplicitTerm& a : t.args()) {
        Result<Term> sub = as_pure_term(a);
        if (!sub.ok()) return sub;
        args.push_back(sub.value());
      }
      return Term::make_op(t.op(), t.inst(), t.params(), std::move(args));
    }
  }
  return Diagnostic{Code::Internal, "invalid explicit term", "", std::nullopt};
}

// ---- printing -------------------------------------------------------------

std::string meta_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "M" + std::to_string(index);
}

std::vector<std::string> default_names(const Context& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (std::size_t p = 0; p < ctx.size(); ++p) names.push_back("x" + std::to_string(p));
  return names;
}

namespace {

std::string print_type_with(const Theory& th, const TypeExpr& t,
                            const std::vector<std::string>* meta_names) {
  if (!t.valid()) return "<invalid>";
  if (t.is_meta()) {
    if (meta_names && t.meta_index() < meta_names->size())
      return (*meta_names)[t.meta_index()];
    return meta_name(t.meta_index());
  }
  std::string out = t.op() < th.type_ops.size() ? th.type_ops[t.op()].name
                                                : "?op" + std::to_string(t.op());
  if (!t.args().empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ",";
      out += print_type_with(th, t.args()[i], meta_names);
    }
    out += ")";
  }
  return out;
}

std::string fresh_name(std::vector<std::string>& names, std::size_t position) {
  std::string name = "x" + std::to_string(position);
  while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
  return name;
}

struct TermPrinter {
  const Theory& th;
  std::vector<std::string> names;  // position order
  const std::vector<std::string>* meta_names = nullptr;

  std::string var(std::size_t index) const {
    if (index >= names.size()) return "?v" + std::to_string(index);
    return names[names.size() - 1 - index];
  }

  std::string head(std::size_t op, const std::vector<TypeExpr>& inst,
                   const std::vector<std::size_t>& params) {
    std::string out = th.term_ops[op].name;
    if (!inst.empty()) {
      out += "<";
      for (std::size_t i = 0; i < inst.size(); ++i) {
        if (i) out += ",";
        out += print_type_with(th, inst[i], meta_names);
      }
      out += ">";
    }
    if (!params.empty()) {
      out += "[";
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += var(params[i]);
      }
      out += "]";
    }
    return out;
  }

  std::string print(const Term& t) {
    if (t.is_var()) return var(t.var_index());
    return print_op(t);
  }

  std::string print_op(const Term& t) {
    const SecondOrderArity& ar = th.term_ops[t.op()].arity;
    std::string out = head(t.op(), t.inst(), t.params());
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      std::size_t k = ar.premisses[i].binders.size();
      if (k > 0) out += "(";
      std::size_t base = names.size();
      for (std::size_t j = 0; j < k; ++j) {
        std::string name = fresh_name(names, names.size());
        TypeExpr sort = ty_subst(ar.premisses[i].binders[j], t.inst());
        out += (j ? ", " : "") + name + ":" + print_type_with(th, sort, meta_names);
        names.push_back(name);
      }
      if (k > 0) out += ". ";
      out += print(t.args()[i]);
      if (k > 0) {
        out += ")";
        names.resize(base);
      }
    }
    out += ")";
    return out;
  }
};

}  // namespace

std::string print_type(const Theory& theory, const TypeExpr& t) {
  return print_type_with(theory, t, nullptr);
}

std::string print_type(const Theory& theory, const TypeExpr& t,
                       const std::vector<std::string>& meta_names) {
  return print_type_with(theory, t, &meta_names);
}

std::string print_context(const Theory& theory, const NamedContext& ctx) {
  std::string out;
  for (std::size_t p = 0; p < ctx.ctx.size(); ++p) {
    if (p) out += ", ";
    out += ctx.names[p] + ":" + print_type(theory, ctx.ctx[p]);
  }
  return out;
}

std::string print_term(const Theory& theory,
                       const std::vector<std::string>& ctx_names, const Term& t) {
  TermPrinter printer{theory, ctx_names, nullptr};
  return printer.print(t);
}

namespace {

struct ExplicitPrinter {
  const Theory& th;
  std::vector<std::string> names;

  std::string print(const ExplicitTerm& t) {
    switch (t.kind()) {
      case ExplicitTerm::Kind::Var: {
        std::size_t index = t.var_index();
        if (index >= names.size()) return "?v" + std::to_string(index);
        return names[names.size() - 1 - index];
      }
      case ExplicitTerm::Kind::Subst: {
        std::string arg = print(t.arg());
        std::string name = fresh_name(names, names.size());
        names.push_back(name);
        std::string body = print(t.body());
        names.pop_back();
        // parenthesize variable bodies to keep the bracket attached
        return body + "[" + arg + "/" + name + "]";
      }
      case ExplicitTerm::Kind::Op: {
        const SecondOrderArity& ar = th.term_ops[t.op()].arity;
        std::string out = th.term_ops[t.op()].name;
        if (!t.inst().empty()) {
          out += "<";
          for (std::size_t i = 0; i < t.inst().size(); ++i) {
            if (i) out += ",";
            out += print_type_with(th, t.inst()[i], nullptr);
          }
          out += ">";
        }
        if (!t.params().empty()) {
          out += "[";
          for (std::size_t i = 0; i < t.params().size(); ++i) {
            if (i) out += ",";
            std::size_t index = t.params()[i];
            out += index < names.size() ? names[names.size() - 1 - index]
                                        : "?v" + std::to_string(index);
          }
          out += "]";
        }
        out += "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) out += ", ";
          std::size_t k = ar.premisses[i].binders.size();
          std::size_t base = names.size();
          if (k > 0) out += "(";
          for (std::size_t j = 0; j < k; ++j) {
            std::string name = fresh_name(names, names.size());
            TypeExpr sort = ty_subst(ar.premisses[i].binders[j], t.inst());
            out += (j ? ", " : "") + name + ":" + print_type_with(th, sort, nullptr);
            names.push_back(name);
          }
          if (k > 0) out += ". ";
          out += print(t.args()[i]);
          if (k > 0) {
            out += ")";
            names.resize(base);
          }
        }
        out += ")";
        return out;
      }
    }
    return "<invalid>";
  }
};

struct MetaTermPrinter {
  const Theory& th;
  const TermEquation& eq;
  std::vector<std::string> names;  // parameter context then binders
  std::vector<std::string> meta_names;

  std::string print(const MetaTerm& t) {
    switch (t.kind()) {
      case MetaTerm::Kind::Var: {
        std::size_t index = t.var_index();
        if (index >= names.size()) return "?v" + std::to_string(index);
        return names[names.size() - 1 - index];
      }
      case MetaTerm::Kind::MVar: {
        std::string out = eq.placeholder_names.size() > t.placeholder()
                              ? eq.placeholder_names[t.placeholder()]
                              : "p" + std::to_string(t.placeholder());
        if (!t.sub().empty()) {
          out += "[";
          for (std::size_t i = 0; i < t.sub().size(); ++i) {
            if (i) out += ", ";
            out += print(t.sub()[i]);
          }
          out += "]";
        }
        return out;
      }
      case MetaTerm::Kind::Op: {
        const SecondOrderArity& ar = th.term_ops[t.op()].arity;
        std::string out = th.term_ops[t.op()].name;
        if (!t.inst().empty()) {
          out += "<";
          for (std::size_t i = 0; i < t.inst().size(); ++i) {
            if (i) out += ",";
            out += print_type_with(th, t.inst()[i], &meta_names);
          }
          out += ">";
        }
        if (!t.params().empty()) {
          out += "[";
          for (std::size_t i = 0; i < t.params().size(); ++i) {
            if (i) out += ",";
            std::size_t index = t.params()[i];
            out += index < names.size() ? names[names.size() - 1 - index]
                                        : "?v" + std::to_string(index);
          }
          out += "]";
        }
        out += "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) out += ", ";
          std::size_t k = ar.premisses[i].binders.size();
          std::size_t base = names.size();
          if (k > 0) out += "(";
          for (std::size_t j = 0; j < k; ++j) {
            std::string name = fresh_name(names, names.size());
            TypeExpr sort = ty_subst(ar.premisses[i].binders[j], t.inst());
            out += (j ? ", " : "") + name + ":" +
                   print_type_with(th, sort, &meta_names);
            names.push_back(name);
          }
          if (k > 0) out += ". ";
          out += print(t.args()[i]);
          if (k > 0) {
            out += ")";
            names.resize(base);
          }
        }
        out += ")";
        return out;
      }
    }
    return "<invalid>";
  }
};

std::vector<std::string> meta_names_for(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(meta_name(i));
  return names;
}

}  // namespace

std::string print_explicit(const Theory& theory,
                           const std::vector<std::string>& ctx_names,
                           const ExplicitTerm& t) {
  ExplicitPrinter printer{theory, ctx_names};
  return printer.print(t);
}

std::string print_theory(const Theory& theory) {
  std::string out;
  if (!theory.name.empty()) out += "theory " + theory.name + "\n\n";
  for (const TypeOp& op : theory.type_ops)
    out += "type " + op.name + "/" + std::to_string(op.arity) + "\n";
  if (!theory.type_ops.empty()) out += "\n";
  for (const TypeEquation& eq : theory.type_eqs) {
    std::vector<std::string> metas = meta_names_for(eq.meta_count);
    out += "tyeq [";
    for (std::size_t i = 0; i < metas.size(); ++i)
      out += (i ? " " : "") + metas[i];
    out += "] " + print_type(theory, eq.lhs, metas) + " == " +
           print_type(theory, eq.rhs, metas) + " orient " +
           (eq.orientation == Orientation::LeftToRight ? "ltr" : "none") + "\n";
  }
  if (!theory.type_eqs.empty()) out += "\n";
  for (const TermOp& op : theory.term_ops) {
    const SecondOrderArity& ar = op.arity;
    std::vector<std::string> metas = meta_names_for(ar.meta_count);
    out += "term " + op.name + " [";
    for (std::size_t i = 0; i < metas.size(); ++i)
      out += (i ? " " : "") + metas[i];
    out += "] : ";
    for (std::size_t i = 0; i < ar.premisses.size(); ++i) {
      if (i) out += ", ";
      out += "(";
      for (std::size_t j = 0; j < ar.premisses[i].binders.size(); ++j) {
        out += (j ? ", " : "") + ("x" + std::to_string(j)) + ":" +
               print_type(theory, ar.premisses[i].binders[j], metas);
      }
      if (!ar.premisses[i].binders.empty()) out += ". ";
      out += print_type(theory, ar.premisses[i].result, metas) + ")";
    }
    out += ar.premisses.empty() ? "-> " : " -> ";
    if (!ar.parameters.empty()) {
      out += "[";
      for (std::size_t j = 0; j < ar.parameters.size(); ++j)
        out += (j ? ", " : "") + ("y" + std::to_string(j)) + ":" +
               print_type(theory, ar.parameters[j], metas);
      out += "] ";
    }
    out += print_type(theory, ar.result, metas) + "\n";
  }
  if (!theory.term_ops.empty()) out += "\n";
  for (const TermEquation& eq : theory.term_eqs) {
    std::vector<std::string> metas = meta_names_for(eq.meta_count);
    out += "eq " + (eq.name.empty() ? "unnamed" : eq.name) + " [";
    for (std::size_t i = 0; i < metas.size(); ++i)
      out += (i ? " " : "") + metas[i];
    out += "] ";
    for (std::size_t i = 0; i < eq.placeholders.size(); ++i) {
      if (i) out += ", ";
      const Premiss& ph = eq.placeholders[i];
      out += "(" +
             (i < eq.placeholder_names.size() ? eq.placeholder_names[i]
                                              : "p" + std::to_string(i)) +
             " : ";
      if (!ph.binders.empty()) {
        out += "(";
        for (std::size_t j = 0; j < ph.binders.size(); ++j)
          out += (j ? ", " : "") + ("x" + std::to_string(j)) + ":" +
                 print_type(theory, ph.binders[j], metas);
        out += ") ";
      }
      out += print_type(theory, ph.result, metas) + ")";
    }
    out += eq.placeholders.empty() ? ": [" : " : [";
    std::vector<std::string> param_names;
    for (std::size_t q = 0; q < eq.param_context.size(); ++q) {
      param_names.push_back("y" + std::to_string(q));
      out += (q ? ", " : "") + param_names.back() + ":" +
             print_type(theory, eq.param_context[q], metas);
    }
    out += "] " + print_type(theory, eq.result, metas) + " = ";
    MetaTermPrinter lhs{theory, eq, param_names, metas};
    MetaTermPrinter rhs{theory, eq, param_names, metas};
    out += lhs.print(eq.lhs) + " == " + rhs.print(eq.rhs) + " orient " +
           (eq.orientation == Orientation::LeftToRight ? "ltr" : "none") + "\n";
  }
  return out;
}

}  // namespace stt
