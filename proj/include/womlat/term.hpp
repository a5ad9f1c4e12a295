// Copyright 2026 The womlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Lattice terms and (quasi-)identities in an ASCII syntax:
//
//   formula := quasis | cmp
//   quasis  := cmp ('&' cmp)* '=>' cmp
//   cmp     := term ('=' | '<=') term
//   term    := disj ('->' term)?
//   disj    := conj ('\/' conj)*
//   conj    := prod ('/\' prod)*
//   prod    := post ('*' post)*
//   post    := atom "'"*
//   atom    := ident | '0' | '1' | '(' term ')'

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "womlat/algebra.hpp"

namespace womlat {

enum class TermKind { Var, Zero, One, Join, Meet, Comp, Arrow, Prod };

struct Term {
  TermKind kind = TermKind::Zero;
  std::string name;         // Var only
  std::vector<Term> args;   // 1 for Comp, 2 for binary nodes

  static Term var(std::string n) { return {TermKind::Var, std::move(n), {}}; }
  static Term zero() { return {TermKind::Zero, {}, {}}; }
  static Term one() { return {TermKind::One, {}, {}}; }
  static Term comp(Term t) { return {TermKind::Comp, {}, {std::move(t)}}; }
  static Term binary(TermKind k, Term a, Term b) {
    return {k, {}, {std::move(a), std::move(b)}};
  }
  static Term join(Term a, Term b) { return binary(TermKind::Join, std::move(a), std::move(b)); }
  static Term meet(Term a, Term b) { return binary(TermKind::Meet, std::move(a), std::move(b)); }
  static Term arrow(Term a, Term b) { return binary(TermKind::Arrow, std::move(a), std::move(b)); }
  static Term prod(Term a, Term b) { return binary(TermKind::Prod, std::move(a), std::move(b)); }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Relation { Eq, Leq };

struct Atomic {
  Relation rel = Relation::Eq;
  Term lhs;
  Term rhs;
  friend bool operator==(const Atomic&, const Atomic&) = default;
};

/// An equation or inequality, optionally guarded by hypotheses. A formula
/// with non-empty `hypotheses` is a quasi-identity.
struct Formula {
  std::vector<Atomic> hypotheses;
  Atomic conclusion;

  bool is_quasi() const noexcept { return !hypotheses.empty(); }
  friend bool operator==(const Formula&, const Formula&) = default;
};

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int precedence(TermKind k) {
  switch (k) {
    case TermKind::Arrow: return 1;
    case TermKind::Join: return 2;
    case TermKind::Meet: return 3;
    case TermKind::Prod: return 4;
    case TermKind::Comp: return 5;
    default: return 6;
  }
}

inline std::string_view op_token(TermKind k) {
  switch (k) {
    case TermKind::Arrow: return " -> ";
    case TermKind::Join: return " \\/ ";
    case TermKind::Meet: return " /\\ ";
    case TermKind::Prod: return " * ";
    default: return "";
  }
}

inline void print_term(const Term& t, std::string& out) {
  auto child = [&](const Term& c, bool parens) {
    if (parens) out += '(';
    print_term(c, out);
    if (parens) out += ')';
  };
  switch (t.kind) {
    case TermKind::Var: out += t.name; return;
    case TermKind::Zero: out += '0'; return;
    case TermKind::One: out += '1'; return;
    case TermKind::Comp:
      child(t.args[0], precedence(t.args[0].kind) < precedence(TermKind::Comp));
      out += '\'';
      return;
    default: break;
  }
  const int p = precedence(t.kind);
  const int lp = precedence(t.args[0].kind);
  const int rp = precedence(t.args[1].kind);
  // -> is right-associative, the others left-associative.
  const bool right_assoc = t.kind == TermKind::Arrow;
  child(t.args[0], right_assoc ? lp <= p : lp < p);
  out += op_token(t.kind);
  child(t.args[1], right_assoc ? rp < p : rp <= p);
}

inline std::string print_atomic(const Atomic& a) {
  std::string out;
  print_term(a.lhs, out);
  out += a.rel == Relation::Eq ? " = " : " <= ";
  print_term(a.rhs, out);
  return out;
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out);
  return out;
}

inline std::string to_string(const Formula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.hypotheses.size(); ++i) {
    if (i) out += " & ";
    out += detail::print_atomic(f.hypotheses[i]);
  }
  if (f.is_quasi()) out += " => ";
  out += detail::print_atomic(f.conclusion);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

enum class Tok {
  Ident, Zero, One, LParen, RParen, Prime, Star, Meet, Join, Arrow,
  Eq, Leq, Amp, Implies, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      auto lit = s.substr(i, j - i);
      if (lit == "0") out.push_back({Tok::Zero, "0", i});
      else if (lit == "1") out.push_back({Tok::One, "1", i});
      else throw Error(ErrorKind::UnknownSymbol,
                       "'" + std::string(lit) + "' at position " + std::to_string(i),
                       {std::string(lit)});
      i = j;
      continue;
    }
    struct Fixed { std::string_view text; Tok kind; };
    static constexpr Fixed fixed[] = {
        {"\\/", Tok::Join}, {"/\\", Tok::Meet}, {"->", Tok::Arrow}, {"<=", Tok::Leq},
        {"=>", Tok::Implies}, {"=", Tok::Eq}, {"&", Tok::Amp}, {"*", Tok::Star},
        {"'", Tok::Prime}, {"(", Tok::LParen}, {")", Tok::RParen}};
    bool matched = false;
    for (const auto& f : fixed) {
      if (starts(f.text)) {
        out.push_back({f.kind, std::string(f.text), i});
        i += f.text.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw Error(ErrorKind::UnknownSymbol,
                  std::string("'") + c + "' at position " + std::to_string(i),
                  {std::string(1, c)});
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Term term_only() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  std::variant<Term, Formula> any() {
    Term t = term();
    if (peek() == Tok::End) return t;
    Formula f = formula_after(std::move(t));
    expect(Tok::End, "end of input");
    return f;
  }

  Formula formula_only() {
    Formula f = formula_after(term());
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  Formula formula_after(Term first) {
    Formula f;
    Atomic a = cmp_after(std::move(first));
    if (peek() != Tok::Amp && peek() != Tok::Implies) {
      f.conclusion = std::move(a);
      return f;
    }
    f.hypotheses.push_back(std::move(a));
    while (accept(Tok::Amp)) f.hypotheses.push_back(cmp_after(term()));
    expect(Tok::Implies, "'=>'");
    f.conclusion = cmp_after(term());
    return f;
  }

  Atomic cmp_after(Term lhs) {
    Atomic a;
    if (accept(Tok::Eq)) a.rel = Relation::Eq;
    else if (accept(Tok::Leq)) a.rel = Relation::Leq;
    else fail("'=' or '<='");
    a.lhs = std::move(lhs);
    a.rhs = term();
    return a;
  }

  Term term() {
    Term t = disj();
    if (accept(Tok::Arrow)) return Term::arrow(std::move(t), term());
    return t;
  }

  Term disj() {
    Term t = conj();
    while (accept(Tok::Join)) t = Term::join(std::move(t), conj());
    return t;
  }

  Term conj() {
    Term t = prod();
    while (accept(Tok::Meet)) t = Term::meet(std::move(t), prod());
    return t;
  }

  Term prod() {
    Term t = post();
    while (accept(Tok::Star)) t = Term::prod(std::move(t), post());
    return t;
  }

  Term post() {
    Term t = atom();
    while (accept(Tok::Prime)) t = Term::comp(std::move(t));
    return t;
  }

  Term atom() {
    const Token& tok = toks_[pos_];
    switch (tok.kind) {
      case Tok::Ident: ++pos_; return Term::var(tok.text);
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::LParen: {
        ++pos_;
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: fail("a variable, constant or '('");
    }
  }

  Tok peek() const { return toks_[pos_].kind; }

  bool accept(Tok k) {
    if (peek() != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, std::string_view what) {
    if (!accept(k)) fail(what);
  }

  [[noreturn]] void fail(std::string_view what) const {
    const Token& t = toks_[pos_];
    throw SyntaxError("expected " + std::string(what) + ", found " +
                          (t.kind == Tok::End ? std::string("end of input")
                                              : "'" + t.text + "'"),
                      t.pos);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a term, or a formula when a comparison follows the first term.
inline std::variant<Term, Formula> parse(std::string_view text) {
  return detail::Parser(text).any();
}

inline Term parse_term(std::string_view text) {
  return detail::Parser(text).term_only();
}

inline Formula parse_formula(std::string_view text) {
  return detail::Parser(text).formula_only();
}

// ---------------------------------------------------------------------------
// Evaluation

/// Operation tables available to the evaluator. Symbols whose table is
/// absent make evaluation fail with MissingOperation.
struct EvalContext {
  LatticePtr lattice;
  std::optional<UnaryAlgebra> comp;
  std::optional<BinaryOpTable> arrow;
  std::optional<BinaryOpTable> prod;

  static EvalContext of(const UnaryAlgebra& a) { return {a.lattice_ptr(), a, {}, {}}; }
};

namespace detail {

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == TermKind::Var) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    return;
  }
  for (const auto& c : t.args) collect_vars(c, out);
}

inline void check_symbols(const Term& t, const EvalContext& ctx) {
  switch (t.kind) {
    case TermKind::Comp:
      if (!ctx.comp) throw Error(ErrorKind::MissingOperation, "no table for '");
      break;
    case TermKind::Arrow:
      if (!ctx.arrow) throw Error(ErrorKind::MissingOperation, "no table for ->");
      break;
    case TermKind::Prod:
      if (!ctx.prod) throw Error(ErrorKind::MissingOperation, "no table for *");
      break;
    default: break;
  }
  for (const auto& c : t.args) check_symbols(c, ctx);
}

// Variables are pre-resolved to slots so that the inner loop of holds() does
// no string lookups.
inline Elem eval_slots(const Term& t, const EvalContext& ctx,
                       const std::vector<std::string>& vars,
                       std::span<const Elem> values) {
  const auto& l = *ctx.lattice;
  switch (t.kind) {
    case TermKind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t.name);
      if (it == vars.end())
        throw Error(ErrorKind::UnboundVariable, "'" + t.name + "' has no value", {t.name});
      return values[static_cast<std::size_t>(it - vars.begin())];
    }
    case TermKind::Zero: return l.bottom();
    case TermKind::One: return l.top();
    case TermKind::Comp:
      if (!ctx.comp) throw Error(ErrorKind::MissingOperation, "no table for '");
      return (*ctx.comp)(eval_slots(t.args[0], ctx, vars, values));
    default: break;
  }
  Elem a = eval_slots(t.args[0], ctx, vars, values);
  Elem b = eval_slots(t.args[1], ctx, vars, values);
  switch (t.kind) {
    case TermKind::Join: return l.join(a, b);
    case TermKind::Meet: return l.meet(a, b);
    case TermKind::Arrow:
      if (!ctx.arrow) throw Error(ErrorKind::MissingOperation, "no table for ->");
      return (*ctx.arrow)(a, b);
    case TermKind::Prod:
      if (!ctx.prod) throw Error(ErrorKind::MissingOperation, "no table for *");
      return (*ctx.prod)(a, b);
    default: return a;  // unreachable
  }
}

inline bool eval_atomic(const Atomic& a, const EvalContext& ctx,
                        const std::vector<std::string>& vars,
                        std::span<const Elem> values, Elem* lhs_out = nullptr,
                        Elem* rhs_out = nullptr) {
  Elem l = eval_slots(a.lhs, ctx, vars, values);
  Elem r = eval_slots(a.rhs, ctx, vars, values);
  if (lhs_out) *lhs_out = l;
  if (rhs_out) *rhs_out = r;
  return a.rel == Relation::Eq ? l == r : ctx.lattice->leq(l, r);
}

}  // namespace detail

/// Variables of a formula, sorted by name.
inline std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> vars;
  for (const auto& h : f.hypotheses) {
    detail::collect_vars(h.lhs, vars);
    detail::collect_vars(h.rhs, vars);
  }
  detail::collect_vars(f.conclusion.lhs, vars);
  detail::collect_vars(f.conclusion.rhs, vars);
  std::sort(vars.begin(), vars.end());
  return vars;
}

inline std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> vars;
  detail::collect_vars(t, vars);
  std::sort(vars.begin(), vars.end());
  return vars;
}

/// Evaluates `t` under an assignment of variable names to element ids.
inline Elem eval(const Term& t, const EvalContext& ctx,
                 const std::map<std::string, Elem, std::less<>>& assignment) {
  detail::check_symbols(t, ctx);
  std::vector<std::string> vars;
  std::vector<Elem> values;
  for (const auto& [k, v] : assignment) {
    if (v >= ctx.lattice->size())
      throw Error(ErrorKind::UnknownLabel, "value for '" + k + "' out of range");
    vars.push_back(k);
    values.push_back(v);
  }
  return detail::eval_slots(t, ctx, vars, values);
}

/// Checks `f` at every assignment of its variables (sorted by name, first
/// most significant). A quasi-identity is only tested where all hypotheses
/// hold.
inline CheckReport holds(const Formula& f, const EvalContext& ctx) {
  for (const auto& h : f.hypotheses) {
    detail::check_symbols(h.lhs, ctx);
    detail::check_symbols(h.rhs, ctx);
  }
  detail::check_symbols(f.conclusion.lhs, ctx);
  detail::check_symbols(f.conclusion.rhs, ctx);
  const auto vars = variables(f);
  const auto& l = *ctx.lattice;
  return detail::scan(
      to_string(f), l, vars, [&](std::span<const Elem> v) -> std::optional<std::string> {
        for (const auto& h : f.hypotheses)
          if (!detail::eval_atomic(h, ctx, vars, v)) return std::nullopt;
        Elem lhs = 0, rhs = 0;
        if (detail::eval_atomic(f.conclusion, ctx, vars, v, &lhs, &rhs))
          return std::nullopt;
        return detail::print_atomic(f.conclusion) + " fails: left side " + l.name(lhs) +
               ", right side " + l.name(rhs);
      });
}

}  // namespace womlat
