#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/laurent.hpp"
#include "mzlab/localized.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/series.hpp"

namespace mzlab {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parse tree of the expression grammar
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   primary := integer | 'x' integer | '(' expr ')'
/// with exponents integer literals, optionally signed or parenthesized.
struct Expr {
  enum class Kind { number, variable, neg, add, sub, mul, div, pow };
  Kind kind = Kind::number;
  std::string digits;           // number
  std::size_t var = 0;          // variable, 0-based
  std::int64_t exponent = 0;    // pow
  std::vector<Expr> kids;
  std::size_t line = 1;
  std::size_t column = 1;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Expr parse() {
    skip();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

  Expr node(Expr::Kind k) const {
    Expr e;
    e.kind = k;
    e.line = line_;
    e.column = col_;
    return e;
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    if (d.empty()) fail("expected an integer");
    return d;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      Expr op = node(c == '+' ? Expr::Kind::add : Expr::Kind::sub);
      advance();
      op.kids.push_back(std::move(lhs));
      op.kids.push_back(term());
      lhs = std::move(op);
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      skip();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      Expr op = node(c == '*' ? Expr::Kind::mul : Expr::Kind::div);
      advance();
      op.kids.push_back(std::move(lhs));
      op.kids.push_back(unary());
      lhs = std::move(op);
    }
  }

  Expr unary() {
    skip();
    if (peek() == '-') {
      Expr e = node(Expr::Kind::neg);
      advance();
      e.kids.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    skip();
    if (peek() != '^') return base;
    Expr e = node(Expr::Kind::pow);
    advance();
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      advance();
      skip();
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    }
    const std::string d = digits();
    if (d.size() > 12) fail("exponent too large");
    e.exponent = std::stoll(d) * (negative ? -1 : 1);
    if (paren) {
      skip();
      if (peek() != ')') fail("expected ')' after exponent");
      advance();
    }
    skip();
    if (peek() == '^') fail("chained exponents need parentheses");
    e.kids.push_back(std::move(base));
    return e;
  }

  Expr primary() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::number);
      e.digits = digits();
      return e;
    }
    if (c == 'x') {
      Expr e = node(Expr::Kind::variable);
      advance();
      const std::string d = digits();
      const unsigned long long idx = d.size() > 9 ? 0 : std::stoull(d);
      if (idx == 0) throw ParseError(e.line, e.column, "unknown variable x" + d);
      e.var = static_cast<std::size_t>(idx - 1);
      return e;
    }
    if (c == '(') {
      advance();
      Expr e = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      advance();
      return e;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }
};

/// Evaluation into one carrier. Series leaves live at one common order, so
/// every intermediate result keeps that order.
template <class R>
class Evaluator {
 public:
  Evaluator(RingContext ctx, std::int64_t order) : ctx_(ctx), order_(order) {}

  R eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::number:
        return constant(scalar(e));
      case Expr::Kind::variable:
        if (e.var >= ctx_.nvars) {
          throw ParseError(e.line, e.column,
                           "unknown variable x" + std::to_string(e.var + 1) + " (context has " +
                               std::to_string(ctx_.nvars) + " variables)");
        }
        return variable(e.var);
      case Expr::Kind::neg:
        return -eval(e.kids[0]);
      case Expr::Kind::add:
        return eval(e.kids[0]) + eval(e.kids[1]);
      case Expr::Kind::sub:
        return eval(e.kids[0]) - eval(e.kids[1]);
      case Expr::Kind::mul:
        return multiply(eval(e.kids[0]), eval(e.kids[1]));
      case Expr::Kind::div:
        return multiply(eval(e.kids[0]), power(eval(e.kids[1]), -1, e));
      case Expr::Kind::pow:
        return power(eval(e.kids[0]), e.exponent, e);
    }
    throw ParseError(e.line, e.column, "malformed expression");
  }

 private:
  RingContext ctx_;
  std::int64_t order_;

  Scalar scalar(const Expr& e) const {
    try {
      return ctx_.field.parse(e.digits);
    } catch (const std::exception& ex) {
      throw ParseError(e.line, e.column, ex.what());
    }
  }

  R constant(const Scalar& c) const {
    if constexpr (std::same_as<R, LaurentPoly>) {
      return LaurentPoly::constant(ctx_, c);
    } else if constexpr (std::same_as<R, TruncSeries>) {
      return TruncSeries::constant(ctx_, order_, c);
    } else {
      return LocalizedSeries::from_series(TruncSeries::constant(ctx_, order_, c));
    }
  }

  R variable(std::size_t i) const {
    if constexpr (std::same_as<R, LaurentPoly>) {
      return LaurentPoly::variable(ctx_, i);
    } else if constexpr (std::same_as<R, TruncSeries>) {
      return TruncSeries::variable(ctx_, order_, i);
    } else {
      return LocalizedSeries::monomial(ctx_, order_, MultiIndex::unit(ctx_.nvars, i));
    }
  }

  static R multiply(const R& a, const R& b) { return a * b; }

  R power(const R& base, std::int64_t m, const Expr& at) const {
    if (m >= 0) return base.pow(m);
    if constexpr (std::same_as<R, LaurentPoly>) {
      if (!base.is_unit()) {
        throw ParseError(at.line, at.column, "negative power of " + base.to_string() + ", which is not a unit");
      }
    } else if constexpr (std::same_as<R, TruncSeries>) {
      if (!base.is_unit()) throw ParseError(at.line, at.column, "negative exponent in power-series context");
    } else {
      if (base.body().constant_term().is_zero()) {
        throw ParseError(at.line, at.column,
                         "negative power of " + base.to_string() + " needs the form x^a*h with h(0) != 0");
      }
    }
    return base.pow(m);
  }
};

}  // namespace detail

inline Expr parse_expr_tree(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Expands `@path` to the contents of the file.
inline std::string read_argument(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw InputError("cannot read " + text.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

inline LaurentPoly parse_laurent(std::string_view text, const RingContext& ctx) {
  return detail::Evaluator<LaurentPoly>(ctx, 0).eval(parse_expr_tree(text));
}

inline TruncSeries parse_series(std::string_view text, const RingContext& ctx, std::int64_t order) {
  if (order < 0) throw InputError("truncation order must be nonnegative");
  return detail::Evaluator<TruncSeries>(ctx, order).eval(parse_expr_tree(text));
}

inline LocalizedSeries parse_localized(std::string_view text, const RingContext& ctx, std::int64_t order) {
  if (order < 0) throw InputError("truncation order must be nonnegative");
  return detail::Evaluator<LocalizedSeries>(ctx, order).eval(parse_expr_tree(text));
}

enum class CarrierKind { laurent, series, localized };

struct ParseContext {
  RingContext ring;
  CarrierKind carrier = CarrierKind::laurent;
  std::int64_t order = 32;
};

using Element = std::variant<LaurentPoly, TruncSeries, LocalizedSeries>;

inline Element parse_expr(std::string_view text, const ParseContext& pc) {
  switch (pc.carrier) {
    case CarrierKind::laurent:
      return parse_laurent(text, pc.ring);
    case CarrierKind::series:
      return parse_series(text, pc.ring, pc.order);
    case CarrierKind::localized:
      return parse_localized(text, pc.ring, pc.order);
  }
  throw InputError("unknown carrier");
}

/// Largest index i among the variables x_i written in `text` (0 if none).
inline std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != 'x') continue;
    std::size_t j = k + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000000) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    best = std::max(best, v);
  }
  return best;
}

/// Text form of an operator: `derivation: D(x1)=..., D(x2)=...`,
/// `endo: phi(x1)=...` or `ederivation: phi(x1)=...`. Generators left out
/// default to D(x_i) = 0 and phi(x_i) = x_i.
struct OperatorText {
  enum class Kind { derivation, endo, ederivation };
  Kind kind = Kind::derivation;
  std::map<std::size_t, std::string> entries;  // 0-based variable -> expression

  std::size_t max_variable() const {
    std::size_t n = 0;
    for (const auto& [i, e] : entries) n = std::max({n, i + 1, max_variable_index(e)});
    return n;
  }
};

inline std::string trim_copy(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// `fallback` is used when the text has no `kind:` prefix.
inline OperatorText parse_operator_text(const std::string& text, std::optional<OperatorText::Kind> fallback = {}) {
  OperatorText op;
  std::string body = text;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = trim_copy(std::string_view(text).substr(0, colon));
    if (head == "derivation") {
      op.kind = OperatorText::Kind::derivation;
    } else if (head == "endo" || head == "endomorphism") {
      op.kind = OperatorText::Kind::endo;
    } else if (head == "ederivation") {
      op.kind = OperatorText::Kind::ederivation;
    } else {
      throw InputError("unknown operator kind '" + head + "'");
    }
    body = text.substr(colon + 1);
  } else if (fallback) {
    op.kind = *fallback;
  } else {
    throw InputError("operator text needs a 'derivation:', 'endo:' or 'ederivation:' prefix");
  }
  const std::string name = op.kind == OperatorText::Kind::derivation ? "D" : "phi";
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string item = trim_copy(
        std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("operator entry '" + item + "' has no '='");
      const std::string lhs = trim_copy(std::string_view(item).substr(0, eq));
      const std::string prefix = name + "(x";
      if (lhs.rfind(prefix, 0) != 0 || lhs.back() != ')') {
        throw InputError("operator entry '" + lhs + "' should read " + name + "(x<i>)");
      }
      const std::string idx = lhs.substr(prefix.size(), lhs.size() - prefix.size() - 1);
      if (idx.empty() || idx.size() > 6 || idx.find_first_not_of("0123456789") != std::string::npos ||
          std::stoul(idx) == 0) {
        throw InputError("bad variable in '" + lhs + "'");
      }
      const std::size_t i = std::stoul(idx) - 1;
      if (op.entries.count(i)) throw InputError("generator x" + idx + " is given twice");
      op.entries.emplace(i, trim_copy(std::string_view(item).substr(eq + 1)));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (op.entries.empty()) throw InputError("operator has no entries");
  return op;
}

namespace detail {

template <Carrier R>
std::vector<R> operator_data(const OperatorText& op, const RingContext& ctx, std::int64_t order, bool images) {
  std::vector<R> out;
  for (std::size_t i = 0; i < ctx.nvars; ++i) {
    auto it = op.entries.find(i);
    if constexpr (std::same_as<R, LaurentPoly>) {
      if (it != op.entries.end()) {
        out.push_back(parse_laurent(it->second, ctx));
      } else {
        out.push_back(images ? LaurentPoly::variable(ctx, i) : LaurentPoly(ctx));
      }
    } else {
      if (it != op.entries.end()) {
        out.push_back(parse_series(it->second, ctx, order));
      } else {
        out.push_back(images ? TruncSeries::variable(ctx, order, i) : TruncSeries(ctx, order));
      }
    }
  }
  for (const auto& [i, e] : op.entries) {
    if (i >= ctx.nvars) throw InputError("operator mentions x" + std::to_string(i + 1) + " beyond nvars");
  }
  return out;
}

}  // namespace detail

template <Carrier R>
Derivation<R> build_derivation(const OperatorText& op, const RingContext& ctx, std::int64_t order = 0) {
  if (op.kind != OperatorText::Kind::derivation) throw InputError("expected a derivation");
  return Derivation<R>(detail::operator_data<R>(op, ctx, order, false));
}

template <Carrier R>
Endomorphism<R> build_endomorphism(const OperatorText& op, const RingContext& ctx, std::int64_t order = 0) {
  if (op.kind == OperatorText::Kind::derivation) throw InputError("expected an endomorphism");
  return Endomorphism<R>(detail::operator_data<R>(op, ctx, order, true));
}

}  // namespace mzlab
