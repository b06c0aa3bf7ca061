#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "skein/jones_wenzl.hpp"
#include "skein/laurent.hpp"
#include "skein/nc_torus.hpp"
#include "skein/skein_torus.hpp"
#include "skein/solid_torus.hpp"

// Element grammar (whitespace is ignored):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | primary
//   primary := INT ['t' ['^' SINT]] | 't' ['^' SINT] | '(' expr ')'
//            | 'T(' SINT ',' SINT ')' | 'P(' INT ';' SINT ',' SINT ')'
//            | 'JW(' INT ';' SINT ',' SINT ')'              (skein)
//            | 'e(' SINT ',' SINT ')'                        (nc)
//            | 'a(' INT ')' | 'A(' INT ')'                   (solid)
//
// Integers and powers of t are scalars and belong to every kind.

namespace skein::io {

enum class ElementKind { skein, nc, solid };

inline std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::skein: return "skein";
    case ElementKind::nc: return "nc";
    case ElementKind::solid: return "solid";
  }
  return "?";
}

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, KindMismatch };

  ParseError(Kind kind, std::size_t column, const std::string& detail)
      : std::runtime_error(std::string(kind == Kind::Syntax ? "SyntaxError" : "KindMismatch") + "(" +
                           std::to_string(column) + "): " + detail),
        kind_(kind),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t column_;
};

enum class AtomType { Curve, Multicurve, JonesWenzl, Basis, AlphaPower, AlphaChebyshev };

struct Atom {
  AtomType type;
  std::vector<std::int64_t> args;
};

struct ExprNode {
  enum class Op { Scalar, Atom, Add, Sub, Mul, Neg };

  Op op = Op::Scalar;
  LaurentPoly scalar;
  Atom atom{AtomType::Curve, {}};
  std::vector<ExprNode> children;
  std::size_t column = 1;

  /// No atoms anywhere below this node.
  bool is_scalar() const {
    if (op == Op::Atom) return false;
    for (const auto& c : children)
      if (!c.is_scalar()) return false;
    return true;
  }
};

struct Expression {
  ElementKind kind;
  ExprNode root;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, ElementKind kind) : text_(text), kind_(kind) {}

  Expression run() {
    skip_ws();
    if (at_end()) fail(pos_, "empty expression");
    ExprNode root = expr();
    skip_ws();
    if (!at_end()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return {kind_, std::move(root)};
  }

 private:
  ExprNode expr() {
    ExprNode lhs = term();
    for (;;) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) return lhs;
      const std::size_t at = pos_;
      const char c = text_[pos_++];
      ExprNode rhs = term();
      lhs = binary(c == '+' ? ExprNode::Op::Add : ExprNode::Op::Sub, std::move(lhs), std::move(rhs), at);
    }
  }

  ExprNode term() {
    ExprNode lhs = unary();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') return lhs;
      const std::size_t at = pos_++;
      ExprNode rhs = unary();
      if (kind_ == ElementKind::solid && !lhs.is_scalar() && !rhs.is_scalar())
        mismatch(at, "solid-torus elements can only be multiplied by scalars");
      lhs = binary(ExprNode::Op::Mul, std::move(lhs), std::move(rhs), at);
    }
  }

  ExprNode unary() {
    skip_ws();
    if (at_end()) fail(pos_, "unexpected end of input");
    if (peek() == '-' || peek() == '+') {
      const std::size_t at = pos_;
      const bool negate = text_[pos_++] == '-';
      ExprNode inner = unary();
      if (!negate) return inner;
      ExprNode n;
      n.op = ExprNode::Op::Neg;
      n.column = at + 1;
      n.children.push_back(std::move(inner));
      return n;
    }
    return primary();
  }

  ExprNode primary() {
    skip_ws();
    const std::size_t at = pos_;
    if (at_end()) fail(pos_, "unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprNode inner = expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer value = integer_literal();
      LaurentPoly s(value);
      if (!at_end() && peek() == 't') s = LaurentPoly(value) * power_of_t();
      return scalar(std::move(s), at);
    }
    if (c == 't') return scalar(power_of_t(), at);
    if (std::isalpha(static_cast<unsigned char>(c))) return atom();
    fail(at, std::string("unexpected '") + c + "'");
  }

  // 't' ['^' SINT]
  LaurentPoly power_of_t() {
    expect('t');
    if (at_end() || peek() != '^') return LaurentPoly::t(1);
    ++pos_;
    return LaurentPoly::t(signed_int());
  }

  ExprNode atom() {
    const std::size_t at = pos_;
    std::string name;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) name += text_[pos_++];
    Atom a{AtomType::Curve, {}};
    ElementKind owner = ElementKind::skein;
    skip_ws();
    expect('(');
    if (name == "T" || name == "e") {
      a.type = name == "T" ? AtomType::Curve : AtomType::Basis;
      owner = name == "T" ? ElementKind::skein : ElementKind::nc;
      a.args.push_back(signed_int());
      expect(',');
      a.args.push_back(signed_int());
    } else if (name == "P" || name == "JW") {
      a.type = name == "P" ? AtomType::Multicurve : AtomType::JonesWenzl;
      a.args.push_back(count());
      expect(';');
      a.args.push_back(signed_int());
      expect(',');
      a.args.push_back(signed_int());
    } else if (name == "a" || name == "A") {
      a.type = name == "a" ? AtomType::AlphaPower : AtomType::AlphaChebyshev;
      owner = ElementKind::solid;
      a.args.push_back(count());
    } else {
      fail(at, "unknown atom '" + name + "'");
    }
    expect(')');
    if (owner != kind_)
      mismatch(at, "atom '" + name + "' belongs to " + std::string(to_string(owner)) + " elements, not " +
                       std::string(to_string(kind_)));
    ExprNode n;
    n.op = ExprNode::Op::Atom;
    n.atom = std::move(a);
    n.column = at + 1;
    return n;
  }

  std::int64_t signed_int() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = text_[pos_++] == '-';
    skip_ws();
    const std::size_t at = pos_;
    Integer v = integer_literal();
    if (v > std::numeric_limits<std::int32_t>::max()) fail(at, "integer out of range");
    const auto small = v.convert_to<std::int64_t>();
    return negative ? -small : small;
  }

  std::int64_t count() {
    skip_ws();
    const std::size_t at = pos_;
    Integer v = integer_literal();
    if (v > 100000) fail(at, "count out of range");
    return v.convert_to<std::int64_t>();
  }

  Integer integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(start, "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  ExprNode scalar(LaurentPoly s, std::size_t at) const {
    ExprNode n;
    n.op = ExprNode::Op::Scalar;
    n.scalar = std::move(s);
    n.column = at + 1;
    return n;
  }

  static ExprNode binary(ExprNode::Op op, ExprNode lhs, ExprNode rhs, std::size_t at) {
    ExprNode n;
    n.op = op;
    n.column = at + 1;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] static void fail(std::size_t at, const std::string& what) {
    throw ParseError(ParseError::Kind::Syntax, at + 1, what);
  }
  [[noreturn]] static void mismatch(std::size_t at, const std::string& what) {
    throw ParseError(ParseError::Kind::KindMismatch, at + 1, what);
  }

  std::string_view text_;
  ElementKind kind_;
  std::size_t pos_ = 0;
};

template <class Element>
struct Evaluator;

template <>
struct Evaluator<SkeinElement> {
  static SkeinElement scalar(const LaurentPoly& c) { return SkeinElement::scalar(c); }
  static SkeinElement atom(const Atom& a) {
    switch (a.type) {
      case AtomType::Curve: return curve_class(a.args[0], a.args[1]);
      case AtomType::Multicurve: return multicurve(static_cast<unsigned>(a.args[0]), a.args[1], a.args[2]);
      case AtomType::JonesWenzl: return jw_expand(static_cast<unsigned>(a.args[0]), a.args[1], a.args[2]);
      default: throw std::logic_error("atom of another kind");
    }
  }
  static SkeinElement mul(const SkeinElement& x, const SkeinElement& y) { return x * y; }
};

template <>
struct Evaluator<NTElement> {
  static NTElement scalar(const LaurentPoly& c) { return NTElement::scalar(c); }
  static NTElement atom(const Atom& a) {
    if (a.type != AtomType::Basis) throw std::logic_error("atom of another kind");
    return NTElement::basis(a.args[0], a.args[1]);
  }
  static NTElement mul(const NTElement& x, const NTElement& y) { return x * y; }
};

template <>
struct Evaluator<SolidTorusElement> {
  static SolidTorusElement scalar(const LaurentPoly& c) { return SolidTorusElement::scalar(c); }
  static SolidTorusElement atom(const Atom& a) {
    const auto n = static_cast<unsigned>(a.args[0]);
    switch (a.type) {
      case AtomType::AlphaPower: return SolidTorusElement::alpha_power(n);
      case AtomType::AlphaChebyshev: return SolidTorusElement::alpha_chebyshev(n);
      default: throw std::logic_error("atom of another kind");
    }
  }
  // The parser only admits products with a scalar factor.
  static SolidTorusElement mul(const SolidTorusElement& x, const SolidTorusElement& y) {
    if (x.degree() <= 0) return x.coefficient(0) * y;
    if (y.degree() <= 0) return y.coefficient(0) * x;
    throw std::logic_error("product of two non-scalar solid-torus elements");
  }
};

template <class Element>
Element evaluate(const ExprNode& n) {
  using E = Evaluator<Element>;
  switch (n.op) {
    case ExprNode::Op::Scalar: return E::scalar(n.scalar);
    case ExprNode::Op::Atom: return E::atom(n.atom);
    case ExprNode::Op::Add: return evaluate<Element>(n.children[0]) + evaluate<Element>(n.children[1]);
    case ExprNode::Op::Sub: return evaluate<Element>(n.children[0]) - evaluate<Element>(n.children[1]);
    case ExprNode::Op::Neg: return -evaluate<Element>(n.children[0]);
    case ExprNode::Op::Mul: return E::mul(evaluate<Element>(n.children[0]), evaluate<Element>(n.children[1]));
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace detail

/// Parses an element of the given kind. Throws ParseError with a 1-based
/// column on malformed input or atoms of another kind.
inline Expression parse_element(std::string_view text, ElementKind kind) { return detail::Parser(text, kind).run(); }

using Value = std::variant<SkeinElement, NTElement, SolidTorusElement>;

/// Normal form of a parsed expression. Module errors (NotPrimitive, ...)
/// propagate as DomainError.
inline Value eval_expression(const Expression& e) {
  switch (e.kind) {
    case ElementKind::skein: return detail::evaluate<SkeinElement>(e.root);
    case ElementKind::nc: return detail::evaluate<NTElement>(e.root);
    case ElementKind::solid: return detail::evaluate<SolidTorusElement>(e.root);
  }
  throw std::logic_error("unknown element kind");
}

inline SkeinElement parse_skein(std::string_view text) {
  return std::get<SkeinElement>(eval_expression(parse_element(text, ElementKind::skein)));
}
inline NTElement parse_nc(std::string_view text) {
  return std::get<NTElement>(eval_expression(parse_element(text, ElementKind::nc)));
}
inline SolidTorusElement parse_solid(std::string_view text) {
  return std::get<SolidTorusElement>(eval_expression(parse_element(text, ElementKind::solid)));
}

}  // namespace skein::io
