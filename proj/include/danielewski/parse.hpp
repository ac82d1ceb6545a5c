#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "danielewski/error.hpp"
#include "danielewski/sparse_poly.hpp"
#include "danielewski/surface.hpp"

namespace danielewski {

namespace detail {

[[noreturn]] inline void syntax_error(const std::string& what, std::size_t pos) {
  throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos), pos);
}

// Recursive descent over integers, x, y, z (and the field generator when one
// is supplied), + - * / ^ and parentheses. Multiplication must be explicit.
class Parser {
 public:
  Parser(std::string_view text, NumberField field) : text_(text), field_(std::move(field)) {}

  // Returns lhs - rhs, or the expression itself when there is no '='.
  AmbientPoly equation() {
    AmbientPoly lhs = expr();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      AmbientPoly rhs = expr();
      finish();
      return lhs - rhs;
    }
    finish();
    return lhs;
  }

  AmbientPoly polynomial() {
    AmbientPoly p = expr();
    finish();
    return p;
  }

 private:
  static constexpr int kMaxExponent = 10000;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) {
      syntax_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
  }

  AmbientPoly expr() {
    AmbientPoly acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      AmbientPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  AmbientPoly term() {
    AmbientPoly acc = unary();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        AmbientPoly d = unary();
        if (!d.is_constant()) syntax_error("division by a non-constant", at);
        if (d.is_zero()) syntax_error("division by zero", at);
        acc = d.constant_term().inverse() * acc;
      } else {
        skip_space();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(c)) || c == '(')) {
          syntax_error("missing '*' (implicit multiplication is not allowed)", pos_);
        }
        return acc;
      }
    }
  }

  AmbientPoly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  AmbientPoly power() {
    AmbientPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax_error("exponent must be a non-negative integer", at);
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > kMaxExponent) syntax_error("exponent too large", at);
    }
    return base.pow(static_cast<int>(e));
  }

  AmbientPoly primary() {
    skip_space();
    const std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      AmbientPoly inner = expr();
      skip_space();
      if (peek() != ')') syntax_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class v(std::string(text_.substr(at, pos_ - at)), 10);
      return AmbientPoly::constant(FieldElement(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(at, pos_ - at);
      if (name == "x") return amb_x();
      if (name == "y") return amb_y();
      if (name == "z") return amb_z();
      if (!field_.is_rational() && name == field_.generator()) {
        return AmbientPoly::constant(FieldElement::generator(field_));
      }
      syntax_error("unknown symbol '" + std::string(name) + "'", at);
    }
    if (c == '\0') syntax_error("unexpected end of input", at);
    syntax_error(std::string("unexpected '") + c + "'", at);
  }

  std::string_view text_;
  NumberField field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AmbientPoly parse_polynomial(std::string_view text, const NumberField& field = NumberField()) {
  return detail::Parser(text, field).polynomial();
}

inline BiPoly parse_bipoly(std::string_view text, const NumberField& field = NumberField()) {
  AmbientPoly p = parse_polynomial(text, field);
  if (p.degree_in(kAy) > 0) fail(ErrorCode::ShapeError, "polynomial in x, z must not involve y");
  return to_bipoly(p);
}

// Splits F = c x^n y - G(x, z) into the surface (n, G / c).
inline DanielewskiSurface surface_from_polynomial(const AmbientPoly& F) {
  if (F.degree_in(kAy) != 1) fail(ErrorCode::ShapeError, "y must occur to the first power");
  AmbientPoly lead = F.coefficient_of(kAy, 1);
  if (lead.size() != 1 || lead.degree_in(kAz) != 0) {
    fail(ErrorCode::ShapeError, "the coefficient of y must be a constant times a power of x");
  }
  const auto& [e, c] = lead.terms()[0];
  AmbientPoly rest = F - AmbientPoly::monomial({e[kX], 1, 0}, c);
  BiPoly Q = to_bipoly((-c.inverse()) * rest);
  return DanielewskiSurface::validate(e[kX], std::move(Q));
}

inline DanielewskiSurface parse_surface(std::string_view text, const NumberField& field = NumberField()) {
  return surface_from_polynomial(detail::Parser(text, field).equation());
}

}  // namespace danielewski
