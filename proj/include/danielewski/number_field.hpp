#pragma once

#include <compare>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "danielewski/error.hpp"
#include "danielewski/factor.hpp"
#include "danielewski/rational.hpp"
#include "danielewski/upoly.hpp"

namespace danielewski {

// Q or a simple extension Q[t]/(m(t)). A default-constructed NumberField is Q.
// Handles are cheap to copy; two handles compare equal when their minimal
// polynomials and generator names agree.
class NumberField {
 public:
  NumberField() = default;

  // m must be monic and irreducible over Q; degree 1 yields Q itself.
  static NumberField extension(const QPoly& minimal_polynomial, std::string generator = "t") {
    if (minimal_polynomial.is_constant()) {
      fail(ErrorCode::ConstantModulus, "minimal polynomial must have degree at least one");
    }
    QPoly m = minimal_polynomial.monic().with_var('t');
    if (m.degree() == 1) return NumberField();
    if (!is_irreducible(m)) {
      fail(ErrorCode::ReducibleModulus, "minimal polynomial is reducible over Q");
    }
    return unchecked(std::move(m), std::move(generator));
  }

  // Skips the irreducibility certificate; for polynomials already known irreducible.
  static NumberField unchecked(QPoly monic_minimal_polynomial, std::string generator = "t") {
    NumberField f;
    f.data_ = std::make_shared<const Data>(Data{std::move(monic_minimal_polynomial), std::move(generator)});
    return f;
  }

  bool is_rational() const { return data_ == nullptr; }
  int degree() const { return data_ ? data_->minpoly.degree().value() : 1; }

  QPoly minimal_polynomial() const {
    if (!data_) return QPoly({Rational(0), Rational(1)}, 't');
    return data_->minpoly;
  }

  const std::string& generator() const {
    static const std::string t = "t";
    return data_ ? data_->generator : t;
  }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->minpoly == b.data_->minpoly && a.data_->generator == b.data_->generator;
  }

  std::string describe() const;

 private:
  struct Data {
    QPoly minpoly;
    std::string generator;
  };
  std::shared_ptr<const Data> data_;
};

// Exact element of Q or of a simple extension, stored in the power basis of
// the generator. Rational elements coerce into any extension.
class FieldElement {
 public:
  FieldElement() = default;
  template <std::integral I>
  FieldElement(I v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational r) : rat_(std::move(r)) {}  // NOLINT(google-explicit-constructor)

  // Element of `field` with the given power-basis coordinates (reduced mod m).
  FieldElement(const NumberField& field, std::vector<Rational> coords) {
    if (field.is_rational()) {
      rat_ = coords.empty() ? Rational(0) : coords[0];
      for (std::size_t i = 1; i < coords.size(); ++i) {
        ensure(coords[i].is_zero(), "coordinates beyond the degree of Q");
      }
      return;
    }
    field_ = field;
    coords_ = reduce(field, std::move(coords));
    normalize();
  }

  static FieldElement generator(const NumberField& field) {
    if (field.is_rational()) fail(ErrorCode::FieldMismatch, "Q has no adjoined generator");
    return FieldElement(field, {Rational(0), Rational(1)});
  }

  // Field the element lives in; Q for rational values.
  const NumberField& field() const { return field_; }
  bool is_rational() const { return field_.is_rational(); }

  const Rational& as_rational() const {
    ensure(is_rational(), "element is not rational");
    return rat_;
  }

  // Power-basis coordinates of length degree(field).
  std::vector<Rational> coordinates() const {
    if (is_rational()) return {rat_};
    return coords_;
  }

  // Same value expressed in `target`, which must be this element's field or an
  // extension reached by coercion from Q.
  FieldElement in_field(const NumberField& target) const {
    if (target == field_) return *this;
    if (!is_rational()) fail(ErrorCode::FieldMismatch, "element belongs to a different number field");
    FieldElement r;
    r.field_ = target;
    r.coords_.assign(static_cast<std::size_t>(target.degree()), Rational(0));
    r.coords_[0] = rat_;
    return r;
  }

  bool is_zero() const { return is_rational() && rat_.is_zero(); }
  bool is_one() const { return is_rational() && rat_.is_one(); }

  FieldElement operator-() const {
    FieldElement r = *this;
    r.rat_ = -r.rat_;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    if (is_rational() && o.is_rational()) {
      rat_ += o.rat_;
      return *this;
    }
    NumberField f = common(o);
    *this = in_field(f);
    FieldElement b = o.in_field(f);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
    normalize();
    return *this;
  }

  FieldElement& operator-=(const FieldElement& o) { return *this += -o; }

  FieldElement& operator*=(const FieldElement& o) {
    if (is_rational() && o.is_rational()) {
      rat_ *= o.rat_;
      return *this;
    }
    if (o.is_rational()) {
      for (auto& c : coords_) c *= o.rat_;
      normalize();
      return *this;
    }
    if (is_rational()) {
      Rational s = rat_;
      *this = o;
      for (auto& c : coords_) c *= s;
      normalize();
      return *this;
    }
    NumberField f = common(o);
    const std::size_t d = coords_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (coords_[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    coords_ = reduce(f, std::move(prod));
    normalize();
    return *this;
  }

  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero field element");
    if (is_rational()) return FieldElement(rat_.inverse());
    // a(t) * s(t) + m(t) * u(t) = 1
    QPoly a(coords_, 't');
    auto eg = ext_gcd(a, field_.minimal_polynomial());
    ensure(eg.g.degree() == 0, "non-invertible element in a field extension");
    return FieldElement(field_, eg.s.coefficients());
  }

  FieldElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() && b.is_rational()) return a.rat_ == b.rat_;
    if (a.is_rational() != b.is_rational()) return false;  // normalized: rational values never carry a field
    if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, "comparison across number fields");
    return a.coords_ == b.coords_;
  }

  // Canonical total order (coordinates compared from the constant term up).
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    auto ca = a.coordinates(), cb = b.coordinates();
    for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
      Rational x = i < ca.size() ? ca[i] : Rational(0);
      Rational y = i < cb.size() ? cb[i] : Rational(0);
      if (auto c = x <=> y; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  // Value of the element's polynomial representative, as a string in the generator.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

 private:
  static std::vector<Rational> reduce(const NumberField& f, std::vector<Rational> c) {
    const QPoly m = f.minimal_polynomial();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    for (std::size_t i = c.size(); i-- > d;) {
      if (c[i].is_zero()) continue;
      Rational top = c[i];
      for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= top * m.coeff(static_cast<int>(j));
      c[i] = Rational(0);
    }
    c.resize(d);
    return c;
  }

  NumberField common(const FieldElement& o) const {
    if (is_rational()) return o.field_;
    if (o.is_rational()) return field_;
    if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "arithmetic across different number fields");
    return field_;
  }

  // Elements whose value is rational drop back to Q so that equality and
  // zero tests are representation independent.
  void normalize() {
    if (field_.is_rational()) return;
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      if (!coords_[i].is_zero()) return;
    }
    rat_ = coords_.empty() ? Rational(0) : coords_[0];
    coords_.clear();
    field_ = NumberField();
  }

  Rational rat_;
  NumberField field_;
  std::vector<Rational> coords_;
};

// Descending-power rendering of a rational univariate polynomial.
inline std::string format_qpoly(const QPoly& m, const std::string& var) {
  if (m.is_zero()) return "0";
  std::string out;
  for (int i = m.degree().value(); i >= 0; --i) {
    const Rational& c = m.coeff(i);
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += a.to_string();
    } else {
      if (!a.is_one()) out += a.to_string() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string FieldElement::to_string() const {
  if (is_rational()) return rat_.to_string();
  return format_qpoly(QPoly(coords_, 't'), field_.generator());
}

inline std::string NumberField::describe() const {
  if (is_rational()) return "Q";
  return "Q(" + generator() + ") with " + generator() + " a root of " +
         format_qpoly(minimal_polynomial(), generator());
}

}  // namespace danielewski
