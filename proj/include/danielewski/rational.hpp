#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "danielewski/error.hpp"

namespace danielewski {

// Exact rational backed by GMP. Always kept in lowest terms with a positive
// denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      mpz_set_si(v_.get_num_mpz_t(), static_cast<long>(value));
    } else {
      mpz_set_ui(v_.get_num_mpz_t(), static_cast<unsigned long>(value));
    }
  }

  Rational(const mpz_class& value) : v_(value) {}  // NOLINT

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

  // Accepts "n" or "n/d" in base 10.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text), 10));
    }
    return Rational(mpz_class(std::string(text.substr(0, slash)), 10),
                    mpz_class(std::string(text.substr(slash + 1)), 10));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& get_mpq() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(num, den);
    return r;
  }

  std::string to_string() const { return v_.get_str(10); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

}  // namespace danielewski
