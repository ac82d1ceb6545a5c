#pragma once

#include <compare>
#include <limits>

#include "danielewski/error.hpp"

namespace danielewski {

// Polynomial degree with a distinct -infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree neg_infinity() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_infinity() const { return value_ == kNegInf; }

  int value() const {
    ensure(!is_neg_infinity(), "degree of the zero polynomial has no integer value");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr Degree(int value, int) : value_(value) {}
  int value_;
};

}  // namespace danielewski
