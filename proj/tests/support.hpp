#pragma once

#include <random>
#include <string>
#include <vector>

#include "danielewski/danielewski.hpp"

namespace testing_support {

namespace dw = danielewski;

inline dw::BiPoly bi(const std::string& s, const dw::NumberField& f = dw::NumberField()) { return dw::parse_bipoly(s, f); }
inline dw::AmbientPoly amb(const std::string& s, const dw::NumberField& f = dw::NumberField()) {
  return dw::parse_polynomial(s, f);
}
inline dw::DanielewskiSurface surf(const std::string& s) { return dw::parse_surface(s); }
inline dw::DanielewskiSurface surf(int n, const std::string& q) { return dw::DanielewskiSurface::validate(n, bi(q)); }

inline dw::KPoly zpoly(std::vector<long> c, char var = 'z') {
  std::vector<dw::FieldElement> v;
  for (long x : c) v.emplace_back(x);
  return dw::KPoly(v, var);
}

inline dw::FieldElement q(long num, long den = 1) { return dw::FieldElement(dw::Rational(num, den)); }

// Independent evaluator: plugs rationals into a sparse polynomial term by term.
template <int N>
dw::FieldElement evaluate(const dw::SparsePoly<N>& p, const std::array<dw::FieldElement, N>& at) {
  dw::FieldElement acc(0);
  for (const auto& [e, c] : p.terms()) {
    dw::FieldElement t = c;
    for (std::size_t i = 0; i < N; ++i) t *= at[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Rational with |numerator|, denominator <= 9.
  dw::FieldElement rational(bool nonzero = false) {
    for (;;) {
      long num = integer(-9, 9);
      long den = integer(1, 9);
      if (nonzero && num == 0) continue;
      return dw::FieldElement(dw::Rational(num, den));
    }
  }

  dw::FieldElement small_rational(bool nonzero = false) {
    for (;;) {
      long num = integer(-3, 3);
      long den = integer(1, 3);
      if (nonzero && num == 0) continue;
      return dw::FieldElement(dw::Rational(num, den));
    }
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Univariate polynomial in z of exact degree d.
  dw::KPoly zpoly(int d, bool small = false) {
    std::vector<dw::FieldElement> c;
    for (int i = 0; i < d; ++i) c.push_back(coin(0.7) ? (small ? small_rational() : rational()) : dw::FieldElement(0));
    c.push_back(small ? small_rational(true) : rational(true));
    return dw::KPoly(c, 'z');
  }

  // Q = p(z) + sum_{k=1}^{xdeg} x^k Q_k(z) with deg Q_k <= d, sparse-ish.
  dw::BiPoly surface_q(int d, int xdeg, bool small = false) {
    dw::BiPoly Q = dw::from_univariate(zpoly(d, small));
    for (int k = 1; k <= xdeg; ++k) {
      for (int j = 0; j <= d; ++j) {
        if (!coin(0.35)) continue;
        Q += dw::BiPoly::monomial({k, j}, small ? small_rational(true) : rational(true));
      }
    }
    return Q;
  }

  dw::DanielewskiSurface surface(int max_n, int max_d, int max_xdeg, bool small = false) {
    int n = static_cast<int>(integer(1, max_n));
    int d = static_cast<int>(integer(2, max_d));
    return dw::DanielewskiSurface::validate(n, surface_q(d, static_cast<int>(integer(0, max_xdeg)), small));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
