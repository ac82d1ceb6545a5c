#pragma once

#include <utility>
#include <vector>

#include "danielewski/extension.hpp"
#include "danielewski/sparse_poly.hpp"

namespace danielewski {

inline BiPoly bi_x() { return BiPoly::variable(kX); }
inline BiPoly bi_z() { return BiPoly::variable(kZ); }
inline BiPoly bi_const(const FieldElement& c) { return BiPoly::constant(c); }
inline AmbientPoly amb_x() { return AmbientPoly::variable(kX); }
inline AmbientPoly amb_y() { return AmbientPoly::variable(kAy); }
inline AmbientPoly amb_z() { return AmbientPoly::variable(kAz); }

// Univariate polynomial in z (var 'z') or x (var 'x') as a BiPoly.
inline BiPoly from_univariate(const KPoly& f) {
  const int slot = f.var() == 'x' ? kX : kZ;
  std::vector<BiPoly::Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Exponents<2> e{};
    e[static_cast<std::size_t>(slot)] = static_cast<int>(i);
    terms.push_back({e, f.coefficients()[i]});
  }
  return BiPoly::from_terms(std::move(terms));
}

// Coefficient of x^k as a polynomial in z.
inline KPoly x_slice(const BiPoly& f, int k) {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : f.terms()) {
    if (e[kX] != k) continue;
    ensure(e[kZ] >= 0, "negative z exponent");
    if (static_cast<int>(c.size()) <= e[kZ]) c.resize(static_cast<std::size_t>(e[kZ]) + 1);
    c[static_cast<std::size_t>(e[kZ])] = v;
  }
  return KPoly(std::move(c), 'z');
}

// Q(0, z).
inline KPoly at_x0(const BiPoly& f) { return x_slice(f, 0); }

// Coefficient of z^j as a polynomial in x.
inline KPoly z_slice(const BiPoly& f, int j) {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : f.terms()) {
    if (e[kZ] != j) continue;
    ensure(e[kX] >= 0, "negative x exponent");
    if (static_cast<int>(c.size()) <= e[kX]) c.resize(static_cast<std::size_t>(e[kX]) + 1);
    c[static_cast<std::size_t>(e[kX])] = v;
  }
  return KPoly(std::move(c), 'x');
}

inline AmbientPoly to_ambient(const BiPoly& f) { return f.embed<3>({kX, kAz}); }

// Drops y from an ambient polynomial that does not involve it.
inline BiPoly to_bipoly(const AmbientPoly& f) { return f.embed<2>({kX, -1, kZ}); }

struct Truncation {
  BiPoly result;  // deg_x < n
  BiPoly R;       // f = result + x^n R
};

inline Truncation truncate_mod_x(const BiPoly& f, int n) {
  ensure(n >= 1, "truncation order must be positive");
  auto [low, high] = f.split_at(kX, n);
  return {low, high};
}

inline BiPoly trunc(const BiPoly& f, int n) { return f.split_at(kX, n).first; }

// f(x, s(x, z)).
inline BiPoly subst_z(const BiPoly& f, const BiPoly& s) { return f.substitute<2>({bi_x(), s}); }

inline DivResult<FieldElement> div_euclid_z(const KPoly& f, const KPoly& p) { return divmod(f, p); }

inline BiPoly derivative_z(const BiPoly& f, int order = 1) { return f.derivative(kZ, order); }

// Digits c_j with f = sum_j c_j(x,z) p(z)^j and deg_z c_j < deg p.
inline std::vector<BiPoly> p_adic_expand(const BiPoly& f, const KPoly& p) {
  if (p.is_constant()) fail(ErrorCode::ConstantModulus, "p-adic expansion needs a nonconstant p");
  std::vector<BiPoly> digits;
  if (f.is_zero()) return digits;
  const int top = f.degree_in(kX).value();
  for (int k = f.min_degree_in(kX).value(); k <= top; ++k) {
    KPoly rest = x_slice(f, k);
    for (std::size_t j = 0; !rest.is_zero(); ++j) {
      auto qr = divmod(rest, p);
      if (digits.size() <= j) digits.resize(j + 1);
      digits[j] += from_univariate(qr.remainder).shift(kX, k);
      rest = qr.quotient;
    }
  }
  return digits;
}

// g(x, x^{-n} Q(x,z), z) as a Laurent polynomial in (x, z).
// b(arg) by Horner.
template <int N>
SparsePoly<N> eval_univariate(const KPoly& b, const SparsePoly<N>& arg) {
  SparsePoly<N> acc;
  const auto& c = b.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * arg + SparsePoly<N>::constant(*it);
  return acc;
}

inline LaurentBiPoly on_surface_pullback(const AmbientPoly& g, int n, const BiPoly& Q) {
  return g.substitute<2>({bi_x(), Q.shift(kX, -n), bi_z()});
}

}  // namespace danielewski
