#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "danielewski/error.hpp"
#include "danielewski/factor.hpp"
#include "danielewski/number_field.hpp"
#include "danielewski/upoly.hpp"

namespace danielewski {

using KPoly = UniPoly<FieldElement>;

struct KFactor {
  KPoly factor;  // monic
  int multiplicity;
};

inline KPoly to_kpoly(const QPoly& f) {
  return f.map([](const Rational& c) { return FieldElement(c); });
}

// The common field of all coefficients (Q when every coefficient is rational).
inline NumberField field_of(const KPoly& f) {
  NumberField field;
  for (const auto& c : f.coefficients()) {
    if (c.is_rational()) continue;
    if (field.is_rational()) {
      field = c.field();
    } else if (!(field == c.field())) {
      fail(ErrorCode::FieldMismatch, "polynomial mixes coefficients from different number fields");
    }
  }
  return field;
}

inline bool is_rational_poly(const KPoly& f) { return field_of(f).is_rational(); }

inline QPoly to_qpoly(const KPoly& f) {
  return f.map([](const FieldElement& c) { return c.as_rational(); });
}

// Field homomorphism determined by the image of the source generator.
struct Embedding {
  NumberField source;
  NumberField target;
  FieldElement generator_image;  // in target; unused when source is Q

  static Embedding identity(const NumberField& f) {
    return {f, f, f.is_rational() ? FieldElement(0) : FieldElement::generator(f)};
  }

  FieldElement apply(const FieldElement& e) const {
    if (e.is_rational()) return e;
    if (!(e.field() == source)) fail(ErrorCode::FieldMismatch, "embedding applied outside its source field");
    if (source == target) return e;
    return QPoly(e.coordinates(), 't').eval_in(generator_image, FieldElement(0));
  }

  KPoly apply(const KPoly& f) const {
    return f.map([this](const FieldElement& c) { return apply(c); });
  }
};

namespace detail {

// Q-polynomials G_j(X) with f(t) = sum_j G_j(theta) t^j.
inline std::vector<QPoly> coordinate_polys(const KPoly& f) {
  std::vector<QPoly> out;
  for (const auto& c : f.coefficients()) out.emplace_back(c.coordinates(), 't');
  return out;
}

// Newton interpolation through (xs[i], ys[i]).
inline QPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys, char var) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly acc(var);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * QPoly({-xs[i], Rational(1)}, var);
    acc += QPoly::constant(ys[i], var);
  }
  return acc;
}

}  // namespace detail

// N(t) = Res_X(m(X), f(t)|_{theta -> X}) for f over K = Q(theta).
inline QPoly norm(const KPoly& f, const NumberField& field) {
  if (field.is_rational()) return to_qpoly(f);
  const QPoly m = field.minimal_polynomial();
  const auto parts = detail::coordinate_polys(f);
  const int points = f.degree().value() * field.degree() + 1;
  std::vector<Rational> xs, ys;
  for (int i = 0; i < points; ++i) {
    Rational t0(i);
    QPoly b('t');
    Rational power(1);
    for (const auto& part : parts) {
      b += power * part;
      power *= t0;
    }
    xs.push_back(t0);
    ys.push_back(resultant(m, b));
  }
  return detail::interpolate(xs, std::move(ys), f.var());
}

namespace detail {

inline bool canonical_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a.coefficients()[i] <=> b.coefficients()[i];
    if (c != 0) return c < 0;
  }
  return false;
}

// Shift s with squarefree norm of f(t - s*theta); returns (s, norm).
inline std::pair<long, QPoly> squarefree_norm(const KPoly& f, const NumberField& field) {
  const FieldElement theta = FieldElement::generator(field);
  for (long k = 0;; ++k) {
    long s = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    KPoly shifted = f.compose(KPoly({-FieldElement(s) * theta, FieldElement(1)}, f.var()));
    QPoly n = norm(shifted, field);
    if (gcd(n, n.derivative()).degree() == 0) return {s, n};
  }
}

// Trager's algorithm for a monic squarefree f over a proper extension.
inline std::vector<KPoly> trager(const KPoly& f, const NumberField& field) {
  if (f.degree() <= 1) return {f.monic()};
  const FieldElement theta = FieldElement::generator(field);
  auto [s, n] = squarefree_norm(f, field);
  auto facs = factor_irreducible(n);
  if (facs.size() == 1) return {f.monic()};
  const KPoly shifted = f.compose(KPoly({-FieldElement(s) * theta, FieldElement(1)}, f.var()));
  const KPoly back({FieldElement(s) * theta, FieldElement(1)}, f.var());
  std::vector<KPoly> out;
  for (const auto& qf : facs) {
    KPoly h = gcd(to_kpoly(qf.factor).with_var(f.var()), shifted);
    out.push_back(h.compose(back).monic());
  }
  return out;
}

}  // namespace detail

// Irreducible factorization over `field`, which must contain every
// coefficient of f (Zassenhaus over Q, Trager's norm method otherwise).
inline std::vector<KFactor> factor_over(const KPoly& f, const NumberField& field) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factorization of the zero polynomial");
  if (f.is_constant()) fail(ErrorCode::ConstantInput, "factorization of a constant polynomial");
  const NumberField own = field_of(f);
  if (!own.is_rational() && !(own == field)) fail(ErrorCode::FieldMismatch, "polynomial is not over the given field");
  std::vector<KFactor> out;
  if (field.is_rational()) {
    for (const auto& qf : factor_irreducible(to_qpoly(f))) out.push_back({to_kpoly(qf.factor).with_var(f.var()), qf.multiplicity});
    return out;
  }
  for (const auto& sf : squarefree_decomposition(f)) {
    for (auto& g : detail::trager(sf.factor, field)) out.push_back({std::move(g), sf.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const KFactor& a, const KFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return detail::canonical_less(a.factor, b.factor);
  });
  if constexpr (kSelfCheck) {
    KPoly prod = KPoly::constant(FieldElement(1), f.var());
    for (const auto& k : out) prod *= k.factor.pow(k.multiplicity);
    ensure(prod == f.monic(), "factorization over the extension does not multiply back");
  }
  return out;
}

inline std::vector<KFactor> factor_irreducible(const KPoly& f) { return factor_over(f, field_of(f)); }

inline bool is_irreducible_over(const KPoly& f, const NumberField& field) {
  if (f.is_constant()) return false;
  auto facs = factor_over(f, field);
  return facs.size() == 1 && facs[0].multiplicity == 1;
}


struct Extension {
  NumberField field;    // simple extension of Q
  FieldElement root;    // root of the adjoined polynomial, in `field`
  Embedding embedding;  // base -> field
};

// Adjoins a root of m (irreducible over `base`) and collapses the tower to a
// single generator over Q.
inline Extension extend(const NumberField& base, const KPoly& m) {
  if (m.is_constant()) fail(ErrorCode::ConstantModulus, "cannot adjoin a root of a constant");
  NumberField mf = field_of(m);
  if (!mf.is_rational() && !(mf == base)) fail(ErrorCode::FieldMismatch, "polynomial is not over the base field");
  if (!is_irreducible_over(m, base)) fail(ErrorCode::ReducibleModulus, "polynomial is reducible over the base field");
  if (m.degree() == 1) {
    return {base, -m.coeff(0) / m.coeff(1), Embedding::identity(base)};
  }
  if (base.is_rational()) {
    NumberField f = NumberField::unchecked(to_qpoly(m).monic().with_var('t'));
    return {f, FieldElement::generator(f), Embedding::identity(f)};
  }
  const KPoly mm = m.monic();
  auto [s, n] = detail::squarefree_norm(mm, base);
  NumberField field = NumberField::unchecked(n.monic().with_var('t'));
  const FieldElement u = FieldElement::generator(field);
  // theta is the unique common root of m_base(X) and mm(u - s X) with theta -> X.
  const auto parts = detail::coordinate_polys(mm);
  const KPoly lin = KPoly({u, FieldElement(-s)}, 'X');
  KPoly h('X'), power = KPoly::constant(FieldElement(1), 'X');
  for (const auto& part : parts) {
    h += to_kpoly(part.with_var('X')) * power;
    power *= lin;
  }
  KPoly common = gcd(to_kpoly(base.minimal_polynomial()).with_var('X'), h);
  ensure(common.degree() == 1, "tower collapse did not isolate the base generator");
  const FieldElement theta_image = -common.coeff(0);
  const FieldElement root = u - FieldElement(s) * theta_image;
  return {field, root, Embedding{base, field, theta_image}};
}

}  // namespace danielewski
