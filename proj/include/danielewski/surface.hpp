#pragma once

#include <array>
#include <string>
#include <utility>

#include "danielewski/error.hpp"
#include "danielewski/poly_ops.hpp"
#include "danielewski/sparse_poly.hpp"

namespace danielewski {

// x^n y = Q(x, z) with n >= 1 and deg_z Q(0, z) >= 2. Q is kept verbatim.
class DanielewskiSurface {
 public:
  static DanielewskiSurface validate(int n, BiPoly Q) {
    if (n < 1) fail(ErrorCode::NonPositiveExponent, "exponent n must be at least 1, got " + std::to_string(n));
    if (Q.has_negative_exponent()) fail(ErrorCode::ShapeError, "Q has a negative exponent");
    NumberField field = Q.field();
    KPoly p = at_x0(Q);
    if (p.degree() < 2) fail(ErrorCode::DegreeTooLow, "deg_z Q(0,z) must be at least 2");
    DanielewskiSurface s;
    s.n_ = n;
    s.Q_ = std::move(Q);
    s.field_ = std::move(field);
    return s;
  }

  int n() const { return n_; }
  const BiPoly& Q() const { return Q_; }
  const NumberField& field() const { return field_; }
  KPoly p() const { return at_x0(Q_); }
  int d() const { return p().degree().value(); }

  friend bool operator==(const DanielewskiSurface& a, const DanielewskiSurface& b) {
    return a.n_ == b.n_ && a.Q_ == b.Q_;
  }

 private:
  DanielewskiSurface() = default;
  int n_ = 1;
  BiPoly Q_;
  NumberField field_;
};

struct SurfaceInvariants {
  int n;
  int d;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

inline SurfaceInvariants invariants(const DanielewskiSurface& X) { return {X.n(), X.d()}; }

// F = x^n y - Q(x, z).
inline AmbientPoly defining_polynomial(const DanielewskiSurface& X) {
  return amb_y().shift(kX, X.n()) - to_ambient(X.Q());
}

// h(x) (x^n d/dz + dQ/dz d/dy) on X.
struct Derivation {
  KPoly h;  // in x
  DanielewskiSurface surface;

  AmbientPoly image_z() const { return to_ambient(from_univariate(h)).shift(kX, surface.n()); }
  AmbientPoly image_y() const { return to_ambient(from_univariate(h) * derivative_z(surface.Q())); }
};

inline Derivation canonical_lnd(const DanielewskiSurface& X, const KPoly& h) {
  if (h.is_zero()) fail(ErrorCode::ZeroMultiplier, "derivation multiplier must be nonzero");
  ensure(h.is_constant() || h.var() == 'x', "multiplier must be a polynomial in x");
  return {h.with_var('x'), X};
}

inline Derivation canonical_lnd(const DanielewskiSurface& X) {
  return canonical_lnd(X, KPoly::constant(FieldElement(1), 'x'));
}

// Leibniz rule with D(x) = 0.
inline AmbientPoly lnd_apply(const Derivation& D, const AmbientPoly& g) {
  return g.derivative(kAz) * D.image_z() + g.derivative(kAy) * D.image_y();
}

inline bool vanishes_on(const AmbientPoly& g, const DanielewskiSurface& X) {
  return on_surface_pullback(g, X.n(), X.Q()).is_zero();
}

struct Nilpotency {
  enum class Kind { Finite, ZeroElement, ExceededCap };
  Kind kind;
  int degree;  // meaningful for Finite
};

inline int default_nilpotency_cap(const DanielewskiSurface& X) { return 4 * (X.d() + 1); }

// Least k with D^{k+1}(g) = 0 on the surface.
inline Nilpotency nilpotency_degree(const Derivation& D, const AmbientPoly& g, int cap) {
  ensure(cap >= 1, "nilpotency cap must be positive");
  const DanielewskiSurface& X = D.surface;
  if (vanishes_on(g, X)) return {Nilpotency::Kind::ZeroElement, 0};
  AmbientPoly cur = g;
  for (int k = 0; k <= cap; ++k) {
    AmbientPoly next = lnd_apply(D, cur);
    if (vanishes_on(next, X)) return {Nilpotency::Kind::Finite, k};
    cur = std::move(next);
  }
  return {Nilpotency::Kind::ExceededCap, cap};
}

inline Nilpotency nilpotency_degree(const Derivation& D, const AmbientPoly& g) {
  return nilpotency_degree(D, g, default_nilpotency_cap(D.surface));
}

// Images of (x, y, z) under the additive group action at time t, as
// polynomials in (x, y, z, t).
inline std::array<ActionPoly, 3> plus_action(const DanielewskiSurface& X) {
  const int n = X.n();
  const ActionPoly x = ActionPoly::variable(kX);
  const ActionPoly y = ActionPoly::variable(kAy);
  const ActionPoly z = ActionPoly::variable(kAz);
  const ActionPoly t = ActionPoly::variable(kActT);
  const ActionPoly z_new = z + t.shift(kX, n);
  const ActionPoly q = X.Q().embed<4>({kX, kAz});
  const ActionPoly moved = X.Q().substitute<4>({x, z_new});
  const ActionPoly diff = moved - q;
  for (const auto& [e, c] : diff.terms()) {
    ensure(e[kX] >= n, "action divided difference is not divisible by x^n");
  }
  return {x, y + diff.shift(kX, -n), z_new};
}

struct MLReport {
  enum class Kind { Trivial, PolynomialRingInX };
  Kind kind;
};

inline MLReport ml_invariant(const DanielewskiSurface& X) {
  return {X.n() == 1 ? MLReport::Kind::Trivial : MLReport::Kind::PolynomialRingInX};
}

inline const char* to_string(MLReport::Kind k) {
  return k == MLReport::Kind::Trivial ? "Trivial" : "PolynomialRingInX";
}

}  // namespace danielewski
