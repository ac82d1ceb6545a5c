#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "danielewski/error.hpp"
#include "danielewski/format.hpp"
#include "danielewski/poly_ops.hpp"
#include "danielewski/surface.hpp"

namespace danielewski {

using MapComponents = std::array<AmbientPoly, 3>;

inline MapComponents identity_components() { return {amb_x(), amb_y(), amb_z()}; }

// Polynomial self-map of affine 3-space given by the images of x, y, z, with
// an optional explicit inverse.
class AmbientMap {
 public:
  AmbientMap() : components_(identity_components()) {}
  explicit AmbientMap(MapComponents components) : components_(std::move(components)) {}
  AmbientMap(MapComponents components, MapComponents inverse)
      : components_(std::move(components)), inverse_(std::make_shared<const MapComponents>(std::move(inverse))) {}

  static AmbientMap identity() { return AmbientMap(identity_components(), identity_components()); }

  const MapComponents& components() const { return components_; }
  const AmbientPoly& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  bool has_inverse() const { return inverse_ != nullptr; }

  AmbientMap inverse() const {
    ensure(has_inverse(), "map has no attached inverse");
    return AmbientMap(*inverse_, components_);
  }

  // g(image of x, image of y, image of z).
  AmbientPoly pullback(const AmbientPoly& g) const { return g.substitute<3>(components_); }

  friend bool operator==(const AmbientMap& a, const AmbientMap& b) { return a.components_ == b.components_; }

 private:
  MapComponents components_;
  std::shared_ptr<const MapComponents> inverse_;
};

inline MapComponents compose_components(const MapComponents& f, const MapComponents& g) {
  return {f[0].substitute<3>(g), f[1].substitute<3>(g), f[2].substitute<3>(g)};
}

// f after g; the inverse is g^-1 after f^-1 when both are known.
inline AmbientMap compose(const AmbientMap& f, const AmbientMap& g) {
  MapComponents c = compose_components(f.components(), g.components());
  if (f.has_inverse() && g.has_inverse()) {
    return AmbientMap(std::move(c), compose_components(g.inverse().components(), f.inverse().components()));
  }
  return AmbientMap(std::move(c));
}

// (x, y, z) -> (a x, c y + S(x, z), alpha z + beta(x)) with c = mu a^-n.
struct TriangularAuto {
  FieldElement a;
  FieldElement alpha;
  KPoly beta;  // in x
  FieldElement y_scale;
  BiPoly S;

  static TriangularAuto make(const FieldElement& a, const FieldElement& alpha, const KPoly& beta,
                             const FieldElement& mu, int n, const BiPoly& S) {
    if (a.is_zero() || alpha.is_zero() || mu.is_zero()) fail(ErrorCode::ZeroMultiplier, "triangular map needs a, alpha, mu nonzero");
    return {a, alpha, beta.with_var('x'), mu * a.pow(-n), S};
  }

  MapComponents components() const {
    AmbientPoly b = to_ambient(from_univariate(beta.with_var('x')));
    return {a * amb_x(), y_scale * amb_y() + to_ambient(S), alpha * amb_z() + b};
  }
};

inline AmbientMap triangular_inverse(const TriangularAuto& T) {
  ensure(!T.a.is_zero() && !T.alpha.is_zero() && !T.y_scale.is_zero(), "degenerate triangular map");
  const AmbientPoly x_inv = T.a.inverse() * amb_x();
  const AmbientPoly beta_back =
      to_ambient(from_univariate(T.beta.with_var('x'))).substitute<3>({x_inv, amb_y(), amb_z()});
  const AmbientPoly z_inv = T.alpha.inverse() * (amb_z() - beta_back);
  const AmbientPoly s_back = to_ambient(T.S).substitute<3>({x_inv, amb_y(), z_inv});
  const AmbientPoly y_inv = T.y_scale.inverse() * (amb_y() - s_back);
  return AmbientMap({x_inv, y_inv, z_inv}, T.components());
}

inline AmbientMap to_map(const TriangularAuto& T) { return triangular_inverse(T).inverse(); }

enum class WitnessScope { AmbientEquivalence, SurfaceIsomorphism };

inline const char* to_string(WitnessScope s) {
  return s == WitnessScope::AmbientEquivalence ? "AmbientEquivalence" : "SurfaceIsomorphism";
}

// Certificate that `map` carries `source` onto `target`. For ambient scope,
// F_target(map) = mu F_source exactly.
struct IsoWitness {
  AmbientMap map;
  FieldElement mu;
  DanielewskiSurface source;
  DanielewskiSurface target;
  WitnessScope scope;
};

inline IsoWitness identity_witness(const DanielewskiSurface& X) {
  return {AmbientMap::identity(), FieldElement(1), X, X, WitnessScope::AmbientEquivalence};
}

// second after first.
inline IsoWitness then(const IsoWitness& first, const IsoWitness& second) {
  ensure(first.target == second.source, "witnesses do not chain");
  WitnessScope scope = (first.scope == WitnessScope::AmbientEquivalence && second.scope == WitnessScope::AmbientEquivalence)
                           ? WitnessScope::AmbientEquivalence
                           : WitnessScope::SurfaceIsomorphism;
  return {compose(second.map, first.map), first.mu * second.mu, first.source, second.target, scope};
}

inline IsoWitness reversed(const IsoWitness& w) {
  return {w.map.inverse(), w.mu.inverse(), w.target, w.source, w.scope};
}

struct Verification {
  bool ok;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

namespace detail {

// Images of x, y, z restricted to X, as Laurent polynomials in (x, z).
inline std::array<LaurentBiPoly, 3> restrict_to(const MapComponents& m, const DanielewskiSurface& X) {
  return {on_surface_pullback(m[0], X.n(), X.Q()), on_surface_pullback(m[1], X.n(), X.Q()),
          on_surface_pullback(m[2], X.n(), X.Q())};
}

inline std::optional<std::string> check_direction(const MapComponents& fwd, const MapComponents& back,
                                                  const DanielewskiSurface& from, const DanielewskiSurface& to,
                                                  const char* label) {
  auto on_from = restrict_to(fwd, from);
  LaurentBiPoly residual = defining_polynomial(to).substitute<2>(on_from);
  if (!residual.is_zero()) {
    return std::string(label) + ": target equation does not vanish on the source surface; residual " +
           format_poly(residual);
  }
  const std::array<LaurentBiPoly, 3> identity{bi_x(), from.Q().shift(kX, -from.n()), bi_z()};
  static const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < 3; ++i) {
    LaurentBiPoly round = back[i].substitute<2>(on_from) - identity[i];
    if (!round.is_zero()) {
      return std::string(label) + ": round trip moves " + names[i] + " on the source surface; residual " +
             format_poly(round);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Exact check that F2(map) = mu F1 with an attached inverse that undoes the
// map identically. Returns mu, or nothing on failure.
inline std::optional<FieldElement> verify_ambient_equivalence(const AmbientMap& map, const DanielewskiSurface& X1,
                                                              const DanielewskiSurface& X2) {
  if (!map.has_inverse()) return std::nullopt;
  const AmbientPoly F1 = defining_polynomial(X1);
  const AmbientPoly P = map.pullback(defining_polynomial(X2));
  const FieldElement mu = P.coeff({X1.n(), 1, 0});
  if (mu.is_zero() || !(P == mu * F1)) return std::nullopt;
  const MapComponents id = identity_components();
  const AmbientMap inv = map.inverse();
  if (compose_components(inv.components(), map.components()) != id) return std::nullopt;
  if (compose_components(map.components(), inv.components()) != id) return std::nullopt;
  return mu;
}

inline Verification verify_surface_isomorphism(const IsoWitness& w) {
  if (!w.map.has_inverse()) return {false, "witness has no inverse attached"};
  const MapComponents& fwd = w.map.components();
  const MapComponents back = w.map.inverse().components();
  if (auto err = detail::check_direction(fwd, back, w.source, w.target, "forward")) return {false, *err};
  if (auto err = detail::check_direction(back, fwd, w.target, w.source, "inverse")) return {false, *err};
  if (w.scope == WitnessScope::AmbientEquivalence) {
    const AmbientPoly residual = w.map.pullback(defining_polynomial(w.target)) - w.mu * defining_polynomial(w.source);
    if (!residual.is_zero()) {
      return {false, "ambient identity F_target(map) = mu F_source fails; residual " + format_poly(residual)};
    }
  }
  return {true, ""};
}

// In self-check builds every constructed witness is verified on the spot.
inline IsoWitness checked(IsoWitness w) {
  if constexpr (kSelfCheck) {
    auto v = verify_surface_isomorphism(w);
    ensure(v.ok, "constructed witness failed verification");
  }
  return w;
}

// X_{Q1,n} -> X_{Q2,n} with Q2 = (1 + x pi) Q1 + x^n R via
// (x, y, z) -> (x, (1 + x pi) y + R, z).
inline IsoWitness lucy_gene_map(const BiPoly& Q1, int n, const BiPoly& pi, const BiPoly& R) {
  const DanielewskiSurface source = DanielewskiSurface::validate(n, Q1);
  const BiPoly unit = bi_const(FieldElement(1)) + pi.shift(kX, 1);
  const BiPoly Q2 = unit * Q1 + R.shift(kX, n);
  std::optional<DanielewskiSurface> target;
  try {
    target = DanielewskiSurface::validate(n, Q2);
  } catch (const Error&) {
    fail(ErrorCode::InvalidTarget, "target of the unit-multiplier map is not a valid surface");
  }
  // f = sum_{j<n} (-x pi)^j, g = (-pi)^n so that (1 + x pi) f + x^n g = 1.
  BiPoly f, term = bi_const(FieldElement(1));
  const BiPoly minus_xpi = -pi.shift(kX, 1);
  for (int j = 0; j < n; ++j) {
    f += term;
    term = term * minus_xpi;
  }
  const BiPoly g = (-pi).pow(n);
  ensure((unit * f + g.shift(kX, n)) == bi_const(FieldElement(1)), "Bezout cofactors for the unit map");
  MapComponents fwd{amb_x(), to_ambient(unit) * amb_y() + to_ambient(R), amb_z()};
  MapComponents back{amb_x(), to_ambient(f) * amb_y() + to_ambient(g * Q1 - f * R), amb_z()};
  const WitnessScope scope = pi.is_zero() ? WitnessScope::AmbientEquivalence : WitnessScope::SurfaceIsomorphism;
  return checked({AmbientMap(std::move(fwd), std::move(back)), FieldElement(1), source, *target, scope});
}

}  // namespace danielewski
