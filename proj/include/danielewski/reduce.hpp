#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "danielewski/error.hpp"
#include "danielewski/poly_ops.hpp"
#include "danielewski/surface.hpp"
#include "danielewski/transform.hpp"

namespace danielewski {

struct StandardnessReport {
  bool is_standard;
  bool is_reduced_standard;
  std::string failing;  // first failed condition, empty when reduced standard
};

// q with Q = p(z) + x q(x, z).
inline BiPoly q_part(const BiPoly& Q) { return (Q - from_univariate(at_x0(Q))).divide_by_power(kX, 1); }

inline StandardnessReport standardness(const DanielewskiSurface& X) {
  const int d = X.d();
  const BiPoly q = q_part(X.Q());
  const bool standard = q.is_zero() || q.degree_in(kZ) < d;
  const bool low_x = X.Q().degree_in(kX) < X.n();
  const bool tight = q.is_zero() || q.degree_in(kZ) < d - 1;
  std::string failing;
  if (!standard) {
    failing = "deg_z q >= deg p";
  } else if (!low_x) {
    failing = "deg_x Q >= n";
  } else if (!tight) {
    failing = "deg_z q >= deg p - 1";
  }
  return {standard, standard && low_x && tight, failing};
}

struct Reduction {
  DanielewskiSurface surface;
  IsoWitness witness;  // input -> surface
};

// Drops x^n R(x, z) from Q via (x, y - R, z).
inline Reduction modx_reduce(const DanielewskiSurface& X) {
  auto [T, R] = truncate_mod_x(X.Q(), X.n());
  if (R.is_zero()) return {X, identity_witness(X)};
  DanielewskiSurface target = DanielewskiSurface::validate(X.n(), T);
  const AmbientPoly r = to_ambient(R);
  AmbientMap map({amb_x(), amb_y() - r, amb_z()}, {amb_x(), amb_y() + r, amb_z()});
  return {target, checked({std::move(map), FieldElement(1), X, target, WitnessScope::AmbientEquivalence})};
}

// Builds pi, q_s with Q = (1 + x pi)(p + x q_s) + x^n R_n and deg_z q_s < deg p,
// then inverts the unit-multiplier map from the standard form.
inline Reduction to_standard_form(const DanielewskiSurface& X) {
  const int n = X.n();
  const BiPoly& Q = X.Q();
  const KPoly p = X.p();
  const BiPoly P = from_univariate(p);
  const BiPoly one = bi_const(FieldElement(1));
  BiPoly pi, qs;
  for (int m = 0; m + 1 < n; ++m) {
    const BiPoly approx = (one + pi.shift(kX, 1)) * (P + qs.shift(kX, 1));
    const BiPoly R = (Q - approx).split_at(kX, m + 1).second;
    ensure(trunc(Q - approx, m + 1).is_zero(), "standard form congruence lost");
    auto qr = div_euclid_z(at_x0(R), p);
    pi += from_univariate(qr.quotient).shift(kX, m);
    qs += from_univariate(qr.remainder).shift(kX, m);
  }
  const BiPoly Qs = P + qs.shift(kX, 1);
  const BiPoly unit = one + pi.shift(kX, 1);
  const BiPoly diff = Q - unit * Qs;
  const BiPoly Rn = diff.divide_by_power(kX, n);
  IsoWitness w = reversed(lucy_gene_map(Qs, n, pi, Rn));
  ensure(w.source == X, "standard form witness does not start at the input");
  return {w.target, checked(std::move(w))};
}

// Standard form, then z -> z - beta(x) killing the x-part of the z^(d-1)
// coefficient, then truncation mod x^n.
inline Reduction to_reduced_standard_form(const DanielewskiSurface& X) {
  Reduction s = to_standard_form(X);
  const DanielewskiSurface& Xs = s.surface;
  const int d = Xs.d();
  const FieldElement ad = Xs.p().leading();
  // beta(x) = -(x alpha_{d-1}(x)) / (d a_d), alpha_{d-1} read off Q_s - p.
  const KPoly sub = z_slice(Xs.Q() - from_univariate(Xs.p()), d - 1);
  IsoWitness w = s.witness;
  DanielewskiSurface cur = Xs;
  if (!sub.is_zero()) {
    const FieldElement scale = -(FieldElement(d) * ad).inverse();
    const BiPoly beta = scale * from_univariate(sub);
    const BiPoly shifted = subst_z(Xs.Q(), bi_z() + beta);
    DanielewskiSurface target = DanielewskiSurface::validate(Xs.n(), shifted);
    const AmbientPoly b = to_ambient(beta);
    AmbientMap map({amb_x(), amb_y(), amb_z() - b}, {amb_x(), amb_y(), amb_z() + b});
    w = then(w, checked({std::move(map), FieldElement(1), Xs, target, WitnessScope::AmbientEquivalence}));
    cur = target;
  }
  Reduction m = modx_reduce(cur);
  if (!(m.surface == cur)) w = then(w, m.witness);
  return {m.surface, checked(std::move(w))};
}

// q_i(x, t) for i = 1..d with q = sum_i p^(i)(z) q_i(x, p(z)); the t slot is kZ.
// Index 0 of the result is unused.
inline std::vector<BiPoly> decompose_q(const BiPoly& q, const KPoly& p) {
  const int d = p.degree().value();
  ensure(d >= 2, "decomposition needs deg p >= 2");
  std::vector<KPoly> derivs(static_cast<std::size_t>(d) + 1);
  for (int i = 1; i <= d; ++i) derivs[static_cast<std::size_t>(i)] = p.derivative(i);
  std::vector<BiPoly> out(static_cast<std::size_t>(d) + 1);
  const auto digits = p_adic_expand(q, p);
  for (std::size_t j = 0; j < digits.size(); ++j) {
    BiPoly c = digits[j];
    // derivs[i] has degree d - i, so peel z^(d-1), ..., z^0 in turn.
    for (int i = 1; i <= d && !c.is_zero(); ++i) {
      const KPoly& basis = derivs[static_cast<std::size_t>(i)];
      const KPoly lambda = z_slice(c, d - i);
      if (lambda.is_zero()) continue;
      const BiPoly l = basis.leading().inverse() * from_univariate(lambda);
      c -= l * from_univariate(basis);
      out[static_cast<std::size_t>(i)] += l.shift(kZ, static_cast<int>(j));
    }
    ensure(c.is_zero(), "triangular change of basis left a remainder");
  }
  return out;
}

// p(z) + x sum_{i>=2} p^(i)(z) q_i(x, p(z)).
inline BiPoly normal_form_polynomial(const KPoly& p, const std::map<int, BiPoly>& qs) {
  BiPoly Q = from_univariate(p);
  const BiPoly P = from_univariate(p);
  BiPoly acc;
  for (const auto& [i, qi] : qs) {
    acc += from_univariate(p.derivative(i)) * qi.substitute<2>({bi_x(), P});
  }
  return Q + acc.shift(kX, 1);
}

struct NormalForm {
  int n;
  KPoly p;
  std::map<int, BiPoly> q;  // nonzero q_i(x, t), i in 2..deg p
  DanielewskiSurface surface;
  IsoWitness witness;  // ambient equivalence from the input

  BiPoly q_at(int i) const {
    auto it = q.find(i);
    return it == q.end() ? BiPoly() : it->second;
  }
};

namespace detail {

// x^k b(...) shift removing the q_{1,k} component, as an ambient equivalence.
inline Reduction normal_form_shift(const DanielewskiSurface& X, int k, const KPoly& b) {
  const int n = X.n();
  const BiPoly& Q1 = X.Q();
  // tau(x, w) = w - x^k b(Q1(x, tau)) mod x^n.
  BiPoly tau = bi_z();
  for (int it = 0; it <= n / k + 1; ++it) {
    tau = trunc(bi_z() - eval_univariate(b, subst_z(Q1, tau)).shift(kX, k), n);
  }
  const BiPoly Q2 = trunc(subst_z(Q1, tau), n);
  DanielewskiSurface target = DanielewskiSurface::validate(n, Q2);
  const AmbientPoly F1 = defining_polynomial(X);
  const AmbientPoly F2 = defining_polynomial(target);
  auto b_of = [&](const AmbientPoly& arg) { return eval_univariate(b, arg); };
  const AmbientPoly fwd_z = amb_z() + b_of(-F1).shift(kX, k);
  const AmbientPoly back_z = amb_z() - b_of(-F2).shift(kX, k);
  const AmbientPoly fwd_y = (F1 + to_ambient(Q2).substitute<3>({amb_x(), amb_y(), fwd_z})).divide_by_power(kX, n);
  const AmbientPoly back_y = (F2 + to_ambient(Q1).substitute<3>({amb_x(), amb_y(), back_z})).divide_by_power(kX, n);
  AmbientMap map({amb_x(), fwd_y, fwd_z}, {amb_x(), back_y, back_z});
  return {target, checked({std::move(map), FieldElement(1), X, target, WitnessScope::AmbientEquivalence})};
}

}  // namespace detail

inline NormalForm to_normal_form(const DanielewskiSurface& X) {
  Reduction r = modx_reduce(X);
  IsoWitness w = r.witness;
  DanielewskiSurface cur = r.surface;
  const int n = X.n();
  const KPoly p = X.p();
  for (int k = 1; k <= n - 1; ++k) {
    const auto qs = decompose_q(q_part(cur.Q()), p);
    const KPoly b = x_slice(qs[1], k - 1);
    if (b.is_zero()) continue;
    Reduction s = detail::normal_form_shift(cur, k, b);
    w = then(w, s.witness);
    cur = s.surface;
  }
  const auto qs = decompose_q(q_part(cur.Q()), p);
  ensure(qs[1].is_zero(), "normal form still has a first-derivative component");
  std::map<int, BiPoly> q;
  for (std::size_t i = 2; i < qs.size(); ++i) {
    if (!qs[i].is_zero()) q.emplace(static_cast<int>(i), qs[i]);
  }
  ensure(normal_form_polynomial(p, q) == cur.Q(), "normal form does not reconstruct");
  return {n, p, std::move(q), cur, checked(std::move(w))};
}

}  // namespace danielewski
