// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Built without the self-check define; every witness is verified explicitly here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace testing_support;
using dw::BiPoly;
using dw::FieldElement;
using dw::Verdict;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool verified(const dw::IsoWitness& w) { return dw::verify_surface_isomorphism(w).ok; }

bool ambient_verified(const dw::IsoWitness& w) {
  return w.scope == dw::WitnessScope::AmbientEquivalence &&
         dw::verify_ambient_equivalence(w.map, w.source, w.target) == std::optional<FieldElement>(w.mu) && verified(w);
}

dw::DanielewskiSurface W(int n) { return surf(n, "z*(z-1)"); }

// mu^-1 Q(x', z') at x' = x / a, z' = (z - beta(x / a)) / alpha: the image of X under
// (a x, mu a^-n y, alpha z + beta(x)).
BiPoly image_q(const BiPoly& Q, FieldElement a, FieldElement alpha, const dw::KPoly& beta, FieldElement mu) {
  const BiPoly xi = a.inverse() * dw::bi_x();
  const BiPoly b = dw::from_univariate(beta.with_var('x')).substitute<2>({xi, dw::bi_z()});
  const BiPoly zi = alpha.inverse() * (dw::bi_z() - b);
  return mu * Q.substitute<2>({xi, zi});
}

Outcome w_family() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const auto t = Clock::now();
      auto r = dw::are_isomorphic(W(n), W(m));
      const double s = seconds_since(t);
      if ((r.verdict == Verdict::Isomorphic) != (n == m)) o.fail("wrong verdict for W" + std::to_string(n) + ", W" + std::to_string(m));
      if (r.witness && !verified(*r.witness)) o.fail("unverified witness");
      if (s >= 1.0) o.fail("query over 1 s");
    }
  }
  return o;
}

Outcome fg_pair() {
  Outcome o;
  auto f = surf(2, "(1+x)*(z^2-1)"), g = surf(2, "z^2-1");
  auto iso = dw::are_isomorphic(f, g);
  if (iso.verdict != Verdict::Isomorphic) o.fail("f, g not isomorphic");
  if (!iso.witness || !verified(*iso.witness)) o.fail("isomorphism witness missing or unverified");
  if (dw::are_equivalent(f, g).verdict != Verdict::NotEquivalent) o.fail("f, g declared equivalent");
  return o;
}

Outcome equivalence_round_trip() {
  Outcome o;
  Random r(301);
  for (int i = 0; i < 200; ++i) {
    auto X = r.surface(3, 4, 3);
    const int n = X.n();
    BiPoly Q2 = image_q(X.Q(), r.rational(true), r.rational(true), r.zpoly(static_cast<int>(r.integer(0, 2))).with_var('x'),
                        r.rational(true));
    // y-part S of the automorphism: shift by x^n R.
    if (r.coin()) Q2 += r.surface_q(2, 1).shift(dw::kX, n);
    auto Y = dw::DanielewskiSurface::validate(n, Q2);
    auto e = dw::are_equivalent(X, Y);
    if (e.verdict != Verdict::Equivalent) {
      o.fail("not equivalent: " + dw::format_surface(X) + " vs " + dw::format_surface(Y));
    } else if (!e.witness || !ambient_verified(*e.witness)) {
      o.fail("equivalence witness unverified for " + dw::format_surface(X));
    }
  }
  return o;
}

Outcome isomorphism_round_trip() {
  Outcome o;
  Random r(401);
  for (int i = 0; i < 200; ++i) {
    auto X = r.surface(3, 4, 3);
    const int n = X.n();
    BiPoly Q2 = image_q(X.Q(), r.rational(true), r.rational(true), dw::KPoly::constant(r.rational(), 'x'), r.rational(true));
    // Half of the cases also pick up a unit multiplier, which only an isomorphism absorbs.
    if (r.coin()) Q2 = (BiPoly::constant(FieldElement(1)) + r.surface_q(1, 0).shift(dw::kX, 1)) * Q2;
    auto Y = dw::DanielewskiSurface::validate(n, Q2);
    auto res = dw::are_isomorphic(X, Y);
    if (res.verdict != Verdict::Isomorphic) {
      o.fail("not isomorphic: " + dw::format_surface(X) + " vs " + dw::format_surface(Y));
    } else if (!res.witness || !verified(*res.witness)) {
      o.fail("isomorphism witness unverified for " + dw::format_surface(X));
    }
  }
  return o;
}

Outcome reduction_correctness() {
  Outcome o;
  Random r(501);
  for (int i = 0; i < 200; ++i) {
    auto X = r.surface(3, 4, 3);
    auto s = dw::to_standard_form(X);
    if (!dw::standardness(s.surface).is_standard) o.fail("standard form predicate");
    if (!(s.witness.source == X) || !verified(s.witness)) o.fail("standard form witness");
    if (!(dw::to_standard_form(s.surface).surface == s.surface)) o.fail("standard form not idempotent");
    auto rs = dw::to_reduced_standard_form(X);
    if (!dw::standardness(rs.surface).is_reduced_standard) o.fail("reduced form predicate");
    if (!(rs.witness.source == X) || !verified(rs.witness)) o.fail("reduced form witness");
    if (!(dw::to_reduced_standard_form(rs.surface).surface == rs.surface)) o.fail("reduced form not idempotent");
  }
  return o;
}

Outcome normal_form_soundness() {
  Outcome o;
  Random r(601);
  for (int i = 0; i < 100; ++i) {
    auto X = r.surface(3, 4, 3);
    auto nf = dw::to_normal_form(X);
    for (const auto& [idx, qi] : nf.q) {
      if (!(qi.degree_in(dw::kX) < X.n() - 1)) o.fail("deg_x q_" + std::to_string(idx) + " too large");
    }
    auto rebuilt = dw::DanielewskiSurface::validate(nf.n, dw::normal_form_polynomial(nf.p, nf.q));
    auto e = dw::are_equivalent(X, rebuilt);
    if (e.verdict != Verdict::Equivalent || !e.witness || !ambient_verified(*e.witness)) {
      o.fail("normal form not equivalent to " + dw::format_surface(X));
    }
  }
  return o;
}

Outcome embedding_pairs() {
  Outcome o;
  Random r(701);
  int made = 0;
  while (made < 50) {
    auto X0 = r.surface(3, 4, 3);
    if (X0.n() < 2) continue;
    auto X = dw::to_standard_form(X0).surface;
    ++made;
    auto e = dw::nonequiv_embeddings(X);
    if (!verified(e.witness)) o.fail("embedding witness unverified");
    if (e.equivalence.verdict != Verdict::NotEquivalent) o.fail("embedding pair equivalent for " + dw::format_surface(X));
    if (dw::are_isomorphic(X, e.Y).verdict != Verdict::Isomorphic) o.fail("embedding pair not isomorphic");
  }
  return o;
}

Outcome lnd_suite() {
  Outcome o;
  Random r(801);
  using P5 = dw::SparsePoly<5>;
  for (int i = 0; i < 100; ++i) {
    auto X = r.surface(4, 4, 3);
    auto D = dw::canonical_lnd(X);
    const dw::AmbientPoly F = dw::defining_polynomial(X);
    if (!dw::vanishes_on(dw::lnd_apply(D, F), X)) o.fail("delta(F) does not vanish");
    dw::AmbientPoly g = amb("y");
    for (int k = 0; k <= X.d(); ++k) g = dw::lnd_apply(D, g);
    if (!g.is_zero()) o.fail("delta^(d+1)(y) != 0");
    for (const char* s : {"x", "x^2 + 3*x"}) {
      if (!dw::lnd_apply(D, amb(s)).is_zero()) o.fail("x-polynomial outside the kernel");
    }
    auto act = dw::plus_action(X);
    auto lift = [](const dw::ActionPoly& p, int slot) { return p.embed<5>({dw::kX, dw::kAy, dw::kAz, slot}); };
    std::array<P5, 5> after_s{lift(act[0], 3), lift(act[1], 3), lift(act[2], 3), P5::variable(3), P5::variable(4)};
    std::array<P5, 5> sum_time{P5::variable(0), P5::variable(1), P5::variable(2), P5::variable(3) + P5::variable(4),
                               P5::variable(4)};
    for (std::size_t c = 0; c < 3; ++c) {
      if (!(lift(act[c], 4).substitute<5>(after_s) == lift(act[c], 3).substitute<5>(sum_time))) o.fail("group law");
    }
    if (!(F.substitute<4>({act[0], act[1], act[2]}) == F.embed<4>({dw::kX, dw::kAy, dw::kAz}))) o.fail("F not invariant");
  }
  return o;
}

Outcome decompose_reconstruction() {
  Outcome o;
  Random r(901);
  for (int i = 0; i < 500; ++i) {
    auto p = r.zpoly(static_cast<int>(r.integer(2, 6)));
    BiPoly q = r.surface_q(static_cast<int>(r.integer(0, 12)), 3);
    auto parts = dw::decompose_q(q, p);
    BiPoly back;
    const BiPoly P = dw::from_univariate(p);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      back += dw::from_univariate(p.derivative(static_cast<int>(k))) * parts[k].substitute<2>({dw::bi_x(), P});
    }
    if (!(back == q)) o.fail("decomposition does not reconstruct");
  }
  return o;
}

Outcome solver_completeness() {
  Outcome o;
  dw::ClassifyOptions rational;
  rational.rational_only = true;
  for (int n = 1; n <= 4; ++n) {
    if (dw::are_isomorphic(W(n), W(n)).solutions.empty()) o.fail("no class for W" + std::to_string(n));
  }
  if (dw::are_isomorphic(surf(2, "(1+x)*(z^2-1)"), surf(2, "z^2-1")).solutions.empty()) o.fail("no class for f, g");

  Random r(1001);
  for (int i = 0; i < 20; ++i) {
    // Q1 = G(x, z^2), Q2 = mu G(x / a, z^2 / 2): matching needs alpha^2 = 2.
    const int n = static_cast<int>(r.integer(2, 3));
    FieldElement c = r.rational(true);
    BiPoly G = dw::bi_z().pow(2) + c * dw::bi_z();
    for (int k = 1; k < n; ++k) {
      if (r.coin(0.7)) G += BiPoly::monomial({k, static_cast<int>(r.integer(0, 1))}, r.rational(true));
    }
    const BiPoly Q1 = G.substitute<2>({dw::bi_x(), dw::bi_z().pow(2)});
    const FieldElement a = r.rational(true), mu = r.rational(true);
    const BiPoly Q2 = mu * G.substitute<2>({a.inverse() * dw::bi_x(), FieldElement(dw::Rational(1, 2)) * dw::bi_z().pow(2)});
    auto X1 = dw::DanielewskiSurface::validate(n, Q1);
    auto X2 = dw::DanielewskiSurface::validate(n, Q2);
    auto full = dw::are_isomorphic(X1, X2);
    if (full.verdict != Verdict::Isomorphic || !full.witness || !verified(*full.witness)) {
      o.fail("full solver missed " + dw::format_surface(X1) + " vs " + dw::format_surface(X2));
    } else if (full.solutions.front().field.is_rational()) {
      o.fail("expected a quadratic class");
    }
    if (dw::are_isomorphic(X1, X2, rational).verdict != Verdict::NonIsomorphic) o.fail("rational-only found a solution");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "W-family isomorphism matrix", 16.0, w_family},
      {2, "f/g pair isomorphic, not equivalent", 2.0, fg_pair},
      {3, "equivalence round trip (200)", 60.0, equivalence_round_trip},
      {4, "isomorphism round trip (200)", 60.0, isomorphism_round_trip},
      {5, "reduction correctness (200)", 60.0, reduction_correctness},
      {6, "normal-form soundness (100)", 60.0, normal_form_soundness},
      {7, "non-equivalent embedding pairs (50)", 60.0, embedding_pairs},
      {8, "derivation and action suite (100)", 30.0, lnd_suite},
      {9, "decomposition reconstruction (500)", 10.0, decompose_reconstruction},
      {10, "solver completeness spot check", 60.0, solver_completeness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t);
    if (s >= c.limit) o.fail("over time limit");
    std::printf("[%s] %2d %-40s %8.3f s (limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit,
                o.ok ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
