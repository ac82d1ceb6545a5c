#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;
using dw::BiPoly;
using dw::FieldElement;

namespace {

bool ambient_ok(const dw::IsoWitness& w) {
  return w.scope == dw::WitnessScope::AmbientEquivalence &&
         dw::verify_ambient_equivalence(w.map, w.source, w.target) == std::optional<FieldElement>(w.mu);
}

// Biholomorphic-style oracle for decompositions: rebuild q from the pieces.
BiPoly recombine(const std::vector<BiPoly>& qs, const dw::KPoly& p) {
  BiPoly out;
  for (std::size_t i = 1; i < qs.size(); ++i) {
    out += dw::from_univariate(p.derivative(static_cast<int>(i))) *
           qs[i].substitute<2>({dw::bi_x(), dw::from_univariate(p)});
  }
  return out;
}

}  // namespace

TEST(Standardness, Examples) {
  auto a = dw::standardness(surf(2, "z^2-1"));
  EXPECT_TRUE(a.is_standard);
  EXPECT_TRUE(a.is_reduced_standard);
  EXPECT_TRUE(a.failing.empty());

  auto b = dw::standardness(surf(2, "(1+x)*(z^2-1)"));
  EXPECT_FALSE(b.is_standard);
  EXPECT_FALSE(b.is_reduced_standard);

  auto c = dw::standardness(surf(2, "z^2 + x*z"));
  EXPECT_TRUE(c.is_standard);
  EXPECT_FALSE(c.is_reduced_standard);

  auto e = dw::standardness(surf(2, "z^2 + x^2"));
  EXPECT_TRUE(e.is_standard);
  EXPECT_FALSE(e.is_reduced_standard);
  EXPECT_EQ(e.failing, "deg_x Q >= n");
}

TEST(ModxReduce, Examples) {
  auto a = dw::modx_reduce(surf(3, "z^2 + x^3*z"));
  EXPECT_EQ(a.surface, surf(3, "z^2"));
  EXPECT_EQ(a.witness.map.components(), (dw::MapComponents{amb("x"), amb("y-z"), amb("z")}));
  EXPECT_TRUE(ambient_ok(a.witness));

  auto X = surf(3, "z^2 + x*z + 1");
  auto b = dw::modx_reduce(X);
  EXPECT_EQ(b.surface, X);
  EXPECT_EQ(b.witness.map.components(), dw::identity_components());

  auto c = dw::modx_reduce(surf(1, "(1+x)*(z^2-1)"));
  EXPECT_EQ(c.surface, surf(1, "z^2-1"));
  EXPECT_EQ(c.witness.map.components(), (dw::MapComponents{amb("x"), amb("y-z^2+1"), amb("z")}));
}

TEST(StandardForm, FG) {
  auto s = dw::to_standard_form(surf(2, "(1+x)*(z^2-1)"));
  EXPECT_TRUE(dw::standardness(s.surface).is_standard);
  EXPECT_EQ(s.surface, surf(2, "z^2-1"));
  EXPECT_TRUE(dw::verify_surface_isomorphism(s.witness).ok);
}

TEST(StandardForm, Examples) {
  auto X = surf(2, "z^2 - 1 + x*z");
  auto s = dw::to_standard_form(X);
  EXPECT_EQ(s.surface, X);
  EXPECT_EQ(s.witness.map.components(), dw::identity_components());

  auto t = dw::to_standard_form(surf(2, "(1+x)*z^2"));
  EXPECT_EQ(t.surface, surf(2, "z^2"));
  EXPECT_TRUE(dw::verify_surface_isomorphism(t.witness).ok);

  // Unit multiplier of higher x-order: (1 + x z + x^2) z^3 at n = 3.
  auto u = dw::to_standard_form(surf(3, "(1 + x*z + x^2)*z^3 + x*z"));
  EXPECT_TRUE(dw::standardness(u.surface).is_standard);
  EXPECT_TRUE(u.surface.Q().degree_in(dw::kX) < 3);
  EXPECT_TRUE(dw::verify_surface_isomorphism(u.witness).ok);
}

TEST(ReducedStandardForm, Examples) {
  auto a = dw::to_reduced_standard_form(surf(2, "z^2 + x*z"));
  EXPECT_EQ(a.surface, surf(2, "z^2"));
  EXPECT_TRUE(dw::verify_surface_isomorphism(a.witness).ok);

  auto X = surf(2, "z^2-1");
  auto b = dw::to_reduced_standard_form(X);
  EXPECT_EQ(b.surface, X);
  EXPECT_EQ(b.witness.map.components(), dw::identity_components());

  auto c = dw::to_reduced_standard_form(surf(2, "(1+x)*(z^2-1)"));
  EXPECT_TRUE(dw::standardness(c.surface).is_reduced_standard);
  EXPECT_EQ(c.surface, X);
  EXPECT_TRUE(dw::verify_surface_isomorphism(c.witness).ok);
}

TEST(DecomposeQ, Examples) {
  auto a = dw::decompose_q(bi("z"), zpoly({0, 0, 1}));
  EXPECT_EQ(a[1], bi("1/2"));
  EXPECT_TRUE(a[2].is_zero());

  // t stands for p(z) and lives in the z slot.
  auto b = dw::decompose_q(bi("z^3 + z"), zpoly({0, 0, 1}));
  EXPECT_EQ(b[1], bi("1/2 + z/2"));
  EXPECT_TRUE(b[2].is_zero());

  auto c = dw::decompose_q(bi("1"), zpoly({0, 0, 1}));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], bi("1/2"));
}

TEST(DecomposeQ, RecombinesOnRandomInputs) {
  Random r(31);
  for (int i = 0; i < 60; ++i) {
    auto p = r.zpoly(static_cast<int>(r.integer(2, 5)));
    BiPoly qq = r.surface_q(static_cast<int>(r.integer(0, 9)), 2);
    auto parts = dw::decompose_q(qq, p);
    ASSERT_EQ(parts.size(), static_cast<std::size_t>(p.degree().value()) + 1);
    EXPECT_EQ(recombine(parts, p), qq);
  }
}

TEST(NormalForm, Examples) {
  auto a = dw::to_normal_form(surf(2, "z^2 + x*z"));
  EXPECT_EQ(a.p, zpoly({0, 0, 1}));
  EXPECT_TRUE(a.q.empty());
  EXPECT_EQ(a.surface, surf(2, "z^2"));
  EXPECT_TRUE(ambient_ok(a.witness));

  auto b = dw::to_normal_form(surf(2, "z^3 + 6*x*z"));
  EXPECT_EQ(b.p, zpoly({0, 0, 0, 1}));
  ASSERT_EQ(b.q.size(), 1u);
  EXPECT_EQ(b.q_at(2), bi("1"));
  EXPECT_TRUE(b.q_at(3).is_zero());
  EXPECT_EQ(dw::normal_form_polynomial(b.p, b.q), bi("z^3 + 6*x*z"));

  auto c = dw::to_normal_form(surf(3, "z^4 - 2*z + 5"));
  EXPECT_TRUE(c.q.empty());
  EXPECT_EQ(c.witness.map.components(), dw::identity_components());
}

TEST(NormalForm, InputAlreadyInShapeIsKept) {
  auto p = zpoly({1, 0, -1, 1});
  std::map<int, BiPoly> qs{{2, bi("x + z")}, {3, bi("2 - x*z")}};
  auto X = dw::DanielewskiSurface::validate(3, dw::normal_form_polynomial(p, qs));
  auto nf = dw::to_normal_form(X);
  EXPECT_EQ(nf.p, p);
  EXPECT_EQ(nf.q, qs);
  EXPECT_EQ(nf.surface, X);
}

// Reductions on random surfaces: degree predicates, verified witnesses, idempotence.
class ReductionProperties : public ::testing::TestWithParam<int> {};

TEST_P(ReductionProperties, HoldOnRandomSurface) {
  Random r(static_cast<std::uint64_t>(4000 + GetParam()));
  auto X = r.surface(3, 4, 3);

  auto s = dw::to_standard_form(X);
  EXPECT_TRUE(dw::standardness(s.surface).is_standard);
  EXPECT_EQ(s.witness.source, X);
  EXPECT_TRUE(dw::verify_surface_isomorphism(s.witness).ok);
  EXPECT_EQ(dw::to_standard_form(s.surface).surface, s.surface);

  auto rs = dw::to_reduced_standard_form(X);
  EXPECT_TRUE(dw::standardness(rs.surface).is_reduced_standard) << dw::format_surface(rs.surface);
  EXPECT_TRUE(dw::verify_surface_isomorphism(rs.witness).ok);
  EXPECT_EQ(dw::to_reduced_standard_form(rs.surface).surface, rs.surface);
  EXPECT_EQ(dw::invariants(rs.surface), dw::invariants(X));

  auto nf = dw::to_normal_form(X);
  EXPECT_TRUE(ambient_ok(nf.witness));
  EXPECT_EQ(nf.p, X.p());
  for (const auto& [i, qi] : nf.q) EXPECT_TRUE(qi.degree_in(dw::kX) < X.n() - 1) << i;
  EXPECT_EQ(dw::normal_form_polynomial(nf.p, nf.q), nf.surface.Q());
  auto again = dw::to_normal_form(nf.surface);
  EXPECT_EQ(again.q, nf.q);
}

INSTANTIATE_TEST_SUITE_P(Random, ReductionProperties, ::testing::Range(0, 30));
