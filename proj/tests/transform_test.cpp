#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;
using dw::AmbientMap;
using dw::AmbientPoly;
using dw::FieldElement;
using dw::MapComponents;

namespace {

MapComponents triple(const std::string& a, const std::string& b, const std::string& c) { return {amb(a), amb(b), amb(c)}; }

}  // namespace

TEST(Compose, Examples) {
  AmbientMap g(triple("x", "y + z^2", "z"), triple("x", "y - z^2", "z"));
  EXPECT_EQ(dw::compose(AmbientMap::identity(), g), g);

  auto id = dw::compose(AmbientMap(triple("x", "y", "z+x")), AmbientMap(triple("x", "y", "z-x")));
  EXPECT_EQ(id.components(), dw::identity_components());

  auto c = dw::compose(AmbientMap(triple("2*x", "y", "z")), AmbientMap(triple("x", "y", "z+x")));
  EXPECT_EQ(c.components(), triple("2*x", "y", "z+x"));
  // Order matters: the other way round the shift sees the doubled x.
  auto d = dw::compose(AmbientMap(triple("x", "y", "z+x")), AmbientMap(triple("2*x", "y", "z")));
  EXPECT_EQ(d.components(), triple("2*x", "y", "z+2*x"));
}

TEST(Compose, InverseComposesInReverse) {
  AmbientMap f(triple("2*x", "y", "z"), triple("x/2", "y", "z"));
  AmbientMap g(triple("x", "y", "z+x"), triple("x", "y", "z-x"));
  auto fg = dw::compose(f, g);
  ASSERT_TRUE(fg.has_inverse());
  EXPECT_EQ(dw::compose_components(fg.inverse().components(), fg.components()), dw::identity_components());
  EXPECT_EQ(dw::compose_components(fg.components(), fg.inverse().components()), dw::identity_components());
}

TEST(TriangularInverse, Examples) {
  auto T = dw::TriangularAuto::make(q(2), q(1), zpoly({0, 1}, 'x'), q(4), 2, dw::BiPoly());
  EXPECT_EQ(T.components(), triple("2*x", "y", "z+x"));
  EXPECT_EQ(dw::triangular_inverse(T).components(), triple("x/2", "y", "z-x/2"));

  auto I = dw::TriangularAuto::make(q(1), q(1), dw::KPoly(), q(1), 3, dw::BiPoly());
  EXPECT_EQ(dw::triangular_inverse(I).components(), dw::identity_components());

  auto S = dw::TriangularAuto::make(q(1), q(1), dw::KPoly(), q(1), 1, bi("z^2"));
  EXPECT_EQ(dw::triangular_inverse(S).components(), triple("x", "y - z^2", "z"));

  EXPECT_THROW(dw::TriangularAuto::make(q(0), q(1), dw::KPoly(), q(1), 1, dw::BiPoly()), dw::Error);
}

TEST(TriangularInverse, BothCompositionsAreIdentityOnRandomMaps) {
  Random r(21);
  for (int i = 0; i < 40; ++i) {
    int n = static_cast<int>(r.integer(1, 3));
    auto T = dw::TriangularAuto::make(r.rational(true), r.rational(true), r.zpoly(2).with_var('x'), r.rational(true), n,
                                      r.surface_q(2, 2));
    auto inv = dw::triangular_inverse(T);
    EXPECT_EQ(dw::compose_components(inv.components(), T.components()), dw::identity_components());
    EXPECT_EQ(dw::compose_components(T.components(), inv.components()), dw::identity_components());
  }
}

TEST(LucyGene, UnitMultiplierOnFG) {
  auto w = dw::lucy_gene_map(bi("z^2-1"), 2, bi("1"), dw::BiPoly());
  EXPECT_EQ(w.map.components(), triple("x", "(1+x)*y", "z"));
  EXPECT_EQ(w.target, surf(2, "(1+x)*(z^2-1)"));
  EXPECT_EQ(w.scope, dw::WitnessScope::SurfaceIsomorphism);
  EXPECT_TRUE(dw::verify_surface_isomorphism(w).ok);
  // Only an isomorphism: the pullback is (1 + x) F, not a constant multiple.
  EXPECT_FALSE(dw::verify_ambient_equivalence(w.map, w.source, w.target).has_value());
}

TEST(LucyGene, ZeroPiIsAmbient) {
  auto id = dw::lucy_gene_map(bi("z^3 + x*z"), 2, dw::BiPoly(), dw::BiPoly());
  EXPECT_EQ(id.map.components(), dw::identity_components());
  EXPECT_EQ(id.target, id.source);

  auto w = dw::lucy_gene_map(bi("z^2"), 2, dw::BiPoly(), bi("1"));
  EXPECT_EQ(w.map.components(), triple("x", "y+1", "z"));
  EXPECT_EQ(w.target, surf(2, "z^2 + x^2"));
  EXPECT_EQ(w.scope, dw::WitnessScope::AmbientEquivalence);
  auto mu = dw::verify_ambient_equivalence(w.map, w.source, w.target);
  ASSERT_TRUE(mu.has_value());
  EXPECT_EQ(*mu, q(1));
}

TEST(LucyGene, RandomDataVerifies) {
  Random r(22);
  for (int i = 0; i < 30; ++i) {
    auto X = r.surface(3, 3, 2);
    dw::BiPoly pi = r.coin() ? dw::BiPoly() : r.surface_q(1, 1);
    dw::BiPoly R = r.surface_q(2, 1);
    auto w = dw::lucy_gene_map(X.Q(), X.n(), pi, R);
    EXPECT_EQ(w.target.Q(), (bi("1") + pi.shift(dw::kX, 1)) * X.Q() + R.shift(dw::kX, X.n()));
    EXPECT_TRUE(dw::verify_surface_isomorphism(w).ok);
    EXPECT_TRUE(dw::verify_surface_isomorphism(dw::reversed(w)).ok);
    if (pi.is_zero()) EXPECT_TRUE(dw::verify_ambient_equivalence(w.map, w.source, w.target).has_value());
  }
}

TEST(VerifyAmbient, Examples) {
  auto X = surf(3, "z^2 + x*z");
  auto Y = surf(3, "z^2 + x*z + x^3*(z - 2)");
  AmbientMap m(triple("x", "y + z - 2", "z"), triple("x", "y - z + 2", "z"));
  auto mu = dw::verify_ambient_equivalence(m, X, Y);
  ASSERT_TRUE(mu.has_value());
  EXPECT_EQ(*mu, q(1));
  EXPECT_EQ(dw::verify_ambient_equivalence(AmbientMap::identity(), X, X), std::optional<FieldElement>(q(1)));
  // No inverse attached: never accepted.
  EXPECT_FALSE(dw::verify_ambient_equivalence(AmbientMap(m.components()), X, Y).has_value());
}

TEST(VerifyAmbient, ScalingGivesNontrivialMu) {
  // (2x, y, z) pulls x^2 y - z^2 back to 4 x^2 y - z^2; with y scaled by 1/4 the multiplier is 1,
  // with z scaled by 2 as well it becomes 4.
  auto X = surf(2, "z^2");
  auto T = dw::TriangularAuto::make(q(2), q(2), dw::KPoly(), q(4), 2, dw::BiPoly());
  auto mu = dw::verify_ambient_equivalence(dw::to_map(T), X, X);
  ASSERT_TRUE(mu.has_value());
  EXPECT_EQ(*mu, q(4));
}

TEST(VerifySurface, CorruptedWitnessFailsWithDiagnostic) {
  auto w = dw::lucy_gene_map(bi("z^2"), 2, dw::BiPoly(), bi("1"));
  EXPECT_TRUE(dw::verify_surface_isomorphism(dw::identity_witness(w.source)).ok);
  auto bad = w;
  bad.mu = -bad.mu;
  auto v = dw::verify_surface_isomorphism(bad);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.diagnostic.find("residual"), std::string::npos);

  // Map into the wrong surface.
  auto off = w;
  off.target = surf(2, "z^2 + 2*x^2");
  auto v2 = dw::verify_surface_isomorphism(off);
  EXPECT_FALSE(v2.ok);
  EXPECT_NE(v2.diagnostic.find("forward"), std::string::npos);
}
