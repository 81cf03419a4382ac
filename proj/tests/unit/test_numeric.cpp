#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "haantjes/numeric_eval.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

TEST(Kappa, Flat) {
    const KappaValues v = kappa_eval(0.0, 0.7);
    EXPECT_DOUBLE_EQ(v.S, 0.7);
    EXPECT_DOUBLE_EQ(v.C, 1.0);
    ASSERT_TRUE(v.T.has_value());
    EXPECT_DOUBLE_EQ(*v.T, 0.7);
}

TEST(Kappa, SpherePole) {
    const KappaValues v = kappa_eval(1.0, std::numbers::pi / 2);
    EXPECT_NEAR(v.S, 1.0, 1e-15);
    EXPECT_FALSE(v.T.has_value());
}

TEST(Kappa, Hyperbolic) {
    const KappaValues v = kappa_eval(-1.0, 1.0);
    EXPECT_NEAR(v.S, std::sinh(1.0), 1e-15);
    EXPECT_NEAR(v.C, std::cosh(1.0), 1e-15);
    ASSERT_TRUE(v.T.has_value());
    EXPECT_NEAR(*v.T, std::tanh(1.0), 1e-15);
}

TEST(Kappa, IdentityAndSeries) {
    for (double kappa : {1.0, -1.0, 0.3}) EXPECT_EQ(kappa_identity_check(kappa).status, CheckStatus::pass) << kappa;
    EXPECT_EQ(kappa_series_check(1e-6).status, CheckStatus::pass);
    EXPECT_EQ(kappa_series_check(-1e-6).status, CheckStatus::pass);
    EXPECT_EQ(kappa_series_check(1.0).status, CheckStatus::fail);
}

TEST(Geodesic, RealAndImaginaryGamma1) {
    NumericOptions o;
    o.samples = 20;
    EXPECT_TRUE(geodesic_polar_check(1.0, {0.5, 0.0}, o).passed());
    EXPECT_TRUE(geodesic_polar_check(-1.0, {0.0, 1.2}, o).passed());
}

TEST(FloatCrossCheck, BracketMatchesExactValue) {
    const Integrals in = integrals(ctx());
    const Scalar h = hamiltonian(ctx(), 2);
    FloatIdentity id{"hj", "{H, J} = 0", float_bracket(h, in.J), float_function(P("0"))};
    NumericOptions o;
    o.samples = 30;
    EXPECT_EQ(float_cross_check(id, ctx(), o).status, CheckStatus::pass);
}

TEST(FloatCrossCheck, WitnessDetectsNonzero) {
    const Integrals in = integrals(ctx());
    FloatIdentity id{"i1i2", "{I1, I2} != 0", float_bracket(in.I1, in.I2), float_function(P("0"))};
    id.expect_nonzero = true;
    NumericOptions o;
    o.samples = 30;
    EXPECT_EQ(float_cross_check(id, ctx(), o).status, CheckStatus::pass);
    id.lhs = float_bracket(hamiltonian(ctx(), 2), in.J);
    EXPECT_EQ(float_cross_check(id, ctx(), o).status, CheckStatus::fail);
}

TEST(NumericSuite, DeterministicForFixedSeed) {
    NumericOptions o;
    o.samples = 20;
    const VerificationReport a = numeric_suite(o);
    const VerificationReport b = numeric_suite(o);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(to_json(a), to_json(b));
}

} // namespace
} // namespace haantjes::test
