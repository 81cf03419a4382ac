#include <gtest/gtest.h>

#include "haantjes/canonical_map.hpp"
#include "haantjes/relations.hpp"
#include "haantjes/separation.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

const Chart& chart() {
    static const Chart c = Chart::standard(ctx());
    return c;
}

TEST(CanonicalMaps, AllBracketsCanonical) {
    for (const auto& name : canonical_map_names()) {
        const VerificationReport r = verify_canonical(canonical_map(name));
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_EQ(r.checks.size(), 10u) << name;
    }
}

TEST(CanonicalMaps, BrokenMapIsRejected) {
    CanonicalMap map = canonical_map("polar_rational");
    map.coordinates[3] = make_coordinate("P_s", P("q1*p1 + q2*p2"), chart());
    EXPECT_FALSE(verify_canonical(map).passed());
}

TEST(CanonicalMaps, PolarMomenta) {
    const CanonicalMap polar = canonical_map("polar");
    EXPECT_TRUE(polar.is_ept);
    EXPECT_FALSE(polar.coordinates[0].value.has_value());
    EXPECT_TRUE((*polar.coordinates[2].value - P("q1*p2 - q2*p1")).is_zero());
}

TEST(CanonicalMaps, CartesianFlatLimitIsIdentity) {
    const Bindings flat{{idx("g2"), Rational(0)}};
    const CanonicalMap map = canonical_map("cartesian_I2", flat);
    const char* expect[] = {"q1", "q2", "p1", "p2"};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE((*map.coordinates[i].value - P(expect[i])).is_zero()) << i;
}

TEST(Pullback, SeparatedForms) {
    for (const auto& form : separated_forms(3)) {
        const CheckResult r = pullback_check(canonical_map(form.map), form.function, form.claimed, form.name, form.identity);
        EXPECT_EQ(r.status, CheckStatus::pass) << form.name << ": " << r.residual;
    }
}

TEST(Pullback, WrongClaimFails) {
    const CheckResult r =
        pullback_check(canonical_map("cartesian_I2"), integrals(ctx()).I2, P("P2^2 + g1*Q2*P2"), "wrong", "drops a term");
    EXPECT_EQ(r.status, CheckStatus::fail);
}

TEST(StepB, AngularMomentum) {
    MomentumAnsatz ma;
    ma.position_degree = 3;
    ma.parameters = {idx("g1"), idx("g2")};
    const OneForm dx{P("-q2/(q1^2+q2^2)"), P("q1/(q1^2+q2^2)"), P("0"), P("0")};
    const OneForm tau{P("q1*p2 - q2*p1"), P("0"), P("-q1*q2"), P("q1^2")};
    const ConjugateMomentum cm = stepB_conjugate_momentum(dx, tau, chart(), ma);
    EXPECT_TRUE(cm.closed);
    ASSERT_TRUE(cm.potential.has_value());
    EXPECT_TRUE((*cm.potential - P("q1*p2 - q2*p1")).is_zero());
    EXPECT_TRUE((poisson_pairing(dx, cm.beta) - P("1")).is_zero());
}

TEST(Exactness, ClosedAndNotClosed) {
    EXPECT_EQ(exactness_check(differential(P("q1*p2 - q2*p1"), chart()), chart(), "a", "closed").status, CheckStatus::pass);
    const OneForm rot{P("-q2"), P("q1"), P("0"), P("0")};
    EXPECT_EQ(exactness_check(rot, chart(), "b", "not closed").status, CheckStatus::fail);
    EXPECT_EQ(exactness_check(P("1/q1^2") * rot, chart(), "c", "closed").status, CheckStatus::pass);
}

TEST(SeparationOperators, BaseFunctionGivesIdentity) {
    for (const auto& pair : separated_pairs()) {
        const SeparationOperators ops = separation_operators_from_separated(pair.functions, 0);
        EXPECT_TRUE(ops.report.passed()) << pair.name;
        ASSERT_FALSE(ops.operators.empty());
        EXPECT_TRUE(equal(ops.operators[0], Tensor11::identity(ctx()))) << pair.name;
    }
}

TEST(Ode, SingularPointCounts) {
    EXPECT_EQ(ode_singularity_count(separated_ode("elliptic")).regular_singular_points, 4);
    EXPECT_EQ(ode_singularity_count(separated_ode("elliptic")).label, "Heun");
    for (const char* tag : {"polar", "cartesian_I2", "cartesian_I1"}) {
        const OdeClass c = ode_singularity_count(separated_ode(tag));
        EXPECT_EQ(c.regular_singular_points, 3) << tag;
        EXPECT_EQ(c.label, "hypergeometric") << tag;
    }
    EXPECT_EQ(ode_singularity_count(separated_ode("elliptic", {{idx("k1"), Rational(0)}})).regular_singular_points, 3);
    EXPECT_THROW((void)separated_ode("nope"), Error);
}

TEST(Elliptic, SuitePassesSymbolicallyAndAtPythagoreanPoint) {
    EXPECT_TRUE(elliptic_suite().passed());
    EXPECT_TRUE(elliptic_suite({{idx("k1"), Rational(3, 5)}, {idx("k2"), Rational(4, 5)}}).passed());
}

TEST(Elliptic, RootsCarryRadicalsWithRationalSymmetricFunctions) {
    const CanonicalMap ell = canonical_map("elliptic");
    const Scalar q1 = *ell.coordinates[0].value;
    const Scalar q2 = *ell.coordinates[1].value;
    EXPECT_TRUE(q1.has_radical());
    EXPECT_FALSE(reduce(q1 * q2, ell.relations).has_radical());
    EXPECT_FALSE(reduce(q1 + q2, ell.relations).has_radical());
}

TEST(Separated, SuitePasses) { EXPECT_TRUE(separated_suite(3).passed()); }

TEST(Separated, I1InI2CoordinatesIsFinite) {
    const Scalar f = i1_in_i2_coordinates();
    EXPECT_FALSE(f.is_zero());
}

} // namespace
} // namespace haantjes::test
