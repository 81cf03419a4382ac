#include <gtest/gtest.h>

#include "haantjes/obstruction.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

TEST(Obstruction, PolarTypeAnnihilatesCrossTerm) {
    for (const char* name : {"polar", "polar_swapped"}) {
        const EptCandidate c = candidate(name);
        EXPECT_TRUE(v_product(c).is_zero()) << name;
        EXPECT_TRUE(jacobian_cross(c).is_zero()) << name;
        for (int n = 1; n <= 5; ++n) EXPECT_TRUE(cross_residual(c, n).expanded.is_zero()) << name << " N=" << n;
    }
}

TEST(Obstruction, IdentityVProduct) { EXPECT_TRUE((v_product(candidate("identity")) - P("q1*q2")).is_zero()); }

TEST(Obstruction, CartesianSeparatesOnlyQuadraticMember) {
    const EptCandidate c = candidate("cartesian_I2");
    EXPECT_TRUE(cross_residual(c, 2).expanded.is_zero());
    EXPECT_FALSE(v_product(c).is_zero());
    const CrossResidual r3 = cross_residual(c, 3);
    EXPECT_FALSE(r3.expanded.is_zero());
    ASSERT_GE(r3.coefficients.size(), 2u);
    EXPECT_TRUE((r3.coefficients[1] - P("6*g3") * v_product(c)).is_zero());
}

TEST(Obstruction, NumericGammaVector) {
    const EptCandidate c = candidate("identity");
    const std::vector<Scalar> gamma{P("0"), P("1")};
    // Cross term 2 (JJ^T)_12 + 2 gamma2 v1 v2 with J the identity.
    EXPECT_TRUE((cross_residual(c, gamma).expanded - P("2*q1*q2")).is_zero());
}

TEST(Obstruction, PolarTypeClassification) {
    EXPECT_TRUE(polar_type_check(candidate("polar")).passed());
    EXPECT_TRUE(polar_type_check(candidate("polar_swapped")).passed());
    EXPECT_FALSE(polar_type_check(candidate("cartesian_I2")).passed());
}

TEST(Obstruction, SuitePasses) { EXPECT_TRUE(obstruction_suite(3).passed()); }

// Top coefficient of the cross term is k(k-1) gamma_k v1 v2 for random candidates.
TEST(Property, TopCoefficient) {
    const EptCandidate c = make_candidate("random", "q1 + q2^2", "q1*q2 + 3*q2");
    for (int k = 3; k <= 5; ++k) {
        const CrossResidual r = cross_residual(c, k);
        ASSERT_GE(r.coefficients.size(), static_cast<std::size_t>(k - 1));
        const Scalar top = r.coefficients[static_cast<std::size_t>(k - 2)];
        EXPECT_TRUE((top - P(std::to_string(k * (k - 1)) + "*g" + std::to_string(k)) * v_product(c)).is_zero()) << k;
    }
}

} // namespace
} // namespace haantjes::test
