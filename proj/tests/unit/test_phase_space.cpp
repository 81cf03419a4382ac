#include <gtest/gtest.h>

#include "haantjes/phase_space.hpp"
#include "haantjes/tensor.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

const Chart& chart() {
    static const Chart c = Chart::standard(ctx());
    return c;
}

Scalar bracket(const Scalar& f, const Scalar& g) { return poisson_bracket(f, g, chart()); }

TEST(PoissonBracket, Canonical) {
    EXPECT_TRUE((bracket(P("q1"), P("p1")) - P("1")).is_zero());
    EXPECT_TRUE(bracket(P("q1"), P("p2")).is_zero());
    EXPECT_TRUE(bracket(P("q1"), P("q2")).is_zero());
}

TEST(PoissonBracket, IntegralsCommuteWithHamiltonian) {
    const Integrals in = integrals(ctx());
    const Scalar h = hamiltonian(ctx(), 2);
    EXPECT_TRUE(bracket(h, in.J).is_zero());
    EXPECT_TRUE(bracket(h, in.I1).is_zero());
    EXPECT_TRUE(bracket(h, in.I2).is_zero());
}

TEST(PoissonBracket, CubicHiggsBracket) {
    const Integrals in = integrals(ctx());
    const Scalar h = hamiltonian(ctx(), 2);
    const Scalar x1 = in.J * Rational(1, 2);
    const Scalar x2 = (in.I1 - in.I2) * Rational(1, 2);
    const Scalar x3 = bracket(x1, x2);
    EXPECT_TRUE((x3 - P(kX3Expanded)).is_zero());
    const Scalar r = bracket(x2, x3) + (P("g1^2") + P("2*g2") * h) * x1 + P("8*g2^2") * x1 * x1 * x1;
    EXPECT_TRUE(r.is_zero());
}

TEST(PoissonBracket, AngularMomentumAgainstI1) {
    // I1 + I2 commutes with J, so {J, I1} = 2 {X1, X2} = 2 X3.
    const Integrals in = integrals(ctx());
    EXPECT_TRUE((bracket(in.J, in.I1) - P(kX3Expanded) * Rational(2)).is_zero());
}

TEST(Differential, AngularMomentum) {
    const OneForm d = differential(P("q1*p2 - q2*p1"), chart());
    EXPECT_TRUE(is_zero(d - OneForm{P("p2"), P("-p1"), P("-q2"), P("q1")}));
}

TEST(Differential, ExactFormsAreClosed) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        const Scalar f = random_polynomial(rng, 4, 6) / (P("1 + q1^2"));
        EXPECT_TRUE(is_zero(exterior_derivative(differential(f, chart()), chart())));
    }
    const OneForm rot{P("-q2"), P("q1"), P("0"), P("0")};
    EXPECT_FALSE(is_zero(exterior_derivative(rot, chart())));
}

TEST(Pairing, CanonicalValues) {
    const OneForm dq1{P("1"), P("0"), P("0"), P("0")};
    const OneForm dp1{P("0"), P("0"), P("1"), P("0")};
    EXPECT_TRUE((poisson_pairing(dq1, dp1) - P("1")).is_zero());
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5; ++i) {
        const OneForm a = differential(random_polynomial(rng), chart());
        EXPECT_TRUE(poisson_pairing(a, a).is_zero());
    }
    const Vector4 x{P("q1"), P("1"), P("0"), P("2")};
    EXPECT_TRUE((pairing(dq1, x) - P("q1")).is_zero());
}

TEST(Pairing, MatchesBracketOfDifferentials) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 5; ++i) {
        const Scalar f = random_polynomial(rng);
        const Scalar g = random_polynomial(rng);
        const Scalar lhs = poisson_pairing(differential(f, chart()), differential(g, chart()));
        EXPECT_TRUE((lhs - bracket(f, g)).is_zero());
    }
}

TEST(Compatibility, CatalogAndIdentity) {
    EXPECT_TRUE(check_symplectic_compatibility(catalog("K_J2", {}, false).tensor).passed());
    EXPECT_TRUE(is_lift_form(catalog("K_J2", {}, false).tensor));
    EXPECT_TRUE(check_symplectic_compatibility(catalog("K_I2", {}, false).tensor).passed());
    EXPECT_TRUE(is_lift_form(catalog("K_I2", {}, false).tensor));
    EXPECT_TRUE(check_symplectic_compatibility(Tensor11::identity(ctx())).passed());
}

TEST(Compatibility, DetectsIncompatibleOperator) {
    const Tensor11 k = Tensor11::diagonal({P("1"), P("2"), P("3"), P("4")});
    EXPECT_FALSE(check_symplectic_compatibility(k).passed());
    const Tensor11 ok = Tensor11::diagonal({P("1"), P("2"), P("1"), P("2")});
    EXPECT_TRUE(check_symplectic_compatibility(ok).passed());
}

TEST(Property, BracketAntisymmetryJacobiLeibniz) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 15; ++i) {
        const Scalar f = random_polynomial(rng, 3, 4, true);
        const Scalar g = random_polynomial(rng, 3, 4, true);
        const Scalar h = random_polynomial(rng, 3, 4, true);
        EXPECT_TRUE((bracket(f, g) + bracket(g, f)).is_zero());
        EXPECT_TRUE((bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero());
        EXPECT_TRUE((bracket(f, g * h) - (g * bracket(f, h) + bracket(f, g) * h)).is_zero());
    }
}

TEST(Property, BracketWithRadicals) {
    // Jacobi also holds for elements of the quadratic extension.
    std::mt19937_64 rng(19);
    const Scalar root = P("sqrt(1 + g2*q1^2)");
    for (int i = 0; i < 5; ++i) {
        const Scalar f = random_polynomial(rng, 2, 3) * root;
        const Scalar g = random_polynomial(rng, 2, 3) / root;
        const Scalar h = random_polynomial(rng, 2, 3);
        EXPECT_TRUE((bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero());
    }
}

} // namespace
} // namespace haantjes::test
