#include <gtest/gtest.h>

#include <cmath>

#include "haantjes/errors.hpp"
#include "haantjes/relations.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

TEST(Polynomial, AdditiveIdentity) {
    EXPECT_TRUE((P("q1^2 + q2^2") + P("0") - P("q1^2 + q2^2")).is_zero());
}

TEST(Polynomial, BinomialSquare) {
    const Scalar s = P("q1*p1 + q2*p2");
    EXPECT_TRUE((s * s - P("q1^2*p1^2 + 2*q1*q2*p1*p2 + q2^2*p2^2")).is_zero());
}

TEST(Polynomial, ProductMatchesNaiveEvaluation) {
    const Polynomial a = require_rational(P("1 + g2*q1^2")).numerator();
    const Polynomial b = require_rational(P("1 + g2*q2^2")).numerator();
    const Polynomial prod = a * b;
    EXPECT_EQ(prod, require_rational(P("1 + g2*q1^2 + g2*q2^2 + g2^2*q1^2*q2^2")).numerator());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
        const auto x = random_point(rng);
        EXPECT_EQ(prod.evaluate<Rational>(x), a.evaluate<Rational>(x) * b.evaluate<Rational>(x));
    }
}

TEST(Polynomial, ContextMismatchThrows) {
    const Context other = VariableSet::make({"q1", "q2"});
    EXPECT_THROW((void)(Polynomial::variable(ctx(), "q1") + Polynomial::variable(other, "q1")), ContextMismatch);
}

TEST(Polynomial, CanonicalTermsHaveNoZeros) {
    const Polynomial p = Polynomial::from_terms(
        ctx(), {{Monomial::variable(idx("q1")), Rational(2)}, {Monomial::variable(idx("q1")), Rational(-2)}});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
}

TEST(Differentiate, Basic) {
    EXPECT_TRUE((P("q1^2 + q2^2").derivative(idx("q1")) - P("2*q1")).is_zero());
    EXPECT_THROW((void)ctx()->index("zz"), UnknownVariable);
}

TEST(Differentiate, RadicalIndependentOfVariable) {
    const Scalar f = P("q2/sqrt(1 + g2*q1^2)");
    EXPECT_TRUE((f.derivative(idx("q2")) - P("1/sqrt(1 + g2*q1^2)")).is_zero());
}

TEST(Differentiate, DiscriminantRootMatchesFiniteDifferences) {
    const Scalar s = P("sqrt(g2^2*q1^4 + 2*g2*q1^2*k2^2 + 1)");
    const Scalar ds = s.derivative(idx("q1"));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto x = random_point(rng);
        x[idx("g2")] = abs(x[idx("g2")]);
        const std::vector<double> xd = to_double(x);
        const double h = 1e-5;
        std::vector<double> plus = xd, minus = xd;
        plus[idx("q1")] += h;
        minus[idx("q1")] -= h;
        const double fd = (s.evaluate<double>(plus) - s.evaluate<double>(minus)) / (2 * h);
        const double exact = ds.evaluate<double>(xd);
        EXPECT_NEAR(fd, exact, 1e-8 * std::max(1.0, std::abs(exact)));
    }
}

TEST(IsZero, CancelledNumerator) { EXPECT_TRUE(P("(q1^2 - q1^2)/(1 + g2*q1^2)").is_zero()); }

TEST(IsZero, DependenceRelation) {
    const Integrals in = integrals(ctx());
    const Scalar r = hamiltonian(ctx(), 2) - (in.I1 + in.I2 - P("g2") * in.J * in.J);
    EXPECT_TRUE(r.is_zero());
}

TEST(IsZero, DiscriminantFactorsUnderSquareParameter) {
    // T^2 - 4P with gamma2 = g^2 against the product of the two real factors.
    const Scalar t = P("g^2*(q1^2 + k1^2*q2^2) + k2^2");
    const Scalar p = P("g^2*k1^2*k2^2*q2^2");
    const Scalar lhs = t * t - p * Rational(4);
    const Scalar rhs = P("(g^2*q1^2 + (g*k1*q2 + k2)^2)*(g^2*q1^2 + (g*k1*q2 - k2)^2)");
    EXPECT_TRUE((lhs - rhs).is_zero());
}

TEST(Evaluate, RationalValues) {
    std::vector<Rational> x(ctx()->size(), Rational(0));
    x[idx("q1")] = 3;
    x[idx("q2")] = 4;
    EXPECT_EQ(require_rational(P("q1^2 + q2^2")).evaluate<Rational>(x), Rational(25));
}

TEST(Evaluate, ZeroDenominatorThrows) {
    std::vector<double> x(ctx()->size(), 0.0);
    EXPECT_THROW((void)P("1/q1").evaluate<double>(x), EvaluationError);
}

TEST(Evaluate, NegativeDiscriminantThrows) {
    std::vector<double> x(ctx()->size(), 0.0);
    x[idx("q1")] = 2.0;
    EXPECT_THROW((void)P("sqrt(1 - q1^2)").evaluate<double>(x), EvaluationError);
}

TEST(Evaluate, RadicalSignSelectsBranch) {
    std::vector<double> x(ctx()->size(), 0.0);
    x[idx("q1")] = 3.0;
    const Scalar s = P("sqrt(q1^2 + 16)");
    EXPECT_DOUBLE_EQ(s.evaluate<double>(x, +1), 5.0);
    EXPECT_DOUBLE_EQ(s.evaluate<double>(x, -1), -5.0);
}

TEST(QuadExt, SquareOfRootIsDiscriminant) {
    const Polynomial d = require_rational(P("q1^2 + g2*q2^2 + 1")).numerator();
    const Scalar r = Scalar::sqrt_of(d);
    EXPECT_TRUE(r.has_radical());
    EXPECT_TRUE((r * r - Scalar(RationalFunction(d))).is_zero());
}

TEST(QuadExt, PerfectSquareComesBackRational) { EXPECT_FALSE(P("sqrt(q1^2 + 2*q1 + 1)").has_radical()); }

TEST(QuadExt, MismatchedDiscriminantsThrow) {
    EXPECT_THROW((void)(P("sqrt(1 + q1^2)") + P("sqrt(1 + q2^2)")), DiscriminantMismatch);
}

TEST(Grammar, PrintParseRoundTrip) {
    for (const char* text : {"q1^2 + 3/4*q2*p1 - 7", "(q1 + q2)/(1 + g2*q1^2)^2", "q2/sqrt(1 + g2*q1^2)",
                             "(1/2)*(g2*q1^2 + k2^2) + (1/2)*sqrt(g2*q1^4 + 1)", "q1^(-2)*p2"}) {
        const Scalar v = P(text);
        const Scalar back = P(print_expression(v));
        EXPECT_TRUE((v - back).is_zero()) << text << " -> " << print_expression(v);
    }
}

TEST(Grammar, RejectsMalformedInput) {
    EXPECT_THROW((void)P("q1 +"), ParseError);
    EXPECT_THROW((void)P("(q1"), ParseError);
    EXPECT_THROW((void)P("nosuchvar"), Error);
}

TEST(Relations, UnitCircleRewrite) {
    const Relations unit{{idx("k2"), require_rational(P("1 - k1^2")).numerator()}};
    EXPECT_TRUE(is_zero(P("k1^2 + k2^2 - 1"), unit));
    EXPECT_FALSE(is_zero(P("k1^2 + k2^2 - 1")));
    EXPECT_TRUE(is_zero(P("q1^2*k2^4 - q1^2*(1 - k1^2)^2"), unit));
}

TEST(RationalFunction, ReduceWithoutRelationsIsIdentity) {
    const Scalar f = P("(q1 + q2)/(1 + q1^2)");
    EXPECT_TRUE((reduce(f, Relations{}) - f).is_zero());
}

// Ring axioms on random triples.
TEST(Property, RingAxioms) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20; ++i) {
        const Scalar f = random_polynomial(rng, 3, 5, true);
        const Scalar g = random_polynomial(rng, 3, 5, true);
        const Scalar h = random_polynomial(rng, 3, 5, true) + P("1/(1 + q1^2)");
        EXPECT_TRUE(((f + g) + h - (f + (g + h))).is_zero());
        EXPECT_TRUE((f * (g + h) - (f * g + f * h)).is_zero());
        EXPECT_TRUE((f * g - g * f).is_zero());
        EXPECT_TRUE(((f * g) * h - f * (g * h)).is_zero());
    }
}

TEST(Property, DerivationRule) {
    std::mt19937_64 rng(202);
    const Scalar root = P("sqrt(1 + g2*q1^2 + q2^2)");
    for (int i = 0; i < 20; ++i) {
        const Scalar f = random_polynomial(rng) + root * random_polynomial(rng, 2, 3);
        const Scalar g = random_polynomial(rng) / (P("1") + random_polynomial(rng, 2, 2) * random_polynomial(rng, 2, 2) + P("q1^2"));
        for (const char* v : {"q1", "p2", "g2"}) {
            const std::size_t x = idx(v);
            EXPECT_TRUE(((f * g).derivative(x) - (f.derivative(x) * g + f * g.derivative(x))).is_zero()) << v;
        }
    }
}

TEST(Property, CrossMultiplicationEqualityIsEquivalence) {
    const Scalar a = P("(q1^2 - 1)/(q1 - 1)");
    const Scalar b = P("q1 + 1");
    const Scalar c = P("(q1^2 + 2*q1 + 1)/(q1 + 1)");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a - b).is_zero());
    EXPECT_TRUE((b - a).is_zero());
    EXPECT_TRUE((b - c).is_zero());
    EXPECT_TRUE((a - c).is_zero());
}

TEST(Property, InverseTimesSelfIsOne) {
    std::mt19937_64 rng(303);
    const Scalar root = P("sqrt(2 + q1^2)");
    for (int i = 0; i < 10; ++i) {
        const Scalar f = P("3") + random_polynomial(rng, 2, 3) + root * random_polynomial(rng, 2, 2);
        if (f.is_zero()) continue;
        EXPECT_TRUE((f * f.inverse() - P("1")).is_zero());
    }
}

} // namespace
} // namespace haantjes::test
