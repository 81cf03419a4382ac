#include <gtest/gtest.h>

#include "haantjes/relations.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

const Chart& chart() {
    static const Chart c = Chart::standard(ctx());
    return c;
}

Bindings flat() { return {{idx("g2"), Rational(0)}}; }

TEST(Hamiltonian, FirstMember) {
    EXPECT_TRUE((hamiltonian(ctx(), 1) - P("p1^2 + p2^2 + g1*(q1*p1 + q2*p2)")).is_zero());
}

TEST(Hamiltonian, ZeroCoefficientsGiveFreeParticle) {
    const std::vector<Scalar> gamma{P("0"), P("0"), P("0")};
    EXPECT_TRUE((hamiltonian(gamma) - P("p1^2 + p2^2")).is_zero());
    EXPECT_THROW((void)hamiltonian(ctx(), 0), Error);
    EXPECT_THROW((void)gamma_symbol(ctx(), kMaxFamilyDegree + 1), Error);
}

TEST(Integrals, FlatLimitOfI2) {
    EXPECT_TRUE((specialize(integrals(ctx()).I2, flat()) - P("p2^2 + g1*q2*p2")).is_zero());
}

TEST(Catalog, FlatLimitOfKI2) {
    const CatalogEntry e = catalog("K_I2", flat(), false);
    EXPECT_TRUE(equal(e.tensor, Tensor11::diagonal({P("0"), P("1"), P("0"), P("1")}))) << e.tensor.to_string();
}

TEST(Catalog, ExchangeSymmetryMapsI2OperatorToI1) {
    const Tensor11 swapped = exchange_symmetry(catalog("K_I2", {}, false).tensor, chart());
    EXPECT_TRUE(equal(swapped, catalog("K_I1", {}, false).tensor)) << residual_head(swapped - catalog("K_I1", {}, false).tensor);
}

TEST(Catalog, AngularOperatorHasNoGammas) {
    const Tensor11 k = catalog("K_J2", {}, false).tensor;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (int n = 1; n <= kMaxFamilyDegree; ++n) EXPECT_FALSE(k(i, j).depends_on(idx("g" + std::to_string(n))));
}

TEST(Catalog, EveryEntryValidates) {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog(name, {}, false);
        const VerificationReport r = validate_entry(e);
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_NO_THROW((void)catalog(name)) << name;
    }
    EXPECT_THROW((void)catalog("K_unknown"), Error);
}

TEST(Catalog, EntriesValidateAtNumericParameters) {
    const Bindings b{{idx("g1"), Rational(3, 2)}, {idx("g2"), Rational(-2, 5)}, {idx("k1"), Rational(3, 5)},
                     {idx("k2"), Rational(4, 5)}};
    for (const auto& name : catalog_names()) EXPECT_NO_THROW((void)catalog(name, b)) << name;
}

TEST(SymmetryAlgebra, ReportPasses) {
    const VerificationReport r = symmetry_algebra_report();
    EXPECT_TRUE(r.passed());
    EXPECT_GE(r.checks.size(), 5u);
}

TEST(Relations, EllipticIntegralSplitsOnTheUnitCircle) {
    const Integrals in = integrals(ctx());
    const CatalogEntry e = catalog("K_e", {}, false);
    const Scalar lhs = elliptic_integral(ctx());
    const Scalar rhs = P("-g2*k1^2") * in.J * in.J - P("1 - k1^2") * in.I2;
    EXPECT_TRUE(is_zero(lhs - rhs, e.relations));
}

} // namespace
} // namespace haantjes::test
