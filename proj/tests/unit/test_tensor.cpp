#include <gtest/gtest.h>

#include "haantjes/canonical_map.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

const Chart& chart() {
    static const Chart c = Chart::standard(ctx());
    return c;
}

Tensor11 random_tensor(std::mt19937_64& rng, bool constant) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::array<std::array<Scalar, 4>, 4> rows{{{P("0"), P("0"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")}}};
    for (auto& row : rows) {
        for (auto& e : row) {
            e = P(std::to_string(coeff(rng)));
            if (!constant) {
                for (const char* v : {"q1", "q2", "p1", "p2"}) e = e + P(v) * Rational(coeff(rng));
                e = e + P("q1*p2") * Rational(coeff(rng));
            }
        }
    }
    return Tensor11::from_rows(rows);
}

Torsion3 difference(const Torsion3& a, const Torsion3& b) {
    Torsion3 d(ctx());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) d(i, j, k) = a(i, j, k) - b(i, j, k);
    return d;
}

TEST(NijenhuisTorsion, IdentityAndConstant) {
    EXPECT_TRUE(is_zero(nijenhuis_torsion(Tensor11::identity(ctx()), chart())));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_zero(nijenhuis_torsion(random_tensor(rng, true), chart())));
}

TEST(NijenhuisTorsion, CatalogGenerators) {
    for (const char* name : {"N_I2", "N_I1", "N_e"}) {
        const CatalogEntry e = catalog(name, {}, false);
        EXPECT_TRUE(is_zero(nijenhuis_torsion(e.tensor, chart()), e.relations)) << name;
        EXPECT_TRUE(is_zero(haantjes_torsion(e.tensor, chart()), e.relations)) << name;
    }
}

TEST(HaantjesTorsion, CatalogOperators) {
    for (const char* name : {"K_J2", "K_I2", "K_I1", "K_e"}) {
        const CatalogEntry e = catalog(name, {}, false);
        EXPECT_TRUE(is_zero(haantjes_torsion(e.tensor, chart()), e.relations)) << name;
    }
}

TEST(NijenhuisTorsion, DetectsVaryingJordanBlock) {
    // L = (1 q2; 0 1) lifted: a Jordan block whose off-diagonal entry varies.
    const Tensor11 l = Tensor11::from_rows({{{P("q2"), P("q1"), P("0"), P("0")},
                                             {P("0"), P("1"), P("0"), P("0")},
                                             {P("0"), P("0"), P("q2"), P("0")},
                                             {P("0"), P("0"), P("q1"), P("1")}}});
    const Torsion3 t = nijenhuis_torsion(l, chart());
    EXPECT_FALSE(is_zero(t));
    EXPECT_TRUE(is_antisymmetric(t));
}

TEST(Property, CoordinateFormulaMatchesInvariantForm) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 5; ++i) {
        const Tensor11 l = random_tensor(rng, false);
        const Torsion3 a = haantjes_torsion(l, chart());
        const Torsion3 b = haantjes_torsion_invariant(l, chart());
        EXPECT_TRUE(is_zero(difference(a, b))) << residual_head(difference(a, b));
        EXPECT_TRUE(is_antisymmetric(a));
        EXPECT_TRUE(is_antisymmetric(nijenhuis_torsion(l, chart())));
    }
}

TEST(EigenData, AngularOperator) {
    const auto eig = eigen_data(catalog("K_J2", {}, false).tensor);
    ASSERT_EQ(eig.size(), 2u);
    bool radius = false, zero = false;
    for (const auto& e : eig) {
        EXPECT_EQ(e.multiplicity, 2);
        radius = radius || (e.value - P("q1^2 + q2^2")).is_zero();
        zero = zero || e.value.is_zero();
    }
    EXPECT_TRUE(radius && zero);
}

TEST(EigenData, NijenhuisGeneratorOfI2) {
    const auto eig = eigen_data(catalog("N_I2", {}, false).tensor);
    ASSERT_EQ(eig.size(), 2u);
    bool a = false, b = false;
    for (const auto& e : eig) {
        a = a || (e.value + P("1 + g2*q1^2")).is_zero();
        b = b || e.value.is_zero();
    }
    EXPECT_TRUE(a && b);
}

TEST(EigenData, EllipticRootsLiveInTheExtension) {
    const CatalogEntry e = catalog("K_e", {}, false);
    const auto eig = eigen_data(e.tensor, e.relations);
    ASSERT_EQ(eig.size(), 2u);
    EXPECT_TRUE(eig[0].value.has_radical());
    EXPECT_TRUE(is_zero(eig[0].value.conjugate() - eig[1].value, e.relations));
}

TEST(Semisimplicity, CatalogPassesJordanFails) {
    for (const char* name : {"K_I2", "K_J2"}) {
        const CatalogEntry e = catalog(name, {}, false);
        EXPECT_TRUE(semisimplicity_check(e.tensor, eigen_data(e.tensor), e.relations).passed()) << name;
    }
    const Tensor11 nil = Tensor11::from_rows({{{P("0"), P("1"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")},
                                               {P("0"), P("0"), P("0"), P("0")}}});
    EXPECT_FALSE(semisimplicity_check(nil, {{P("0"), 4}}).passed());
}

TEST(Codistribution, AngularForm) {
    const Tensor11 k = catalog("K_J2", {}, false).tensor;
    const auto basis = codistribution_basis(k, P("q1^2 + q2^2"));
    EXPECT_TRUE(span_contains(basis, OneForm{P("-q2"), P("q1"), P("0"), P("0")}));
    for (const auto& b : basis) EXPECT_TRUE(is_zero(eigenform_residual(k, P("q1^2 + q2^2"), b)));
}

TEST(Codistribution, GeneratorOfI2) {
    const Tensor11 k = catalog("N_I2", {}, false).tensor;
    const auto basis = codistribution_basis(k, P("0"));
    EXPECT_TRUE(span_contains(basis, OneForm{P("-g2*q1*q2"), P("1 + g2*q1^2"), P("0"), P("0")}));
}

TEST(Codistribution, DiagonalOperator) {
    const Tensor11 k = Tensor11::diagonal({P("0"), P("1"), P("0"), P("1")});
    const auto basis = codistribution_basis(k, P("1"));
    EXPECT_TRUE(span_contains(basis, OneForm{P("0"), P("1"), P("0"), P("0")}));
    EXPECT_TRUE(span_contains(basis, OneForm{P("0"), P("0"), P("0"), P("1")}));
    EXPECT_FALSE(span_contains(basis, OneForm{P("1"), P("0"), P("0"), P("0")}));
}

TEST(Commute, IdentityCommutes) {
    const Tensor11 id = Tensor11::identity(ctx());
    EXPECT_EQ(commute_check(id, catalog("K_I2", {}, false).tensor).status, CheckStatus::pass);
    const CatalogEntry e = catalog("K_e", {}, false);
    EXPECT_EQ(commute_check(e.tensor, id, e.relations).status, CheckStatus::pass);
    const CheckResult r = commute_check(catalog("K_J2", {}, false).tensor, catalog("K_I2", {}, false).tensor, {}, false);
    EXPECT_EQ(r.status, CheckStatus::recorded);
}

TEST(Property, LiftFormDeterminantIsSquare) {
    for (const char* name : {"K_J2", "K_I2", "K_I1", "K_e", "N_I2", "N_e"}) {
        const CatalogEntry e = catalog(name, {}, false);
        ASSERT_TRUE(is_lift_form(e.tensor, e.relations));
        const Scalar lam = P("lam");
        const Block2 a = block(e.tensor, 0, 0);
        const Scalar det_a = (a(0, 0) - lam) * (a(1, 1) - lam) - a(0, 1) * a(1, 0);
        EXPECT_TRUE(is_zero(characteristic_polynomial(e.tensor) - det_a * det_a, e.relations)) << name;
    }
}

TEST(Property, EigenformsSpanTheCodistributions) {
    for (const char* name : {"K_J2", "K_I2", "K_I1", "K_e"}) {
        const CatalogEntry e = catalog(name, {}, false);
        for (const auto& ev : eigen_data(e.tensor, e.relations)) {
            for (const auto& b : codistribution_basis(e.tensor, ev.value, e.relations)) {
                EXPECT_FALSE(is_zero(b, e.relations)) << name;
                EXPECT_TRUE(is_zero(eigenform_residual(e.tensor, ev.value, b), e.relations)) << name;
            }
        }
    }
}

TEST(Property, NijenhuisGeneratorNegatesTrace) {
    EXPECT_TRUE(equal(nijenhuis_generator(Tensor11::identity(ctx())), P("-1") * Tensor11::identity(ctx())));
    const CatalogEntry k = catalog("K_e", {}, false);
    EXPECT_TRUE(equal(nijenhuis_generator(k.tensor), catalog("N_e", {}, false).tensor, k.relations));
    for (const char* name : {"K_J2", "K_I2", "K_I1"}) {
        const Tensor11 k = catalog(name, {}, false).tensor;
        EXPECT_TRUE((nijenhuis_generator(k).trace() + k.trace()).is_zero()) << name;
    }
}

} // namespace
} // namespace haantjes::test
