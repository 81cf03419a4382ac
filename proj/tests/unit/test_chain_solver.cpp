#include <gtest/gtest.h>

#include "haantjes/chain_solver.hpp"
#include "haantjes/torsion.hpp"
#include "haantjes/zernike_models.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

const Chart& chart() {
    static const Chart c = Chart::standard(ctx());
    return c;
}

TEST(ChainSolver, FlatI2AtDegreeZero) {
    const Bindings flat{{idx("g2"), Rational(0)}};
    const Scalar h = specialize(hamiltonian(ctx(), 1), flat);
    const Scalar i = specialize(integrals(ctx()).I2, flat);
    const LinearSolutionFamily fam = solve_chain(h, i, make_ansatz(0, {"g1"}, 1));
    ASSERT_TRUE(fam.consistent);
    EXPECT_TRUE(family_contains(fam, Tensor11::diagonal({P("0"), P("1"), P("0"), P("1")})));
}

TEST(ChainSolver, RecoversKI2) {
    const LinearSolutionFamily fam = solve_chain(hamiltonian(ctx(), 2), integrals(ctx()).I2, make_ansatz(2, {"g1", "g2"}, 1));
    ASSERT_TRUE(fam.consistent);
    EXPECT_TRUE(family_contains(fam, catalog("K_I2", {}, false).tensor));
    EXPECT_FALSE(family_contains(fam, catalog("K_I1", {}, false).tensor));
    EXPECT_EQ(fam.basis.size(), fam.free_names.size());
    // Every member of the affine family satisfies the chain equation.
    for (std::size_t i = 0; i < fam.basis.size(); ++i) {
        const Tensor11 k = fam.particular + fam.basis[i];
        EXPECT_TRUE(is_zero(chain_residual(k, hamiltonian(ctx(), 2), integrals(ctx()).I2, chart())));
    }
}

TEST(ChainSolver, InconsistentTargetListsMonomials) {
    const LinearSolutionFamily fam = solve_chain(hamiltonian(ctx(), 2), P("q1"), make_ansatz(2, {"g1", "g2"}, 1));
    EXPECT_FALSE(fam.consistent);
    EXPECT_FALSE(fam.diagnostics.empty());
}

TEST(ChainSolver, RejectsNonPolynomialInput) {
    EXPECT_THROW((void)solve_chain(hamiltonian(ctx(), 2), P("1/q1"), make_ansatz(1, {}, 1)), Error);
}

TEST(HaantjesFilter, IdentityFamily) {
    const Scalar h = hamiltonian(ctx(), 2);
    const LinearSolutionFamily fam = solve_chain(h, h, make_ansatz(0, {}, 1));
    ASSERT_TRUE(fam.consistent);
    const FilterResult fr = filter_haantjes(fam);
    bool found = false;
    for (const auto& m : fr.members) found = found || equal(m, Tensor11::identity(ctx()));
    EXPECT_TRUE(found) << fr.strategy;
}

TEST(HaantjesFilter, MembersAreVerified) {
    const Scalar h = hamiltonian(ctx(), 2);
    const Scalar j = integrals(ctx()).J;
    const LinearSolutionFamily fam = solve_chain(h, j * j, make_ansatz(2, {"g1", "g2"}, 1));
    ASSERT_TRUE(fam.consistent);
    const std::vector<Tensor11> extra{catalog("K_J2", {}, false).tensor};
    const FilterResult fr = filter_haantjes(fam, extra);
    ASSERT_FALSE(fr.members.empty());
    for (const auto& m : fr.members) {
        EXPECT_TRUE(family_contains(fam, m));
        EXPECT_TRUE(is_zero(haantjes_torsion(m, chart())));
        EXPECT_TRUE(is_zero(chain_residual(m, h, j * j, chart())));
    }
}

} // namespace
} // namespace haantjes::test
