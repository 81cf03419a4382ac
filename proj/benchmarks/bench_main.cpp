#include <benchmark/benchmark.h>

#include "haantjes/canonical_map.hpp"
#include "haantjes/chain_solver.hpp"
#include "haantjes/expression.hpp"
#include "haantjes/numeric_eval.hpp"
#include "haantjes/torsion.hpp"
#include "haantjes/zernike_models.hpp"

namespace {

using namespace haantjes;

Scalar parse(std::string_view text) { return parse_expression(text, standard_context()); }

void BM_PolynomialProduct(benchmark::State& state) {
    const Scalar h = hamiltonian(standard_context(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h * h);
}
BENCHMARK(BM_PolynomialProduct)->DenseRange(1, 5);

void BM_PoissonBracket(benchmark::State& state) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    const Integrals in = integrals(ctx);
    const Scalar h = hamiltonian(ctx, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(h, in.J, chart));
}
BENCHMARK(BM_PoissonBracket)->DenseRange(1, 5);

void BM_RadicalArithmetic(benchmark::State& state) {
    const Scalar a = parse("(q1 + g2*q2)/sqrt(1 + g2*q1^2 + q2^2)");
    const Scalar b = parse("p1*sqrt(1 + g2*q1^2 + q2^2) - p2");
    for (auto _ : state) benchmark::DoNotOptimize((a * b + a).is_zero());
}
BENCHMARK(BM_RadicalArithmetic);

void BM_HaantjesTorsion(benchmark::State& state) {
    static const char* names[] = {"K_J2", "K_I2", "K_e"};
    const CatalogEntry e = catalog(names[state.range(0)], {}, false);
    const Chart chart = Chart::standard(standard_context());
    state.SetLabel(e.name);
    for (auto _ : state) benchmark::DoNotOptimize(is_zero(haantjes_torsion(e.tensor, chart), e.relations));
}
BENCHMARK(BM_HaantjesTorsion)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveChain(benchmark::State& state) {
    const Context& ctx = standard_context();
    const Scalar h = hamiltonian(ctx, 2);
    const Scalar i = integrals(ctx).I2;
    const AnsatzSpec ansatz = make_ansatz(static_cast<int>(state.range(0)), {"g1", "g2"}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_chain(h, i, ansatz).consistent);
}
BENCHMARK(BM_SolveChain)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyCanonical(benchmark::State& state) {
    static const char* names[] = {"polar_rational", "cartesian_I2", "elliptic"};
    const CanonicalMap map = canonical_map(names[state.range(0)]);
    state.SetLabel(map.name);
    for (auto _ : state) benchmark::DoNotOptimize(verify_canonical(map).passed());
}
BENCHMARK(BM_VerifyCanonical)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_FloatBracket(benchmark::State& state) {
    const Context& ctx = standard_context();
    const Integrals in = integrals(ctx);
    const FloatFunction f = float_bracket(in.I1, in.I2);
    std::vector<double> x(ctx->size(), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(f(x));
}
BENCHMARK(BM_FloatBracket);

} // namespace

BENCHMARK_MAIN();
