#include "haantjes/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "haantjes/canonical_map.hpp"
#include "haantjes/chain_solver.hpp"
#include "haantjes/expression.hpp"
#include "haantjes/fixtures.hpp"
#include "haantjes/obstruction.hpp"
#include "haantjes/separation.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes {

namespace {

// Runs `body` and stamps the elapsed time on every check it added.
void timed(VerificationReport& report, const std::function<void()>& body) {
    const std::size_t first = report.checks.size();
    const auto start = std::chrono::steady_clock::now();
    body();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = first; i < report.checks.size(); ++i) report.checks[i].seconds = seconds;
}

void check_degree(int n) {
    if (n < 1 || n > kMaxFamilyDegree) throw Error("--N must lie in 1.." + std::to_string(kMaxFamilyDegree));
}

Scalar parse(std::string_view text) { return parse_expression(text, standard_context()); }

std::string rational_text(const Rational& r) { return r.get_str(); }

void record_parameters(VerificationReport& report, const SuiteOptions& o) {
    auto put = [&](const char* key, const std::optional<Rational>& v) {
        report.parameters.emplace_back(key, v ? rational_text(*v) : "symbolic");
    };
    put("gamma1", o.gamma1);
    put("gamma2", o.gamma2);
    put("k1", o.k1);
    put("k2", o.k2);
}

VerificationReport superintegrability(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    const Bindings b = suite_bindings(o);
    const Chart chart = Chart::standard(ctx);
    VerificationReport report;
    record_parameters(report, o);
    const Integrals in = integrals(ctx);
    const Scalar h = specialize(hamiltonian(ctx, 2), b);
    const Scalar j = in.J;
    const Scalar i1 = specialize(in.I1, b);
    const Scalar i2 = specialize(in.I2, b);
    timed(report, [&] {
        for (const auto& [id, f] : {std::pair{"H_J", j}, std::pair{"H_I1", i1}, std::pair{"H_I2", i2}}) {
            const Scalar r = poisson_bracket(h, f, chart);
            report.add(exact_check(id, std::string("{H_(2), ") + (id + 2) + "} = 0", r.is_zero(), residual_head(r)));
        }
        const Scalar dep = i1 + i2 - specialize(gamma_symbol(ctx, 2), b) * j * j - h;
        report.add(exact_check("dependence", "I1 + I2 - gamma2 J^2 - H_(2) = 0", dep.is_zero(), residual_head(dep)));
        const Scalar r12 = poisson_bracket(i1, i2, chart);
        report.add(bool_check("I1_I2_noncommuting", "{I1, I2} does not vanish", !r12.is_zero(), residual_head(r12, 80)));
    });
    timed(report, [&] {
        for (int n = 1; n <= o.N; ++n) {
            const Scalar hn = specialize(hamiltonian(ctx, n), b);
            const Scalar r = poisson_bracket(hn, j, chart);
            report.add(exact_check("H" + std::to_string(n) + "_J", "{H_(N), J} = 0", r.is_zero(), residual_head(r)));
        }
    });
    return report;
}

VerificationReport torsion(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    const Bindings b = suite_bindings(o);
    VerificationReport report;
    record_parameters(report, o);
    timed(report, [&] {
        for (const char* name : {"K_J2", "K_I2", "K_I1", "K_e"}) {
            const CatalogEntry e = catalog(name, b, false);
            const Torsion3 t = haantjes_torsion(e.tensor, chart);
            report.add(exact_check(std::string(name) + ".haantjes", "Haantjes torsion vanishes", is_zero(t, e.relations),
                                   residual_head(t)));
        }
        for (const char* name : {"N_I2", "N_I1", "N_e"}) {
            const CatalogEntry e = catalog(name, b, false);
            const Torsion3 t = nijenhuis_torsion(e.tensor, chart);
            report.add(exact_check(std::string(name) + ".nijenhuis", "Nijenhuis torsion vanishes", is_zero(t, e.relations),
                                   residual_head(t)));
        }
        const CatalogEntry ki2 = catalog("K_I2", b, false);
        const Torsion3 t = nijenhuis_torsion(ki2.tensor, chart);
        report.add(bool_check("K_I2.nijenhuis_nonzero", "K_I2 is Haantjes without being Nijenhuis",
                              !is_zero(t, ki2.relations), residual_head(t)));
    });
    timed(report, [&] {
        const CatalogEntry ki2 = catalog("K_I2", b, false);
        const CatalogEntry ni2 = catalog("N_I2", b, false);
        const Tensor11 gen = nijenhuis_generator(ki2.tensor);
        report.add(bool_check("K_I2.generator", "K_I2 - tr(K_I2)/2 I equals N_I2", equal(gen, ni2.tensor, ni2.relations)));
        const CatalogEntry ke = catalog("K_e", b, false);
        const CatalogEntry ne = catalog("N_e", b, false);
        report.add(bool_check("K_e.generator", "K_e - tr(K_e)/2 I equals N_e",
                              equal(nijenhuis_generator(ke.tensor), ne.tensor, ne.relations)));
        const Tensor11 id = Tensor11::identity(ctx);
        report.add(bool_check("identity.generator", "I - tr(I)/2 I = -I",
                              equal(nijenhuis_generator(id), Scalar::constant(ctx, Rational(-1)) * id)));
    });
    // Random affine tensor fields: both Haantjes formulas agree.
    timed(report, [&] {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        const std::array<Scalar, 4> x{var(ctx, "q1"), var(ctx, "q2"), var(ctx, "p1"), var(ctx, "p2")};
        for (int sample = 0; sample < 5; ++sample) {
            std::array<std::array<Scalar, 4>, 4> rows{{{Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                                       {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                                       {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                                       {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)}}};
            for (auto& row : rows) {
                for (auto& entry : row) {
                    Scalar s = Scalar::constant(ctx, Rational(coeff(rng)));
                    for (const auto& xi : x) s = s + xi * Rational(coeff(rng));
                    entry = s;
                }
            }
            const Tensor11 l = Tensor11::from_rows(rows);
            const Torsion3 a = haantjes_torsion(l, chart);
            const Torsion3 inv = haantjes_torsion_invariant(l, chart);
            Torsion3 diff(ctx);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    for (std::size_t k = 0; k < 4; ++k) diff(i, j, k) = a(i, j, k) - inv(i, j, k);
                }
            }
            const std::string id = "random" + std::to_string(sample + 1);
            report.add(exact_check(id + ".formulas_agree", "coordinate and invariant Haantjes formulas agree", is_zero(diff),
                                   residual_head(diff)));
            report.add(bool_check(id + ".antisymmetric", "both torsions are antisymmetric in the lower indices",
                                  is_antisymmetric(nijenhuis_torsion(l, chart)) && is_antisymmetric(a)));
        }
    });
    return report;
}

VerificationReport chain(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    const Bindings b = suite_bindings(o);
    VerificationReport report;
    record_parameters(report, o);
    timed(report, [&] {
        for (const auto& name : catalog_names()) {
            const CatalogEntry e = catalog(name, b, false);
            if (!e.integral) continue;
            const OneForm r = chain_residual(e.tensor, e.hamiltonian, *e.integral, chart);
            report.add(exact_check(name, "K^T dH - dI = 0", is_zero(r, e.relations), residual_head(r)));
        }
    });
    timed(report, [&] {
        const CatalogEntry kj = catalog("K_J2", b, false);
        const Scalar j = integrals(ctx).J;
        for (int n = 1; n <= o.N; ++n) {
            const OneForm r = chain_residual(kj.tensor, specialize(hamiltonian(ctx, n), b), j * j, chart);
            report.add(exact_check("K_J2.H" + std::to_string(n), "K_J2^T dH_(N) = d(J^2)", is_zero(r), residual_head(r)));
        }
    });
    timed(report, [&] {
        for (const auto& name : catalog_names()) {
            const CatalogEntry e = catalog(name, b, false);
            const Tensor11 c = compatibility_residual(e.tensor);
            report.add(exact_check(name + ".compatible", "Omega K = K^T Omega", is_zero(c, e.relations), residual_head(c)));
        }
    });
    return report;
}

struct SolverCase {
    std::string id;
    Scalar h;
    Scalar integral;
    std::vector<std::string> parameters;
    int parameter_degree;
    std::string target;
    Rational scale;
};

VerificationReport solver(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    VerificationReport report;
    report.parameters.emplace_back("deg", std::to_string(o.deg));
    report.parameters.emplace_back("N", std::to_string(o.N));
    const Integrals in = integrals(ctx);
    std::vector<std::string> gammas;
    for (int n = 1; n <= o.N; ++n) gammas.push_back("g" + std::to_string(n));
    const std::vector<SolverCase> cases{
        {"I2", hamiltonian(ctx, 2), in.I2, {"g1", "g2"}, 1, "K_I2", Rational(1)},
        {"J2", hamiltonian(ctx, o.N), in.J * in.J, gammas, 1, "K_J2", Rational(1)},
        {"half_J2", hamiltonian(ctx, o.N), in.J * in.J * Rational(1, 2), gammas, 1, "K_J2", Rational(1, 2)},
        {"I_e", hamiltonian(ctx, 2), elliptic_integral(ctx), {"g2", "k1", "k2"}, 3, "K_e", Rational(1)},
    };
    for (const auto& c : cases) {
        timed(report, [&] {
            const CatalogEntry target = catalog(c.target, {}, false);
            const Tensor11 expected = Scalar::constant(ctx, c.scale) * target.tensor;
            const LinearSolutionFamily fam = solve_chain(c.h, c.integral, make_ansatz(o.deg, c.parameters, c.parameter_degree));
            report.add(bool_check(c.id + ".consistent", "the chain system has solutions", fam.consistent,
                                  std::to_string(fam.unknowns) + " unknowns, " + std::to_string(fam.equations) +
                                      " equations, kernel " + std::to_string(fam.basis.size())));
            const bool contains = fam.consistent && family_contains(fam, expected);
            const std::string what = c.scale == 1 ? c.target : c.scale.get_str() + " " + c.target;
            report.add(bool_check(c.id + ".contains", "the family contains " + what + " entrywise", contains));
            if (!fam.consistent) return;
            const std::vector<Tensor11> extra{expected};
            const FilterResult fr = filter_haantjes(fam, extra, target.relations);
            bool found = false;
            for (const auto& m : fr.members) found = found || equal(m, expected, target.relations);
            report.add(bool_check(c.id + ".haantjes_member", "the Haantjes filter keeps " + what, found,
                                  fr.strategy + ", " + std::to_string(fr.members.size()) + " members"));
        });
    }
    timed(report, [&] {
        const LinearSolutionFamily fam = solve_chain(hamiltonian(ctx, 2), var(ctx, "q1"), make_ansatz(o.deg, {"g1", "g2"}, 1));
        std::string head;
        for (std::size_t i = 0; i < fam.diagnostics.size() && i < 3; ++i) head += (i ? ", " : "") + fam.diagnostics[i];
        report.add(bool_check("inconsistent.q1", "I = q1 is not a chain target; uncancelled monomials are listed",
                              !fam.consistent && !fam.diagnostics.empty(), head));
    });
    return report;
}

VerificationReport canonical(const SuiteOptions& o) {
    VerificationReport report;
    record_parameters(report, o);
    const Bindings b = suite_bindings(o);
    for (const auto& name : canonical_map_names()) {
        timed(report, [&] {
            const CanonicalMap map = canonical_map(name, b);
            report.merge(verify_canonical(map), name);
        });
    }
    return report;
}

// Positions of the map as differentials, in the order of the new positions.
std::array<OneForm, 2> position_differentials(const CanonicalMap& map) {
    return {map.coordinates[0].gradient, map.coordinates[1].gradient};
}

VerificationReport darboux(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    VerificationReport report;
    record_parameters(report, o);
    const Bindings b = suite_bindings(o);

    // EPTs built from lift-form operators are canonical.
    timed(report, [&] {
        for (const char* name : {"K_J2", "N_I2", "K_I1", "K_e"}) {
            const CatalogEntry e = catalog(name, b, false);
            const CanonicalMap map = build_ept_from_lift(e.tensor, e.relations);
            report.add(bool_check(std::string(name) + ".ept", "EPT from the A-block is canonical", verify_canonical(map).passed(),
                                  "Q1 = " + residual_head(*map.coordinates[0].value, 60) +
                                      ", Q2 = " + residual_head(*map.coordinates[1].value, 60)));
        }
    });

    // (K^T - lambda_i) dQ_i = 0 for the generating operator of each map.
    timed(report, [&] {
        const std::pair<const char*, const char*> pairs[] = {
            {"polar", "K_J2"}, {"cartesian_I2", "K_I2"}, {"cartesian_I1", "K_I1"}, {"elliptic", "K_e"}};
        for (const auto& [map_name, op] : pairs) {
            const CanonicalMap map = canonical_map(map_name, b);
            const CatalogEntry e = catalog(op, b, false);
            const std::vector<Eigenvalue> eig = eigen_data(e.tensor, e.relations);
            const auto dq = position_differentials(map);
            for (std::size_t i = 0; i < 2; ++i) {
                bool ok = false;
                for (const auto& ev : eig) {
                    const OneForm r = e.tensor.transpose_apply(dq[i]) - ev.value * dq[i];
                    ok = ok || is_zero(r, e.relations);
                }
                report.add(bool_check(std::string(map_name) + ".eigenform_Q" + std::to_string(i + 1),
                                      "dQ lies in a characteristic codistribution of " + std::string(op), ok));
            }
        }
    });

    // Reparametrization: polar angle vs its ratio representative, and Q2 -> Q2^2.
    timed(report, [&] {
        const CanonicalMap polar = canonical_map("polar", b);
        const CanonicalMap ratio = canonical_map("polar_rational", b);
        const Scalar u = *ratio.coordinates[0].value;
        const Scalar one = Scalar::constant(ctx, Rational(1));
        const OneForm dphi = (one / (one + u * u)) * ratio.coordinates[0].gradient;
        report.add(exact_check("polar.angle_differential", "d phi = du/(1 + u^2) with u = q2/q1",
                               is_zero(dphi - polar.coordinates[0].gradient), residual_head(dphi - polar.coordinates[0].gradient)));
        const Scalar pm = *ratio.coordinates[2].value * (one + u * u) - *polar.coordinates[2].value;
        report.add(exact_check("polar.angle_momentum", "p_phi = P_u (1 + u^2)", pm.is_zero(), residual_head(pm)));

        const CanonicalMap cart = canonical_map("cartesian_I2", b);
        const Scalar q2 = *cart.coordinates[1].value;
        CanonicalMap squared = cart;
        squared.name = "cartesian_I2.squared";
        squared.coordinates[1] = make_coordinate("Q2sq", q2 * q2, cart.chart);
        squared.coordinates[3] = make_coordinate("P2sq", *cart.coordinates[3].value / (q2 * Rational(2)), cart.chart);
        report.add(bool_check("cartesian_I2.reparametrized", "Q2 -> Q2^2, P2 -> P2/(2 Q2) stays canonical",
                              verify_canonical(squared).passed()));
    });

    // The Cartesian maps reduce to the identity at gamma2 = 0.
    timed(report, [&] {
        Bindings flat = b;
        std::erase_if(flat, [&](const auto& p) { return p.first == ctx->index("g2"); });
        flat.emplace_back(ctx->index("g2"), Rational(0));
        for (const char* name : {"cartesian_I2", "cartesian_I1"}) {
            const CanonicalMap map = canonical_map(name, flat);
            std::array<std::string, 4> expect{"q1", "q2", "p1", "p2"};
            std::string head;
            bool ok = true;
            for (std::size_t i = 0; i < 4; ++i) {
                const Scalar d = *map.coordinates[i].value - parse(expect[i]);
                ok = ok && d.is_zero();
                if (!d.is_zero() && head.empty()) head = residual_head(d);
            }
            report.add(exact_check(std::string(name) + ".flat_limit", "the map is the identity at gamma2 = 0",
                                   ok, head.empty() ? "0" : head));
        }
    });

    // Square roots of the elliptic map: radical parts survive, symmetric functions are rational.
    timed(report, [&] {
        const CanonicalMap ell = canonical_map("elliptic", b);
        const Scalar q1 = *ell.coordinates[0].value;
        const Scalar q2 = *ell.coordinates[1].value;
        report.add(bool_check("elliptic.radical_parts", "both Q1 and Q2 carry a nonzero radical part",
                              q1.has_radical() && q2.has_radical()));
        const Scalar s = reduce(q1 + q2, ell.relations);
        const Scalar p = reduce(q1 * q2, ell.relations);
        report.add(bool_check("elliptic.symmetric_rational", "Q1 + Q2 and Q1 Q2 are rational", !s.has_radical() && !p.has_radical(),
                              "Q1 + Q2 = " + residual_head(s, 80)));
    });

    // Step B: conjugate momenta from the characteristic differentials.
    timed(report, [&] {
        MomentumAnsatz ma;
        ma.position_degree = 3;
        ma.parameters = {ctx->index("g1"), ctx->index("g2")};
        ma.parameter_degree = 2;
        struct StepB {
            const char* id;
            OneForm dx;
            OneForm tau;
            const char* expected;
        };
        const CanonicalMap cart = canonical_map("cartesian_I2");
        const std::vector<StepB> cases{
            {"polar", OneForm{parse("-q2/(q1^2+q2^2)"), parse("q1/(q1^2+q2^2)"), parse("0"), parse("0")},
             OneForm{parse("q1*p2 - q2*p1"), parse("0"), parse("-q1*q2"), parse("q1^2")}, "q1*p2 - q2*p1"},
            {"cartesian_I2.E2", cart.coordinates[1].gradient,
             OneForm{parse("g2*q1*p2"), parse("0"), parse("0"), parse("1 + g2*q1^2")}, "p2*sqrt(1 + g2*q1^2)"},
            {"cartesian_I2.E1", cart.coordinates[0].gradient,
             OneForm{parse("0"), parse("g2*q1*p2"), parse("1 + g2*q1^2"), parse("g2*q1*q2")},
             "p1 + g2*q1*q2*p2/(1 + g2*q1^2)"},
        };
        for (const auto& c : cases) {
            const ConjugateMomentum cm = stepB_conjugate_momentum(c.dx, c.tau, chart, ma);
            report.add(bool_check(std::string("stepB.") + c.id + ".closed", "beta = h dx + r tau is closed", cm.closed, cm.note));
            const Scalar d = cm.potential ? *cm.potential - parse(c.expected) : parse("1");
            report.add(exact_check(std::string("stepB.") + c.id + ".momentum", std::string("recovers ") + c.expected,
                                   cm.potential && d.is_zero(), cm.potential ? residual_head(d) : "no potential"));
        }
    });

    // Exactness examples.
    timed(report, [&] {
        report.add(exactness_check(differential(parse("q1*p2 - q2*p1"), chart), chart, "exact.angular_momentum",
                                   "d(q1 p2 - q2 p1) is closed"));
        const OneForm rot{parse("-q2"), parse("q1"), parse("0"), parse("0")};
        CheckResult bad = exactness_check(rot, chart, "exact.rotation", "-q2 dq1 + q1 dq2 is not closed");
        bad.status = bad.status == CheckStatus::fail ? CheckStatus::pass : CheckStatus::fail;
        report.add(std::move(bad));
        report.add(exactness_check(parse("1/q1^2") * rot, chart, "exact.rotation_scaled",
                                   "(-q2 dq1 + q1 dq2)/q1^2 = d(q2/q1) is closed"));
    });
    return report;
}

VerificationReport ode(const SuiteOptions& o) {
    VerificationReport report;
    record_parameters(report, o);
    const Bindings b = suite_bindings(o);
    timed(report, [&] {
        const std::pair<const char*, int> expected[] = {{"elliptic", 4}, {"polar", 3}, {"cartesian_I2", 3}, {"cartesian_I1", 3}};
        for (const auto& [tag, count] : expected) {
            const OdeClass c = ode_singularity_count(separated_ode(tag, b));
            report.add(bool_check(std::string(tag), std::to_string(count) + " regular singular points",
                                  c.regular_singular_points == count, std::to_string(c.regular_singular_points) + " (" + c.label + ")"));
        }
        const Context& ctx = standard_context();
        const OdeClass degenerate = ode_singularity_count(separated_ode("elliptic", {{ctx->index("k1"), Rational(0)}}));
        report.add(bool_check("elliptic.k1_zero", "a double root of h leaves 3 singular points", degenerate.regular_singular_points == 3,
                              std::to_string(degenerate.regular_singular_points) + " (" + degenerate.label + ")"));
    });
    return report;
}

using SuiteRunner = std::function<VerificationReport(const SuiteOptions&)>;

struct SuiteEntry {
    SuiteInfo info;
    SuiteRunner run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> suites{
        {{"superintegrability", "H_(2) commutes with J, I1, I2; dependence relation; {H_(N), J} = 0"}, superintegrability},
        {{"symmetry-algebra", "cubic Higgs brackets, Casimir, gradient form and the oscillator branch"},
         [](const SuiteOptions& o) {
             VerificationReport r = symmetry_algebra_report(suite_bindings(o));
             record_parameters(r, o);
             return r;
         }},
        {{"torsion", "Haantjes and Nijenhuis torsion of the catalog; coordinate vs invariant formula"}, torsion},
        {{"chain", "K^T dH = dI for every catalog pair and K_J2 against H_(N)"}, chain},
        {{"solver", "chain solver and Haantjes filter reproduce K_I2, K_J2 and K_e"}, solver},
        {{"canonical", "ten canonical brackets for every catalog map"}, canonical},
        {{"darboux", "EPTs from lift-form operators, reparametrization, conjugate momenta, exactness"}, darboux},
        {{"separated", "separated and Staeckel forms in mixed coordinates; separation operators"},
         [](const SuiteOptions& o) { return separated_suite(o.N); }},
        {{"elliptic", "confocal coordinates: eigenvalues, eigenforms, discriminant, level sets, Staeckel form"},
         [](const SuiteOptions& o) {
             VerificationReport r = elliptic_suite(suite_bindings(o));
             record_parameters(r, o);
             return r;
         }},
        {{"ode", "regular singular points of the separated ODEs"}, ode},
        {{"obstruction", "cross-term obstruction to extended point transformations for N >= 3"},
         [](const SuiteOptions& o) { return obstruction_suite(o.N); }},
        {{"numeric", "geodesic polar spot checks and floating cross-checks"},
         [](const SuiteOptions& o) { return numeric_suite({o.samples, o.tol, o.seed}); }},
        {{"fixtures", "checked-in fixtures load, re-verify and match their regenerated form"},
         [](const SuiteOptions& o) { return fixture_suite(o.fixture_dir); }},
    };
    return suites;
}

} // namespace

Bindings suite_bindings(const SuiteOptions& o) {
    const Context& ctx = standard_context();
    Bindings b;
    if (o.gamma1) b.emplace_back(ctx->index("g1"), *o.gamma1);
    if (o.gamma2) b.emplace_back(ctx->index("g2"), *o.gamma2);
    if (o.k1) b.emplace_back(ctx->index("k1"), *o.k1);
    if (o.k2) b.emplace_back(ctx->index("k2"), *o.k2);
    return b;
}

std::vector<SuiteInfo> suite_catalog() {
    std::vector<SuiteInfo> out;
    for (const auto& s : registry()) out.push_back(s.info);
    return out;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
    check_degree(options.N);
    if (options.deg < 1) throw Error("--deg must be positive");
    if (options.samples < 1) throw Error("--samples must be positive");
    for (const auto& s : registry()) {
        if (s.info.name != name) continue;
        const auto start = std::chrono::steady_clock::now();
        VerificationReport report = s.run(options);
        report.suite = name;
        if (report.checks.size() == 1 || report.checks.empty() || report.checks.front().seconds == 0.0) {
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (auto& c : report.checks) {
                if (c.seconds == 0.0) c.seconds = seconds;
            }
        }
        return report;
    }
    throw UnknownSuite(name);
}

} // namespace haantjes
