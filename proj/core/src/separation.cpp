#include "haantjes/separation.hpp"

#include <algorithm>

#include "haantjes/expression.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

namespace {

Scalar parse(const Context& ctx, std::string_view text) { return parse_expression(text, ctx); }

std::optional<Rational> bound_value(const Bindings& bindings, std::size_t var) {
    for (const auto& [v, value] : bindings) {
        if (v == var) return value;
    }
    return std::nullopt;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

// Square root of a nonnegative rational when it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class n = r.get_num();
    mpz_class d = r.get_den();
    mpz_class sn;
    mpz_class sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace

Relations specialize_relations(const Relations& relations, const Bindings& bindings) {
    Relations out;
    for (const auto& rw : relations) {
        if (bound_value(bindings, rw.variable)) continue;
        out.push_back(SquareRewrite{rw.variable, specialize(rw.replacement, bindings)});
    }
    return out;
}

SeparationOperators separation_operators_from_separated(std::span<const Scalar> hs, std::size_t base) {
    if (base >= hs.size()) throw Error("base index out of range");
    const Context& ctx = hs[base].context();
    const Chart chart = Chart::separated(ctx);
    const Scalar& h = hs[base];
    std::array<Scalar, 2> dh{h.derivative(chart.p[0]), h.derivative(chart.p[1])};
    for (std::size_t i = 0; i < 2; ++i) {
        if (dh[i].is_zero()) throw Error("dH/dP" + std::to_string(i + 1) + " vanishes");
    }
    SeparationOperators out;
    out.report.suite = "separation-operators";
    for (std::size_t a = 0; a < hs.size(); ++a) {
        std::array<Scalar, 2> ratio{hs[a].derivative(chart.p[0]) / dh[0], hs[a].derivative(chart.p[1]) / dh[1]};
        const Tensor11 k = Tensor11::diagonal({ratio[0], ratio[1], ratio[0], ratio[1]});
        const std::string tag = "K" + std::to_string(a + 1);
        out.report.merge(check_symplectic_compatibility(k), tag);
        const Torsion3 t = haantjes_torsion(k, chart);
        out.report.add(exact_check(tag + ".haantjes", "Haantjes torsion vanishes", is_zero(t), residual_head(t)));
        const OneForm chain = chain_residual(k, h, hs[a], chart);
        out.report.add(exact_check(tag + ".chain", "K^T dH = dH_a", is_zero(chain), residual_head(chain)));
        out.operators.push_back(k);
    }
    return out;
}

std::vector<std::string> separated_ode_tags() { return {"polar", "cartesian_I2", "cartesian_I1", "elliptic"}; }

SeparatedOde separated_ode(std::string_view tag, const Bindings& bindings) {
    const Context& ctx = standard_context();
    auto sp = [&bindings](const Scalar& s) { return specialize(s, bindings); };
    const Scalar g2 = sp(parse(ctx, "g2"));
    SeparatedOde ode{std::string(tag), "", Scalar(ctx), {}, {}};
    if (tag == "polar") {
        // Radial equation in s = r^2: leading coefficient s (1 + g2 s).
        ode.variable = "s";
        ode.leading = g2;
        ode.roots.push_back(Scalar(ctx));
        if (!g2.is_zero()) ode.roots.push_back(-g2.inverse());
    } else if (tag == "cartesian_I2" || tag == "cartesian_I1") {
        // Leading coefficient 1 + g2 Q^2 with roots +-sqrt(-1/g2).
        ode.variable = tag == "cartesian_I2" ? "Q2" : "Q1";
        ode.leading = g2;
        if (!g2.is_zero()) {
            const RationalFunction minus_g2 = require_rational(-g2);
            Scalar root(ctx);
            if (minus_g2.constant_value()) {
                if (const auto r = rational_sqrt(*minus_g2.constant_value())) {
                    root = Scalar::constant(ctx, 1 / *r);
                } else {
                    root = Scalar(RationalFunction(ctx), minus_g2.inverse(), minus_g2.numerator());
                }
            } else {
                if (!minus_g2.is_polynomial()) throw Error("gamma2 must be polynomial");
                root = Scalar(RationalFunction(ctx), minus_g2.inverse(), minus_g2.numerator());
            }
            ode.roots = {root, -root};
        }
    } else if (tag == "elliptic") {
        ode.variable = "lam";
        ode.relations = specialize_relations(unit_circle_relation(ctx), bindings);
        ode.leading = sp(parse(ctx, "4*g2"));
        ode.roots = {Scalar(ctx), sp(parse(ctx, "k2^2")), sp(parse(ctx, "-k1^2"))};
    } else {
        throw Error("unknown separation '" + std::string(tag) + "'");
    }
    return ode;
}

OdeClass ode_singularity_count(const SeparatedOde& ode) {
    std::vector<Scalar> distinct;
    for (const auto& r : ode.roots) {
        const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                      [&](const Scalar& d) { return is_zero(r - d, ode.relations); });
        if (!seen) distinct.push_back(r);
    }
    OdeClass out;
    out.regular_singular_points = static_cast<int>(distinct.size()) + 1;
    switch (out.regular_singular_points) {
    case 3: out.label = "hypergeometric"; break;
    case 4: out.label = "Heun"; break;
    default: out.label = "Fuchsian with " + std::to_string(out.regular_singular_points) + " regular singular points";
    }
    return out;
}

StaeckelEllipticData staeckel_elliptic(const Context& ctx) {
    return {parse(ctx, "4*g2*lam*(lam - k2^2)*(lam + k1^2)"), parse(ctx, "2*g1*lam*(lam - k2^2)")};
}

VerificationReport elliptic_suite(const Bindings& bindings) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    auto sp = [&bindings](const Scalar& s) { return specialize(s, bindings); };
    auto p = [&](std::string_view text) { return sp(parse(ctx, text)); };
    const Relations rel = specialize_relations(unit_circle_relation(ctx), bindings);

    VerificationReport report;
    report.suite = "elliptic";
    auto exact = [&](std::string id, std::string identity, const Scalar& residual) {
        const Scalar r = reduce(residual, rel);
        report.add(exact_check(std::move(id), std::move(identity), is_zero(r, rel), residual_head(r)));
    };

    const auto k1v = bound_value(bindings, ctx->index("k1"));
    const auto k2v = bound_value(bindings, ctx->index("k2"));
    if (k1v && k2v) {
        report.add(bool_check("unit_circle", "k1^2 + k2^2 = 1", *k1v * *k1v + *k2v * *k2v == 1,
                              "k1 = " + rational_text(*k1v) + ", k2 = " + rational_text(*k2v)));
    }

    const Tensor11 ke = reduce(catalog("K_e", bindings, false).tensor, rel);
    const Scalar t = p("g2*(q1^2 + k1^2*q2^2) + k2^2");
    const Scalar pp = p("g2*k1^2*k2^2*q2^2");
    const std::array<Scalar, 4> a_expected{p("-g2*k1^2*q2^2"), p("g2*k1^2*q1*q2"), p("g2*q1*q2"), p("-g2*q1^2 - k2^2")};
    const Block2 a = block(ke, 0, 0);
    const Scalar lam = parse(ctx, "lam");
    exact("a_block", "A-block of K_e equals A_e",
          (a(0, 0) - a_expected[0]) + (a(0, 1) - a_expected[1]) * lam + (a(1, 0) - a_expected[2]) * lam * lam +
              (a(1, 1) - a_expected[3]) * lam * lam * lam);
    exact("characteristic_polynomial", "det(A_e - lam I) = lam^2 + T lam + P",
          (a(0, 0) - lam) * (a(1, 1) - lam) - a(0, 1) * a(1, 0) - (lam * lam + t * lam + pp));

    const CanonicalMap map = canonical_map("elliptic", bindings);
    const Scalar q1 = *map.coordinates[0].value;
    const Scalar q2 = *map.coordinates[1].value;
    exact("vieta_sum", "lt1 + lt2 = T", q1 + q2 - t);
    exact("vieta_product", "lt1 lt2 = P", q1 * q2 - pp);
    report.add(bool_check("radical_parts", "both coordinates carry the square root while T and P are rational",
                          q1.has_radical() && q2.has_radical() && !t.has_radical() && !pp.has_radical()));

    // Eigenvalues of K_e and of its Nijenhuis generator.
    const Scalar s = q1 - q2;
    try {
        const std::vector<Eigenvalue> eig = eigen_data(ke, rel);
        const bool two = eig.size() == 2 && eig[0].multiplicity == 2 && eig[1].multiplicity == 2;
        report.add(bool_check("eigenvalue_count", "two double eigenvalues", two));
        if (two) {
            exact("eigenvalues", "lambda_{1,2} = (-T +- S)/2",
                  (eig[0].value - (s - t) * Rational(1, 2)) + (eig[1].value + (s + t) * Rational(1, 2)) * lam);
            const Tensor11 gen = nijenhuis_generator(ke);
            exact("generator_trace", "N_e = K_e + T I", gen(0, 0) - ke(0, 0) - t);
            exact("generator_eigenvalues", "lt_{1,2} = lambda_{1,2} + T = (T +- S)/2",
                  (eig[0].value + t - q1) + (eig[1].value + t - q2) * lam);
            // Characteristic forms sigma_i = g2 q1 q2 dq1 + (g2 k1^2 q2^2 + lambda_i) dq2.
            for (std::size_t i = 0; i < 2; ++i) {
                const std::string tag = "sigma_" + std::to_string(i + 1);
                const Scalar& li = eig[i].value;
                const std::array<Scalar, 2> sigma{p("g2*q1*q2"), p("g2*k1^2*q2^2") + li};
                const Scalar left0 = sigma[0] * a(0, 0) + sigma[1] * a(1, 0) - li * sigma[0];
                const Scalar left1 = sigma[0] * a(0, 1) + sigma[1] * a(1, 1) - li * sigma[1];
                exact(tag + ".left_eigenform", "sigma A_e = lambda sigma", left0 + left1 * lam);
                const OneForm lifted{sigma[0], sigma[1], Scalar(ctx), Scalar(ctx)};
                const OneForm kt = ke.transpose_apply(lifted);
                exact(tag + ".lift", "(sigma, 0) is a left eigenvector of K_e",
                      (kt[0] - li * sigma[0]) + (kt[1] - li * sigma[1]) * lam + kt[2] * lam * lam +
                          kt[3] * lam * lam * lam);
                const CheckResult closed = exactness_check(lifted, chart, tag + ".closed", "", rel);
                report.add(bool_check(tag + ".not_exact", "sigma as given is not closed", closed.status == CheckStatus::fail,
                                      closed.residual));
                const auto dq = differential(i == 0 ? q1 : q2, chart);
                exact(tag + ".coordinate", "dQ_i is parallel to sigma_i", sigma[0] * dq[1] - sigma[1] * dq[0]);
            }
        }
    } catch (const Error& e) {
        report.add(bool_check("eigenvalues", "lambda_{1,2} = (-T +- S)/2", false, e.what()));
    }

    // Derived coordinates agree with the catalog map.
    try {
        const CanonicalMap built = build_ept_from_lift(ke, rel);
        exact("ept_from_operator", "the A-block construction yields Q_{1,2} = (T +- S)/2",
              (*built.coordinates[0].value - q1) + (*built.coordinates[1].value - q2) * lam);
    } catch (const Error& e) {
        report.add(bool_check("ept_from_operator", "the A-block construction yields Q_{1,2} = (T +- S)/2", false, e.what()));
    }

    // Discriminant factorization under g2 = g^2.
    const std::size_t g2_index = ctx->index("g2");
    const auto g2v = bound_value(bindings, g2_index);
    std::optional<Scalar> g_value;
    if (!g2v) {
        g_value = parse(ctx, "g");
    } else if (const auto r = rational_sqrt(*g2v)) {
        g_value = Scalar::constant(ctx, *r);
    }
    const std::string disc_identity = "T^2 - 4P = [g^2 q1^2 + (g k1 q2 + k2)^2][g^2 q1^2 + (g k1 q2 - k2)^2]";
    const std::string focal_identity = "S vanishes at (0, +-k2/(g k1))";
    if (g_value) {
        std::vector<Scalar> table = identity_substitution(ctx);
        if (!g2v) table[g2_index] = *g_value * *g_value;
        auto to_g = [&table](const Scalar& x) { return substitute(x, table); };
        const Scalar g = *g_value;
        const Scalar k1 = p("k1");
        const Scalar k2 = p("k2");
        const Scalar qq1 = parse(ctx, "q1");
        const Scalar qq2 = parse(ctx, "q2");
        const Scalar plus = g * g * qq1 * qq1 + (g * k1 * qq2 + k2) * (g * k1 * qq2 + k2);
        const Scalar minus = g * g * qq1 * qq1 + (g * k1 * qq2 - k2) * (g * k1 * qq2 - k2);
        const Scalar disc = to_g(t * t - pp * Rational(4));
        exact("discriminant_factored", disc_identity, disc - plus * minus);
        if (!(g.is_zero() || k1.is_zero())) {
            Scalar focal_sum(ctx);
            for (int sign : {1, -1}) {
                std::vector<Scalar> at = identity_substitution(ctx);
                at[ctx->index("q1")] = Scalar(ctx);
                at[ctx->index("q2")] = k2 / (g * k1) * Rational(sign);
                focal_sum = focal_sum * lam + substitute(disc, at);
            }
            exact("focal_points", focal_identity, focal_sum);
        } else {
            report.add(recorded("focal_points", focal_identity, "degenerate parameters; no isolated focal points"));
        }
    } else {
        report.add(recorded("discriminant_factored", disc_identity, "gamma2 is not a rational square"));
        report.add(recorded("focal_points", focal_identity, "focal points are not real for this gamma2"));
    }

    // Level sets and their gnomonic origin.
    const Scalar level = p("g2*q1^2") / (q1 - p("k2^2")) + p("g2*k1^2*q2^2") / q1 - Scalar::constant(ctx, Rational(1));
    exact("level_set", "g2 q1^2/(lt1 - k2^2) + g2 k1^2 q2^2/lt1 = 1", level);
    {
        const Context ext = ctx->extend({"xi1", "xi2", "xi3"});
        const Scalar xi1 = parse(ext, "xi1");
        const Scalar xi2 = parse(ext, "xi2");
        const Scalar xi3 = parse(ext, "xi3");
        const Scalar lt = q1.embed(ext);
        const Scalar g2e = p("g2").embed(ext);
        const Scalar big_a = (lt - p("k2^2").embed(ext)) / g2e;
        const Scalar big_b = lt / g2e;
        const Scalar conic = xi1 * xi1 / big_a + p("k1^2").embed(ext) * xi2 * xi2 / big_b - xi3 * xi3;
        std::vector<Scalar> table = identity_substitution(ext);
        table[ext->index("xi1")] = parse(ext, "q1*xi3");
        table[ext->index("xi2")] = parse(ext, "q2*xi3");
        const Scalar projected = substitute(conic, table) / (xi3 * xi3);
        const Scalar residual = reduce(projected - level.embed(ext), rel);
        report.add(exact_check("gnomonic", "xi_i = q_i xi3 maps the spherical conic to the level set",
                               is_zero(residual, rel), residual_head(residual)));
    }

    // Stäckel form in mixed coordinates.
    {
        const StaeckelEllipticData data = staeckel_elliptic(ctx);
        auto at = [&](const Scalar& f, const char* var) {
            std::vector<Scalar> table = identity_substitution(ctx);
            table[ctx->index("lam")] = parse(ctx, var);
            return sp(substitute(f, table));
        };
        const Scalar claimed = (at(data.h, "Q1") * p("P1^2") - at(data.h, "Q2") * p("P2^2") + at(data.g, "Q1") * p("P1") -
                                at(data.g, "Q2") * p("P2")) /
                               p("Q1 - Q2");
        report.add(pullback_check(map, sp(hamiltonian(ctx, 2)), claimed, "staeckel",
                                  "H_(2) = [h(Q1) P1^2 - h(Q2) P2^2 + g(Q1) P1 - g(Q2) P2]/(Q1 - Q2)"));
    }
    return report;
}

std::vector<SeparatedForm> separated_forms(int max_degree) {
    const Context& ctx = standard_context();
    auto p = [&ctx](std::string_view text) { return parse(ctx, text); };
    const Integrals in = integrals(ctx);
    const Scalar h2 = hamiltonian(ctx, 2);
    std::vector<SeparatedForm> out;
    // Polar: Q2 = r, P2 = p_r and P1 = p_phi.
    const Scalar r_p = p("sqrt(q1^2 + q2^2)*P2");
    for (int n = 1; n <= max_degree; ++n) {
        Scalar claimed = p("P2^2 + P1^2/(q1^2 + q2^2)");
        Scalar power = r_p;
        for (int k = 1; k <= n; ++k) {
            claimed = claimed + gamma_symbol(ctx, k) * power;
            power = power * r_p;
        }
        out.push_back({"polar_N" + std::to_string(n), "polar", hamiltonian(ctx, n), claimed,
                       "H_(N) = P_r^2 + P_phi^2/r^2 + sum gamma_n (r P_r)^n"});
    }
    out.push_back({"cartesian_I2.H", "cartesian_I2", h2,
                   p("P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2 + (P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2)/(1 + g2*Q1^2)"),
                   "H_(2) = P1^2 + g1 Q1 P1 + g2 (Q1 P1)^2 + [P2^2 + g1 Q2 P2 + g2 (Q2 P2)^2]/(1 + g2 Q1^2)"});
    out.push_back({"cartesian_I2.I2", "cartesian_I2", in.I2, p("P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2"),
                   "I2 = P2^2 + g1 Q2 P2 + g2 (Q2 P2)^2"});
    out.push_back({"cartesian_I1.H", "cartesian_I1", h2,
                   p("(P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2)/(1 + g2*Q2^2) + P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2"),
                   "H_(2) = [P1^2 + g1 Q1 P1 + g2 (Q1 P1)^2]/(1 + g2 Q2^2) + P2^2 + g1 Q2 P2 + g2 (Q2 P2)^2"});
    out.push_back({"cartesian_I1.I1", "cartesian_I1", in.I1, p("P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2"),
                   "I1 = P1^2 + g1 Q1 P1 + g2 (Q1 P1)^2"});
    {
        const StaeckelEllipticData data = staeckel_elliptic(ctx);
        auto at = [&](const Scalar& f, const char* v) {
            std::vector<Scalar> table = identity_substitution(ctx);
            table[ctx->index("lam")] = p(v);
            return substitute(f, table);
        };
        const Scalar claimed = (at(data.h, "Q1") * p("P1^2") - at(data.h, "Q2") * p("P2^2") + at(data.g, "Q1") * p("P1") -
                                at(data.g, "Q2") * p("P2")) /
                               p("Q1 - Q2");
        out.push_back({"elliptic.H", "elliptic", h2, claimed,
                       "H_(2) = [h(Q1) P1^2 - h(Q2) P2^2 + g(Q1) P1 - g(Q2) P2]/(Q1 - Q2)"});
    }
    return out;
}

std::vector<SeparatedPair> separated_pairs() {
    const Context& ctx = standard_context();
    auto p = [&ctx](std::string_view text) { return parse(ctx, text); };
    return {
        {"polar", {p("P2^2 + P1^2/Q2^2 + g1*Q2*P2 + g2*(Q2*P2)^2"), p("P1^2")}},
        {"cartesian_I2",
         {p("P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2 + (P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2)/(1 + g2*Q1^2)"),
          p("P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2")}},
        {"cartesian_I1",
         {p("(P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2)/(1 + g2*Q2^2) + P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2"),
          p("P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2")}},
    };
}

VerificationReport separated_suite(int max_degree) {
    VerificationReport report;
    report.suite = "separated";
    std::vector<CanonicalMap> maps;
    auto map_for = [&maps](const std::string& name) -> const CanonicalMap& {
        for (const auto& m : maps) {
            if (m.name == name) return m;
        }
        maps.push_back(canonical_map(name));
        return maps.back();
    };
    for (const auto& form : separated_forms(max_degree)) {
        report.add(pullback_check(map_for(form.map), form.function, form.claimed, form.name, form.identity));
    }
    for (const auto& pair : separated_pairs()) {
        report.merge(separation_operators_from_separated(pair.functions, 0).report, "operators." + pair.name);
    }
    return report;
}

Scalar i1_in_i2_coordinates() {
    const Context& ctx = standard_context();
    const CanonicalMap map = canonical_map("cartesian_I2");
    const Scalar mixed = pull_to_mixed(map, integrals(ctx).I1);
    // Inverse positions q1 = Q1, q2 = Q2 sqrt(1 + g2 Q1^2).
    std::vector<Scalar> table = identity_substitution(ctx);
    table[ctx->index("q1")] = parse(ctx, "Q1");
    table[ctx->index("q2")] = parse(ctx, "Q2*sqrt(1 + g2*Q1^2)");
    return substitute(mixed, table);
}

} // namespace haantjes
