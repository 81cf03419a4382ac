#include "haantjes/zernike_models.hpp"

#include <algorithm>

#include "haantjes/expression.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes {

namespace {

Scalar parse(const Context& ctx, std::string_view text) { return parse_expression(text, ctx); }

Tensor11 rows(const Context& ctx, const std::array<std::array<std::string_view, 4>, 4>& text) {
    std::array<std::array<Scalar, 4>, 4> m{{{Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)}}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = parse(ctx, text[i][j]);
    }
    return Tensor11::from_rows(m);
}

Tensor11 k_j2(const Context& ctx) {
    return rows(ctx, {{{"q2^2", "-q1*q2", "0", "0"},
                       {"-q1*q2", "q1^2", "0", "0"},
                       {"0", "-(q1*p2 - q2*p1)", "q2^2", "-q1*q2"},
                       {"q1*p2 - q2*p1", "0", "-q1*q2", "q1^2"}}});
}

Tensor11 k_i2(const Context& ctx) {
    return rows(ctx, {{{"0", "0", "0", "0"},
                       {"-g2*q1*q2", "1 + g2*q1^2", "0", "0"},
                       {"0", "-g2*q1*p2", "0", "-g2*q1*q2"},
                       {"g2*q1*p2", "0", "0", "1 + g2*q1^2"}}});
}

Tensor11 k_i1(const Context& ctx) {
    return rows(ctx, {{{"1 + g2*q2^2", "-g2*q1*q2", "0", "0"},
                       {"0", "0", "0", "0"},
                       {"0", "g2*q2*p1", "1 + g2*q2^2", "0"},
                       {"-g2*q2*p1", "0", "-g2*q1*q2", "0"}}});
}

Tensor11 k_e(const Context& ctx) {
    return parse(ctx, "-g2*k1^2") * k_j2(ctx) - parse(ctx, "k2^2") * k_i2(ctx);
}

Tensor11 n_i2(const Context& ctx) {
    return rows(ctx, {{{"-(1 + g2*q1^2)", "0", "0", "0"},
                       {"-g2*q1*q2", "0", "0", "0"},
                       {"0", "-g2*q1*p2", "-(1 + g2*q1^2)", "-g2*q1*q2"},
                       {"g2*q1*p2", "0", "0", "0"}}});
}

Tensor11 n_i1(const Context& ctx) {
    return rows(ctx, {{{"0", "-g2*q1*q2", "0", "0"},
                       {"0", "-(1 + g2*q2^2)", "0", "0"},
                       {"0", "g2*q2*p1", "0", "0"},
                       {"-g2*q2*p1", "0", "-g2*q1*q2", "-(1 + g2*q2^2)"}}});
}

} // namespace

Scalar gamma_symbol(const Context& ctx, int n) {
    if (n < 1 || n > kMaxFamilyDegree) throw Error("gamma_" + std::to_string(n) + " is outside g1..g5");
    return Scalar::variable(ctx, "g" + std::to_string(n));
}

Scalar hamiltonian(std::span<const Scalar> gamma) {
    if (gamma.empty()) throw Error("the family needs N >= 1");
    const Context& ctx = gamma.front().context();
    const Scalar s = parse(ctx, "q1*p1 + q2*p2");
    Scalar h = parse(ctx, "p1^2 + p2^2");
    Scalar power = s;
    for (const auto& g : gamma) {
        if (!g.is_zero()) h += g * power;
        power = power * s;
    }
    return h;
}

Scalar hamiltonian(const Context& ctx, int degree) {
    if (degree < 1) throw Error("the family needs N >= 1");
    std::vector<Scalar> gamma;
    for (int n = 1; n <= degree; ++n) gamma.push_back(gamma_symbol(ctx, n));
    return hamiltonian(gamma);
}

Integrals integrals(const Context& ctx) {
    return Integrals{parse(ctx, "q1*p2 - q2*p1"), parse(ctx, "(1 + g2*(q1^2 + q2^2))*p1^2 + g1*q1*p1"),
                     parse(ctx, "(1 + g2*(q1^2 + q2^2))*p2^2 + g1*q2*p2")};
}

Scalar elliptic_integral(const Context& ctx) {
    const Integrals in = integrals(ctx);
    return parse(ctx, "-g2*k1^2") * in.J * in.J - parse(ctx, "k2^2") * in.I2;
}

std::vector<std::string> catalog_names() {
    return {"K_J2", "K_I2", "K_I1", "K_e", "N_I2", "N_I1", "N_e", "identity"};
}

CatalogEntry catalog(std::string_view name, const Bindings& bindings, bool validate) {
    const Context& ctx = standard_context();
    const Scalar h2 = hamiltonian(ctx, 2);
    const Integrals in = integrals(ctx);
    CatalogEntry entry{std::string(name), Tensor11(ctx), h2, std::nullopt, {}, false, {}};
    if (name == "K_J2") {
        entry.tensor = k_j2(ctx);
        entry.integral = in.J * in.J;
        entry.note = "chain target J^2; independent of every gamma_n";
    } else if (name == "K_I2") {
        entry.tensor = k_i2(ctx);
        entry.integral = in.I2;
    } else if (name == "K_I1") {
        entry.tensor = k_i1(ctx);
        entry.integral = in.I1;
    } else if (name == "K_e") {
        entry.tensor = k_e(ctx);
        entry.integral = elliptic_integral(ctx);
        entry.relations = unit_circle_relation(ctx);
        entry.note = "k1^2 + k2^2 = 1 applied as k2^2 -> 1 - k1^2";
    } else if (name == "N_I2") {
        entry.tensor = n_i2(ctx);
        entry.nijenhuis = true;
    } else if (name == "N_I1") {
        entry.tensor = n_i1(ctx);
        entry.nijenhuis = true;
    } else if (name == "N_e") {
        entry.tensor = nijenhuis_generator(k_e(ctx));
        entry.relations = unit_circle_relation(ctx);
        entry.nijenhuis = true;
    } else if (name == "identity") {
        entry.tensor = Tensor11::identity(ctx);
        entry.integral = h2;
    } else {
        throw Error("unknown catalog entry '" + std::string(name) + "'");
    }
    if (!bindings.empty()) {
        entry.tensor = specialize(entry.tensor, bindings);
        entry.hamiltonian = specialize(entry.hamiltonian, bindings);
        if (entry.integral) entry.integral = specialize(*entry.integral, bindings);
    }
    if (validate) {
        const VerificationReport report = validate_entry(entry);
        for (const auto& check : report.checks) {
            if (check.status == CheckStatus::fail) {
                throw Error("catalog entry " + entry.name + " fails " + check.id + ": " + check.residual);
            }
        }
    }
    return entry;
}

VerificationReport validate_entry(const CatalogEntry& entry) {
    const Chart chart = Chart::standard(entry.tensor.context());
    VerificationReport report;
    report.suite = "catalog:" + entry.name;
    report.merge(check_symplectic_compatibility(entry.tensor, entry.relations), "compatibility");
    if (entry.nijenhuis) {
        const Torsion3 t = nijenhuis_torsion(entry.tensor, chart);
        report.add(exact_check("nijenhuis_torsion", "T_L = 0", is_zero(t, entry.relations), residual_head(t)));
    } else {
        const Torsion3 t = haantjes_torsion(entry.tensor, chart);
        report.add(exact_check("haantjes_torsion", "H_K = 0", is_zero(t, entry.relations), residual_head(t)));
    }
    if (entry.integral) {
        const OneForm r = chain_residual(entry.tensor, entry.hamiltonian, *entry.integral, chart);
        report.add(exact_check("chain", "K^T dH - dI = 0", is_zero(r, entry.relations), residual_head(r)));
    }
    try {
        const auto eig = eigen_data(entry.tensor, entry.relations);
        report.merge(semisimplicity_check(entry.tensor, eig, entry.relations));
    } catch (const Error& e) {
        report.add(bool_check("minimal_polynomial", "product of (K - lambda_i I) over distinct eigenvalues = 0",
                              false, e.what()));
    }
    return report;
}

std::vector<Scalar> oscillator_substitution(const Context& ctx) {
    std::vector<Scalar> table = identity_substitution(ctx);
    const Polynomial two = Polynomial::constant(ctx, 2);
    const RationalFunction zero(ctx);
    for (int i = 1; i <= 2; ++i) {
        const std::string n = std::to_string(i);
        const RationalFunction qb = RationalFunction::variable(ctx, "qb" + n);
        const RationalFunction pb = RationalFunction::variable(ctx, "pb" + n);
        const RationalFunction g1 = RationalFunction::variable(ctx, "g1");
        table[ctx->index("q" + n)] = Scalar(zero, qb, two);
        table[ctx->index("p" + n)] = Scalar(zero, (pb - g1 * qb) * Rational(1, 2), two);
    }
    return table;
}

VerificationReport symmetry_algebra_report(const Bindings& bindings) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    const Chart osc = Chart::oscillator(ctx);
    auto sp = [&bindings](const Scalar& s) { return specialize(s, bindings); };
    auto br = [&chart](const Scalar& a, const Scalar& b) { return poisson_bracket(a, b, chart); };
    const Integrals in = integrals(ctx);
    const Scalar h = sp(hamiltonian(ctx, 2));
    const Scalar g1 = sp(parse(ctx, "g1"));
    const Scalar g2 = sp(parse(ctx, "g2"));
    const Scalar x1 = sp(in.J * Rational(1, 2));
    const Scalar x2 = sp((in.I1 - in.I2) * Rational(1, 2));
    const Scalar x3 = sp(parse(ctx, kX3Expanded));
    const Scalar coupling = g1 * g1 + g2 * h * Rational(2);

    VerificationReport report;
    report.suite = "symmetry-algebra";
    auto exact = [&report](std::string id, std::string identity, const Scalar& residual, const Relations& rel = {}) {
        report.add(exact_check(std::move(id), std::move(identity), is_zero(residual, rel), residual_head(residual)));
    };
    exact("bracket_x1_x2", "{X1, X2} = X3", br(x1, x2) - x3);
    exact("bracket_x3_x1", "{X3, X1} = X2", br(x3, x1) - x2);
    const Scalar x1_cubed = x1 * x1 * x1;
    exact("bracket_x2_x3", "{X2, X3} = -(g1^2 + 2 g2 H) X1 - 8 g2^2 X1^3",
          br(x2, x3) + coupling * x1 + g2 * g2 * x1_cubed * Rational(8));
    const Scalar casimir = x2 * x2 + x3 * x3 - coupling * x1 * x1 - g2 * g2 * x1_cubed * x1 * Rational(4);
    exact("casimir", "X2^2 + X3^2 - (g1^2 + 2 g2 H) X1^2 - 4 g2^2 X1^4 = H^2/4", casimir - h * h * Rational(1, 4));
    {
        // Casimir as a polynomial in formal generators, differentiated and then realized.
        const Context ext = ctx->extend({"X1", "X2", "X3"});
        const std::size_t base = ctx->size();
        const Scalar c1 = parse(ext, "X1");
        const Scalar c2 = parse(ext, "X2");
        const Scalar c3 = parse(ext, "X3");
        std::vector<Scalar> realize = identity_substitution(ctx);
        realize.push_back(x1);
        realize.push_back(x2);
        realize.push_back(x3);
        const Scalar cp = coupling.embed(ext);
        const Scalar formal = c2 * c2 + c3 * c3 - cp * c1 * c1 - g2.embed(ext) * g2.embed(ext) * c1 * c1 * c1 * c1 * Rational(4);
        auto half = [&](std::size_t k) { return substitute(formal.derivative(base + k), realize) * Rational(1, 2); };
        const Scalar lam = parse(ctx, "lam");
        exact("half_gradient", "each bracket equals half the Casimir derivative in the missing generator",
              (br(x1, x2) - half(2)) * lam * lam + (br(x3, x1) - half(1)) * lam + (br(x2, x3) - half(0)));
    }

    // Oscillator branch: g2 = 0 with g1^2 -> -b^2.
    const Relations rel = imaginary_gamma1_relation(ctx);
    const Bindings flat{{ctx->index("g2"), Rational(0)}};
    const std::vector<Scalar> table = oscillator_substitution(ctx);
    auto pull = [&](const Scalar& f) { return reduce(substitute(specialize(f, flat), table), rel); };
    const Scalar hbar = parse(ctx, "(pb1^2 + pb2^2)/2 + b^2*(qb1^2 + qb2^2)/2");
    const Scalar xb1 = parse(ctx, "(qb1*pb2 - qb2*pb1)/2");
    const Scalar xb2 = parse(ctx, "(pb1^2 + b^2*qb1^2 - pb2^2 - b^2*qb2^2)/4");
    const Scalar xb3 = parse(ctx, "(pb1*pb2 + b^2*qb1*qb2)/2");
    const Scalar h1 = hamiltonian(ctx, 1);
    const Scalar map_residual = (pull(h1) - hbar) * parse(ctx, "lam^3") + (pull(in.J * Rational(1, 2)) - xb1) * parse(ctx, "lam^2") +
                                (pull((in.I1 - in.I2) * Rational(1, 2)) - xb2) * parse(ctx, "lam") +
                                (pull(parse(ctx, kX3Expanded)) - xb3);
    exact("oscillator_map", "the oscillator map sends H_(1), X1, X2, X3 to the oscillator forms", map_residual, rel);
    auto obr = [&osc](const Scalar& a, const Scalar& b) { return poisson_bracket(a, b, osc); };
    const Scalar lam = parse(ctx, "lam");
    const Scalar osc_alg = (obr(xb1, xb2) - xb3) * lam * lam + (obr(xb3, xb1) - xb2) * lam +
                           (obr(xb2, xb3) - parse(ctx, "b^2") * xb1);
    exact("oscillator_algebra", "{Xb1, Xb2} = Xb3, {Xb3, Xb1} = Xb2, {Xb2, Xb3} = b^2 Xb1", osc_alg);
    exact("oscillator_casimir", "b^2 Xb1^2 + Xb2^2 + Xb3^2 = Hb^2/4",
          parse(ctx, "b^2") * xb1 * xb1 + xb2 * xb2 + xb3 * xb3 - hbar * hbar * Rational(1, 4));
    return report;
}

} // namespace haantjes
