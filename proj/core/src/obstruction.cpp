#include "haantjes/obstruction.hpp"

#include "haantjes/expression.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

namespace {

struct CandidateSource {
    const char* name;
    const char* q1;
    const char* q2;
};

constexpr CandidateSource kCandidates[] = {
    {"polar", "q2/q1", "q1^2 + q2^2"},
    {"polar_swapped", "q1^2 + q2^2", "q2/q1"},
    {"cartesian_I2", "q1", "q2/sqrt(1 + g2*q1^2)"},
    {"cartesian_I1", "q1/sqrt(1 + g2*q2^2)", "q2"},
    {"identity", "q1", "q2"},
};

// H_(N) with p = J^T P, in mixed coordinates (q, P).
Scalar pulled_hamiltonian(const EptCandidate& cand, std::span<const Scalar> gamma) {
    const Context& ctx = cand.positions[0].context();
    const Scalar h = hamiltonian(gamma);
    std::vector<Scalar> table = identity_substitution(ctx);
    const Scalar big_p1 = var(ctx, "P1");
    const Scalar big_p2 = var(ctx, "P2");
    table[ctx->index("p1")] = cand.jacobian[0][0] * big_p1 + cand.jacobian[1][0] * big_p2;
    table[ctx->index("p2")] = cand.jacobian[0][1] * big_p1 + cand.jacobian[1][1] * big_p2;
    return substitute(h, table);
}

std::vector<Scalar> symbolic_gammas(const Context& ctx, int degree) {
    std::vector<Scalar> gamma;
    for (int n = 1; n <= degree; ++n) gamma.push_back(gamma_symbol(ctx, n));
    return gamma;
}

} // namespace

EptCandidate make_candidate(std::string name, const Scalar& q1_new, const Scalar& q2_new) {
    const Context& ctx = q1_new.context();
    const Chart chart = Chart::standard(ctx);
    const std::array<Scalar, 2> positions{q1_new, q2_new};
    const std::array<Scalar, 2> q{var(ctx, "q1"), var(ctx, "q2")};
    for (const auto& x : positions) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!x.derivative(chart.p[j]).is_zero()) throw Error("candidate position depends on momenta");
        }
    }
    auto row = [&](std::size_t i) {
        return std::array<Scalar, 2>{positions[i].derivative(chart.q[0]), positions[i].derivative(chart.q[1])};
    };
    const std::array<std::array<Scalar, 2>, 2> jac{row(0), row(1)};
    const std::array<Scalar, 2> v{jac[0][0] * q[0] + jac[0][1] * q[1], jac[1][0] * q[0] + jac[1][1] * q[1]};
    EptCandidate c{std::move(name), positions, jac, v};
    const Scalar det = c.jacobian[0][0] * c.jacobian[1][1] - c.jacobian[0][1] * c.jacobian[1][0];
    if (det.is_zero()) throw Error("candidate Jacobian is singular");
    return c;
}

EptCandidate make_candidate(std::string name, std::string_view q1_new, std::string_view q2_new) {
    const Context& ctx = standard_context();
    return make_candidate(std::move(name), parse_expression(q1_new, ctx), parse_expression(q2_new, ctx));
}

std::vector<std::string> candidate_names() {
    std::vector<std::string> out;
    for (const auto& c : kCandidates) out.emplace_back(c.name);
    return out;
}

EptCandidate candidate(std::string_view name) {
    for (const auto& c : kCandidates) {
        if (name == c.name) return make_candidate(c.name, c.q1, c.q2);
    }
    throw Error("unknown candidate '" + std::string(name) + "'");
}

Scalar jacobian_cross(const EptCandidate& cand) {
    return cand.jacobian[0][0] * cand.jacobian[1][0] + cand.jacobian[0][1] * cand.jacobian[1][1];
}

Scalar v_product(const EptCandidate& cand) { return cand.v[0] * cand.v[1]; }

CrossResidual cross_residual(const EptCandidate& cand, std::span<const Scalar> gamma) {
    const Context& ctx = cand.positions[0].context();
    const Scalar vv = v_product(cand);
    CrossResidual out{{jacobian_cross(cand) * Rational(2)}, Scalar(ctx)};
    for (std::size_t n = 2; n <= gamma.size(); ++n) {
        const Scalar c = gamma[n - 1] * vv * Rational(static_cast<long>(n * (n - 1)));
        if (n - 2 < out.coefficients.size()) {
            out.coefficients[n - 2] = out.coefficients[n - 2] + c;
        } else {
            out.coefficients.push_back(c);
        }
    }
    const Scalar t = cand.v[0] * var(ctx, "P1") + cand.v[1] * var(ctx, "P2");
    for (std::size_t k = out.coefficients.size(); k-- > 0;) out.expanded = out.expanded * t + out.coefficients[k];
    return out;
}

CrossResidual cross_residual(const EptCandidate& cand, int degree) {
    if (degree < 1 || degree > kMaxFamilyDegree) throw Error("N must lie in 1.." + std::to_string(kMaxFamilyDegree));
    const std::vector<Scalar> gamma = symbolic_gammas(cand.positions[0].context(), degree);
    return cross_residual(cand, gamma);
}

VerificationReport polar_type_check(const EptCandidate& cand) {
    VerificationReport report;
    report.suite = "polar-type:" + cand.name;
    const bool free1 = cand.v[0].is_zero();
    const bool free2 = cand.v[1].is_zero();
    report.add(bool_check("radial_free", "exactly one of grad Q_a . q vanishes", free1 != free2,
                          "v1 = " + residual_head(cand.v[0], 60) + ", v2 = " + residual_head(cand.v[1], 60)));
    const Scalar cross = jacobian_cross(cand);
    report.add(exact_check("orthogonal", "grad Q1 . grad Q2 = 0", cross.is_zero(), residual_head(cross)));
    if (free1 != free2) {
        report.add(recorded("orientation", "angular coordinate", free1 ? "Q1 is angular" : "swapped: Q2 is angular"));
    }
    return report;
}

VerificationReport obstruction_suite(int max_degree) {
    if (max_degree < 1 || max_degree > kMaxFamilyDegree) {
        throw Error("N must lie in 1.." + std::to_string(kMaxFamilyDegree));
    }
    const Context& ctx = standard_context();
    VerificationReport report;
    report.suite = "obstruction";
    const std::string n_text = std::to_string(max_degree);

    const EptCandidate polar = candidate("polar");
    const EptCandidate swapped = candidate("polar_swapped");
    const EptCandidate cart = candidate("cartesian_I2");
    const EptCandidate ident = candidate("identity");

    // Cross residual against the direct mixed partial of the pulled-back Hamiltonian.
    for (const EptCandidate* c : {&polar, &cart, &ident}) {
        const std::vector<Scalar> gamma = symbolic_gammas(ctx, max_degree);
        const Scalar h = pulled_hamiltonian(*c, gamma);
        const Scalar mixed = h.derivative(ctx->index("P1")).derivative(ctx->index("P2"));
        const Scalar diff = mixed - cross_residual(*c, gamma).expanded;
        report.add(exact_check(c->name + ".cross_formula", "d2H/dP1dP2 = 2(JJ^T)_12 + v1 v2 sum n(n-1) gamma_n t^(n-2), N = " + n_text,
                               diff.is_zero(), residual_head(diff)));
    }

    for (int n = 1; n <= max_degree; ++n) {
        for (const EptCandidate* c : {&polar, &swapped}) {
            const Scalar r = cross_residual(*c, n).expanded;
            report.add(exact_check(c->name + ".cross_N" + std::to_string(n), "polar-type candidates annihilate the cross term",
                                   r.is_zero(), residual_head(r)));
        }
    }

    const Scalar vv_polar = v_product(polar);
    report.add(exact_check("polar.v_product", "v1 v2 = 0 for Q1 = Q1(phi)", vv_polar.is_zero(), residual_head(vv_polar)));
    const Scalar vv_ident = v_product(ident) - parse_expression("q1*q2", ctx);
    report.add(exact_check("identity.v_product", "v1 v2 = q1 q2", vv_ident.is_zero(), residual_head(vv_ident)));
    const Scalar vv_cart = v_product(cart);
    report.add(bool_check("cartesian_I2.v_product", "v1 v2 does not vanish", !vv_cart.is_zero(), residual_head(vv_cart)));

    // N = 2 reduces to one equation, which the Cartesian positions satisfy.
    for (const EptCandidate* c : {&polar, &cart, &ident}) {
        const CrossResidual r = cross_residual(*c, 2);
        const Scalar expected = jacobian_cross(*c) * Rational(2) + gamma_symbol(ctx, 2) * v_product(*c) * Rational(2);
        const bool single = r.coefficients.size() == 1;
        const Scalar diff = r.expanded - expected;
        report.add(exact_check(c->name + ".N2_reduction", "N = 2 gives 2(JJ^T)_12 + 2 gamma2 v1 v2",
                               single && diff.is_zero(), single ? residual_head(diff) : "extra powers of t"));
    }
    const Scalar cart2 = cross_residual(cart, 2).expanded;
    report.add(exact_check("cartesian_I2.cross_N2", "the Cartesian positions separate H_(2)", cart2.is_zero(),
                           residual_head(cart2)));

    // N = 3 witness: the t^1 coefficient is 6 gamma3 v1 v2 and does not vanish.
    {
        const CrossResidual r = cross_residual(cart, 3);
        const Scalar c1 = r.coefficients.size() > 1 ? r.coefficients[1] : Scalar(ctx);
        const Scalar diff = c1 - gamma_symbol(ctx, 3) * vv_cart * Rational(6);
        report.add(exact_check("cartesian_I2.N3_coefficient", "t^1 coefficient = 6 gamma3 v1 v2", diff.is_zero(),
                               residual_head(diff)));
        report.add(bool_check("cartesian_I2.N3_nonzero", "the t^1 coefficient is a nonzero polynomial", !c1.is_zero(),
                              residual_head(c1)));
    }

    // Top coefficient k(k-1) gamma_k v1 v2 for every k >= 3.
    for (int k = 3; k <= max_degree; ++k) {
        for (const EptCandidate* c : {&cart, &ident}) {
            const CrossResidual r = cross_residual(*c, k);
            const Scalar top = r.coefficients.back() - gamma_symbol(ctx, k) * v_product(*c) * Rational(k * (k - 1));
            report.add(exact_check(c->name + ".top_N" + std::to_string(k), "t^(k-2) coefficient = k(k-1) gamma_k v1 v2",
                                   r.coefficients.size() == static_cast<std::size_t>(k - 1) && top.is_zero(),
                                   residual_head(top)));
        }
    }

    const VerificationReport pt_polar = polar_type_check(polar);
    const VerificationReport pt_swapped = polar_type_check(swapped);
    const VerificationReport pt_cart = polar_type_check(cart);
    report.merge(pt_polar, "polar.polar_type");
    report.add(bool_check("polar.polar_type.accepted", "(q2/q1, q1^2+q2^2) is polar-type", pt_polar.passed()));
    report.merge(pt_swapped, "polar_swapped.polar_type");
    const bool swap_flag = !pt_swapped.checks.empty() && pt_swapped.checks.back().note.starts_with("swapped");
    report.add(bool_check("polar_swapped.polar_type.accepted", "swapped order is polar-type with the swap flag",
                          pt_swapped.passed() && swap_flag));
    std::string cart_note;
    for (const auto& c : pt_cart.checks) cart_note += c.id + "=" + to_string(c.status) + " ";
    report.add(bool_check("cartesian_I2.polar_type.rejected", "the Cartesian positions are not polar-type", !pt_cart.passed(),
                          cart_note));
    return report;
}

} // namespace haantjes
