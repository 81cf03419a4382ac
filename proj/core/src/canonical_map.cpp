#include "haantjes/canonical_map.hpp"

#include <algorithm>
#include <map>

#include "haantjes/expression.hpp"
#include "haantjes/linear_solver.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

namespace {

Scalar parse(const Context& ctx, std::string_view text) { return parse_expression(text, ctx); }

constexpr std::array<const char*, 4> kNewLabels{"Q1", "Q2", "P1", "P2"};

// EPT from two position functions: P = J^{-T} p.
CanonicalMap ept_from_positions(std::string name, const Scalar& q1, const Scalar& q2, const Chart& chart,
                                const Relations& relations) {
    const Context& ctx = q1.context();
    const Scalar j00 = q1.derivative(chart.q[0]);
    const Scalar j01 = q1.derivative(chart.q[1]);
    const Scalar j10 = q2.derivative(chart.q[0]);
    const Scalar j11 = q2.derivative(chart.q[1]);
    const Scalar det = reduce(j00 * j11 - j01 * j10, relations);
    if (det.is_zero()) throw Error("position Jacobian is singular everywhere");
    const Scalar p1 = Scalar::variable(ctx, ctx->name(chart.p[0]));
    const Scalar p2 = Scalar::variable(ctx, ctx->name(chart.p[1]));
    const Scalar inv = det.inverse();
    const Scalar mom1 = reduce((j11 * p1 - j10 * p2) * inv, relations);
    const Scalar mom2 = reduce((j00 * p2 - j01 * p1) * inv, relations);

    CanonicalMap map{std::move(name), chart,
                     {make_coordinate("Q1", reduce(q1, relations), chart),
                      make_coordinate("Q2", reduce(q2, relations), chart), make_coordinate("P1", mom1, chart),
                      make_coordinate("P2", mom2, chart)},
                     true, {det}, relations, "momenta from the inverse-transpose Jacobian"};
    return map;
}

bool position_only(const Scalar& s, const Chart& chart) {
    return !s.depends_on(chart.p[0]) && !s.depends_on(chart.p[1]);
}

OneForm specialize_form(const OneForm& a, const Bindings& bindings) {
    OneForm out = a;
    for (auto& c : out) c = specialize(c, bindings);
    return out;
}

// Max-exponent union of the denominator factors of the given parts.
void collect_factors(std::vector<Factor>& acc, const RationalFunction& f) {
    for (const auto& factor : f.denominator()) {
        auto it = std::find_if(acc.begin(), acc.end(), [&](const Factor& g) { return g.base == factor.base; });
        if (it == acc.end()) {
            acc.push_back(factor);
        } else {
            it->exponent = std::max(it->exponent, factor.exponent);
        }
    }
}

std::vector<Monomial> monomials_up_to(std::span<const std::size_t> vars, int degree) {
    std::vector<Monomial> out{Monomial{}};
    for (int d = 1; d <= degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : out) {
            if (m.degree != d - 1) continue;
            for (std::size_t v : vars) {
                const Monomial c = m * Monomial::variable(v);
                if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return graded_lex(a, b) < 0; });
    return out;
}

} // namespace

Coordinate make_coordinate(std::string label, const Scalar& value, const Chart& chart) {
    return Coordinate{std::move(label), value, differential(value, chart)};
}

Coordinate make_coordinate(std::string label, const OneForm& gradient) {
    return Coordinate{std::move(label), std::nullopt, gradient};
}

std::vector<std::string> canonical_map_names() {
    return {"polar", "polar_rational", "cartesian_I2", "cartesian_I1", "elliptic", "oscillator_N1"};
}

CanonicalMap canonical_map(std::string_view name, const Bindings& bindings) {
    const Context& ctx = standard_context();
    const Chart chart = Chart::standard(ctx);
    CanonicalMap map{std::string(name), chart, {make_coordinate("", Scalar(ctx), chart), make_coordinate("", Scalar(ctx), chart),
                                                make_coordinate("", Scalar(ctx), chart), make_coordinate("", Scalar(ctx), chart)},
                     true, {}, {}, {}};
    if (name == "polar") {
        const Polynomial s = require_rational(parse(ctx, "q1^2 + q2^2")).numerator();
        const Scalar r = Scalar::sqrt_of(s);
        const Scalar inv_s = parse(ctx, "1/(q1^2 + q2^2)");
        map.coordinates[0] = make_coordinate("phi", OneForm{parse(ctx, "-q2") * inv_s, parse(ctx, "q1") * inv_s,
                                                            Scalar(ctx), Scalar(ctx)});
        map.coordinates[1] = make_coordinate("r", r, chart);
        map.coordinates[2] = make_coordinate("p_phi", parse(ctx, "q1*p2 - q2*p1"), chart);
        map.coordinates[3] = make_coordinate("p_r", parse(ctx, "q1*p1 + q2*p2") / r, chart);
        map.singular_locus = {parse(ctx, "q1^2 + q2^2")};
        map.note = "the angle is carried by its differential; its rational representative is q2/q1";
    } else if (name == "polar_rational") {
        map.coordinates[0] = make_coordinate("u", parse(ctx, "q2/q1"), chart);
        map.coordinates[1] = make_coordinate("s", parse(ctx, "q1^2 + q2^2"), chart);
        map.coordinates[2] = make_coordinate("P_u", parse(ctx, "(q1*p2 - q2*p1)*q1^2/(q1^2 + q2^2)"), chart);
        map.coordinates[3] = make_coordinate("P_s", parse(ctx, "(q1*p1 + q2*p2)/(2*(q1^2 + q2^2))"), chart);
        map.singular_locus = {parse(ctx, "q1"), parse(ctx, "q1^2 + q2^2")};
        map.note = "u = tan(phi), s = r^2 with momenta p_phi/(1 + u^2) and p_r/(2 r)";
    } else if (name == "cartesian_I2") {
        map = ept_from_positions("cartesian_I2", parse(ctx, "q1"), parse(ctx, "q2/sqrt(1 + g2*q1^2)"), chart, {});
        map.singular_locus = {parse(ctx, "1 + g2*q1^2")};
    } else if (name == "cartesian_I1") {
        map = ept_from_positions("cartesian_I1", parse(ctx, "q1/sqrt(1 + g2*q2^2)"), parse(ctx, "q2"), chart, {});
        map.singular_locus = {parse(ctx, "1 + g2*q2^2")};
    } else if (name == "elliptic") {
        const Relations rel = unit_circle_relation(ctx);
        const Scalar t = parse(ctx, "g2*(q1^2 + k1^2*q2^2) + k2^2");
        const Scalar p = parse(ctx, "g2*k1^2*k2^2*q2^2");
        const Polynomial disc = reduce(require_rational(t * t - p * Rational(4)), rel).numerator();
        const Scalar s = Scalar::sqrt_of(disc);
        map = ept_from_positions("elliptic", (t + s) * Rational(1, 2), (t - s) * Rational(1, 2), chart, rel);
        map.singular_locus.push_back(Scalar(disc));
        map.note = "Q1 carries +sqrt(T^2 - 4P), so Q1 > Q2 off the focal locus";
    } else if (name == "oscillator_N1") {
        // Old coordinates as functions of the oscillator chart.
        const Chart osc = Chart::oscillator(ctx);
        const std::vector<Scalar> table = oscillator_substitution(ctx);
        map.chart = osc;
        for (std::size_t c = 0; c < 4; ++c) {
            map.coordinates[c] = make_coordinate(ctx->name(chart.variable(c)), table[chart.variable(c)], osc);
        }
        map.note = "q = sqrt(2) qb, p = (pb - g1 qb)/sqrt(2), i.e. g1 = -i b";
    } else {
        throw Error("unknown canonical map '" + std::string(name) + "'");
    }
    if (!bindings.empty()) {
        for (auto& c : map.coordinates) {
            if (c.value) c.value = specialize(*c.value, bindings);
            c.gradient = specialize_form(c.gradient, bindings);
        }
        for (auto& f : map.singular_locus) f = specialize(f, bindings);
    }
    return map;
}

VerificationReport verify_canonical(const CanonicalMap& map) {
    VerificationReport report;
    report.suite = "canonical:" + map.name;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            const Scalar bracket = poisson_pairing(map.coordinates[i].gradient, map.coordinates[j].gradient);
            const bool unit = i < 2 && j == i + 2;
            const Scalar residual = unit ? bracket - Scalar::constant(bracket.context(), Rational(1)) : bracket;
            const std::string id = "{" + map.coordinates[i].label + "," + map.coordinates[j].label + "}";
            const bool zero = is_zero(residual, map.relations);
            report.add(exact_check(id, id + (unit ? " = 1" : " = 0"), zero,
                                   zero ? "0" : residual_head(reduce(residual, map.relations))));
        }
    }
    return report;
}

std::array<std::array<Scalar, 2>, 2> position_jacobian(const CanonicalMap& map) {
    if (!map.is_ept) throw Error("map '" + map.name + "' is not an extended point transformation");
    const auto& g0 = map.coordinates[0].gradient;
    const auto& g1 = map.coordinates[1].gradient;
    return {{{g0[0], g0[1]}, {g1[0], g1[1]}}};
}

Scalar pull_to_mixed(const CanonicalMap& map, const Scalar& f) {
    const auto j = position_jacobian(map);
    const Context& ctx = f.context();
    const Chart sep = Chart::separated(ctx);
    const Scalar big_p1 = Scalar::variable(ctx, ctx->name(sep.p[0]));
    const Scalar big_p2 = Scalar::variable(ctx, ctx->name(sep.p[1]));
    std::vector<Scalar> table = identity_substitution(ctx);
    for (std::size_t k = 0; k < 2; ++k) table[map.chart.p[k]] = j[0][k] * big_p1 + j[1][k] * big_p2;
    return substitute(f, table);
}

Scalar realize_positions(const CanonicalMap& map, const Scalar& claimed) {
    const Context& ctx = claimed.context();
    const Chart sep = Chart::separated(ctx);
    std::vector<Scalar> table = identity_substitution(ctx);
    for (std::size_t i = 0; i < 2; ++i) {
        if (!claimed.depends_on(sep.q[i])) continue;
        if (!map.coordinates[i].value) {
            throw Error("coordinate " + map.coordinates[i].label + " has no algebraic value");
        }
        table[sep.q[i]] = *map.coordinates[i].value;
    }
    return substitute(claimed, table);
}

CheckResult pullback_check(const CanonicalMap& map, const Scalar& f, const Scalar& claimed, std::string id,
                           std::string identity) {
    const Scalar residual = reduce(pull_to_mixed(map, f) - realize_positions(map, claimed), map.relations);
    return exact_check(std::move(id), std::move(identity), is_zero(residual, map.relations), residual_head(residual));
}

std::array<Scalar, 2> a_block_left_eigenvector(const Tensor11& k, const Scalar& lambda, const Relations& relations) {
    const Block2 a = block(k, 0, 0);
    std::array<Scalar, 2> sigma{reduce(a(1, 0), relations), reduce(lambda - a(0, 0), relations)};
    if (is_zero(sigma[0], relations) && is_zero(sigma[1], relations)) {
        sigma = {reduce(lambda - a(1, 1), relations), reduce(a(0, 1), relations)};
    }
    if (is_zero(sigma[0], relations) && is_zero(sigma[1], relations)) {
        throw Error("A-block is a multiple of the identity; no distinguished eigenvector");
    }
    return sigma;
}

std::vector<Scalar> default_coordinate_candidates(const Tensor11& k, const Relations& relations) {
    const Context& ctx = k.context();
    std::vector<Scalar> out{parse(ctx, "q1"),
                            parse(ctx, "q2"),
                            parse(ctx, "q2/q1"),
                            parse(ctx, "q1^2 + q2^2"),
                            parse(ctx, "q2/sqrt(1 + g2*q1^2)"),
                            parse(ctx, "q1/sqrt(1 + g2*q2^2)")};
    // Eigenvalues of the Nijenhuis generator K - tr(K)/2.
    const Tensor11 gen = nijenhuis_generator(k);
    try {
        for (const auto& e : eigen_data(gen, relations)) out.push_back(e.value);
    } catch (const Error&) {
        // No quadratic spectrum: the fixed candidates remain.
    }
    return out;
}

CanonicalMap build_ept_from_lift(const Tensor11& k, const Relations& relations, std::span<const Scalar> candidates) {
    if (!is_lift_form(k, relations)) throw Error("operator is not of lift form (B != 0)");
    const Chart chart = Chart::standard(k.context());
    const std::vector<Eigenvalue> eig = eigen_data(k, relations);
    if (eig.size() != 2) throw Error("eigenvalues coincide identically; no chart");
    std::vector<Scalar> fallback;
    if (candidates.empty()) {
        fallback = default_coordinate_candidates(k, relations);
        candidates = fallback;
    }
    std::vector<Scalar> chosen;
    for (const auto& e : eig) {
        const auto sigma = a_block_left_eigenvector(k, e.value, relations);
        std::optional<Scalar> pick;
        for (const auto& c : candidates) {
            if (!position_only(c, chart)) continue;
            const Scalar d0 = c.derivative(chart.q[0]);
            const Scalar d1 = c.derivative(chart.q[1]);
            if (is_zero(d0, relations) && is_zero(d1, relations)) continue;
            try {
                if (is_zero(sigma[0] * d1 - sigma[1] * d0, relations)) {
                    pick = c;
                    break;
                }
            } catch (const DiscriminantMismatch&) {
                continue;
            }
        }
        if (!pick) throw Error("no candidate coordinate for eigenvalue " + e.value.to_string());
        chosen.push_back(*pick);
    }
    return ept_from_positions("ept", chosen[0], chosen[1], chart, relations);
}

CheckResult exactness_check(const OneForm& alpha, const Chart& chart, std::string id, std::string identity,
                            const Relations& relations) {
    TwoForm d = exterior_derivative(alpha, chart);
    for (auto& c : d) c = reduce(c, relations);
    return exact_check(std::move(id), std::move(identity), is_zero(d, relations), residual_head(d));
}

ConjugateMomentum stepB_conjugate_momentum(const OneForm& dx, const OneForm& tau, const Chart& chart,
                                           const MomentumAnsatz& ansatz, const Relations& relations) {
    const Context& ctx = dx[0].context();
    const Scalar pairing = reduce(poisson_pairing(dx, tau), relations);
    if (pairing.is_zero()) throw Error("tau is not conjugate to dx");
    ConjugateMomentum out{reduce(pairing.inverse(), relations), Scalar(ctx), zero_form(ctx), false, std::nullopt, {}};
    const OneForm rtau = out.r * tau;

    // h = N / den with den the square of the common denominator of r tau.
    std::vector<Factor> den;
    for (const auto& c : rtau) {
        collect_factors(den, c.rational_part());
        collect_factors(den, c.radical_part());
    }
    for (auto& f : den) f.exponent *= 2;
    const std::vector<std::size_t> qs{chart.q[0], chart.q[1]};
    std::vector<Monomial> numerators;
    for (const auto& mq : monomials_up_to(qs, ansatz.position_degree)) {
        for (const auto& mp : monomials_up_to(ansatz.parameters, ansatz.parameter_degree)) {
            for (std::size_t k = 0; k < 2; ++k) numerators.push_back(mq * mp * Monomial::variable(chart.p[k]));
        }
    }
    std::vector<Scalar> basis;
    basis.reserve(numerators.size());
    for (const auto& m : numerators) {
        basis.emplace_back(RationalFunction::from_parts(Polynomial::from_terms(ctx, {Term{m, Rational(1)}}), den));
    }

    const TwoForm d0 = exterior_derivative(rtau, chart);
    std::vector<TwoForm> dm;
    dm.reserve(basis.size());
    for (const auto& b : basis) dm.push_back(exterior_derivative(b * dx, chart));

    LinearSystem system(basis.size());
    for (std::size_t comp = 0; comp < 6; ++comp) {
        for (int part = 0; part < 2; ++part) {
            auto pick = [part, &relations](const Scalar& s) {
                return reduce(part == 0 ? s.rational_part() : s.radical_part(), relations);
            };
            std::vector<RationalFunction> parts{pick(d0[comp])};
            for (const auto& t : dm) parts.push_back(pick(t[comp]));
            const std::vector<Polynomial> nums = clear_denominators(parts);
            std::map<std::string, std::pair<std::map<std::size_t, Rational>, Rational>> rows;
            for (const auto& term : nums[0].terms()) {
                rows[Polynomial::from_terms(ctx, {Term{term.monomial, Rational(1)}}).to_string()].second -= term.coefficient;
            }
            for (std::size_t m = 0; m < basis.size(); ++m) {
                for (const auto& term : nums[m + 1].terms()) {
                    rows[Polynomial::from_terms(ctx, {Term{term.monomial, Rational(1)}}).to_string()].first[m] +=
                        term.coefficient;
                }
            }
            for (auto& [key, row] : rows) system.add_equation(std::move(row.first), std::move(row.second));
        }
    }
    const LinearSolution solution = solve(system);
    if (!solution.consistent) {
        out.beta = rtau;
        out.note = "no h in the ansatz closes beta";
        return out;
    }
    Scalar h(ctx);
    for (std::size_t m = 0; m < basis.size(); ++m) {
        if (solution.particular[m] != 0) h += basis[m] * solution.particular[m];
    }
    out.h = reduce(h, relations);
    out.beta = out.h * dx + rtau;
    for (auto& c : out.beta) c = reduce(c, relations);
    TwoForm closure = exterior_derivative(out.beta, chart);
    out.closed = is_zero(closure, relations);

    // Momentum-linear potential: y = sum_j p_j beta_{p_j} by Euler's identity.
    Scalar y(ctx);
    for (std::size_t k = 0; k < 2; ++k) y += Scalar::variable(ctx, ctx->name(chart.p[k])) * out.beta[2 + k];
    y = reduce(y, relations);
    if (is_zero(differential(y, chart) - out.beta, relations)) {
        out.potential = y;
    } else {
        out.note = "potential is not momentum-linear";
    }
    return out;
}

} // namespace haantjes
