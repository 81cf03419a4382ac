#include "haantjes/numeric_eval.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "haantjes/canonical_map.hpp"
#include "haantjes/errors.hpp"
#include "haantjes/expression.hpp"
#include "haantjes/obstruction.hpp"
#include "haantjes/separation.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

namespace {

// |C| below this counts as a tangent pole.
constexpr double kPoleThreshold = 1e-12;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kSeriesTolerance = 1e-6;
constexpr double kSeriesKappa = 1e-6;
// A nonzeroness witness must stay above this at every sample.
constexpr double kWitnessThreshold = 1e-6;
// Redraw budget per requested sample.
constexpr int kMaxDrawsPerSample = 50;

using Complex = std::complex<double>;

double relative_gap(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

std::string number_text(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

std::string complex_text(Complex z) {
    if (z.imag() == 0.0) return number_text(z.real());
    if (z.real() == 0.0) return number_text(z.imag()) + "i";
    return number_text(z.real()) + (z.imag() < 0 ? "" : "+") + number_text(z.imag()) + "i";
}

// Independent stream per check so that adding checks leaves the others unchanged.
std::mt19937_64 stream(std::uint64_t seed, std::string_view salt) {
    std::uint64_t h = seed;
    for (char c : salt) h = h * 1099511628211ULL ^ static_cast<unsigned char>(c);
    return std::mt19937_64(h);
}

double domain_limit(double kappa) { return kappa > 0 ? std::numbers::pi / (2.0 * std::sqrt(kappa)) : 3.0; }

} // namespace

KappaValues kappa_eval(double kappa, double x) {
    KappaValues v;
    if (kappa > 0) {
        const double s = std::sqrt(kappa);
        v.S = std::sin(s * x) / s;
        v.C = std::cos(s * x);
    } else if (kappa < 0) {
        const double s = std::sqrt(-kappa);
        v.S = std::sinh(s * x) / s;
        v.C = std::cosh(s * x);
    } else {
        v.S = x;
        v.C = 1.0;
    }
    if (std::abs(v.C) > kPoleThreshold) v.T = v.S / v.C;
    return v;
}

VerificationReport geodesic_polar_check(double kappa, Complex gamma1, const NumericOptions& options) {
    const Context& ctx = standard_context();
    const Integrals in = integrals(ctx);
    const Scalar h = hamiltonian(ctx, 2);
    const std::size_t iq1 = ctx->index("q1"), iq2 = ctx->index("q2"), ip1 = ctx->index("p1"), ip2 = ctx->index("p2");
    const std::size_t ig1 = ctx->index("g1"), ig2 = ctx->index("g2");
    const double gamma2 = -kappa;

    const std::string tag = "kappa=" + number_text(kappa) + ",gamma1=" + complex_text(gamma1);
    VerificationReport report;
    report.suite = "geodesic-polar";
    report.parameters = {{"kappa", number_text(kappa)}, {"gamma1", complex_text(gamma1)},
                         {"samples", std::to_string(options.samples)}, {"seed", std::to_string(options.seed)}};

    auto rng = stream(options.seed, tag);
    const double limit = domain_limit(kappa);
    std::uniform_real_distribution<double> rho_dist(0.02 * limit, 0.98 * limit);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> mom_dist(-2.0, 2.0);

    std::array<double, 5> worst{};
    int accepted = 0;
    int draws = 0;
    std::vector<Complex> point(ctx->size(), Complex(0.0));
    point[ig1] = gamma1;
    point[ig2] = gamma2;
    while (accepted < options.samples) {
        if (++draws > kMaxDrawsPerSample * options.samples) throw EvaluationError("geodesic sampling budget exhausted");
        const double rho = rho_dist(rng);
        const double phi = phi_dist(rng);
        const double p_rho = mom_dist(rng);
        const double p_phi = mom_dist(rng);
        const KappaValues k = kappa_eval(kappa, rho);
        if (!k.T || std::abs(*k.T) > kMagnitudeGuard || std::abs(1.0 / k.S) > kMagnitudeGuard) continue;
        const double t = *k.T;
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const Complex shifted = Complex(p_rho) - gamma1 * 0.5 * t;
        point[iq1] = k.S * c;
        point[iq2] = k.S * s;
        point[ip1] = c / k.C * shifted - s / k.S * p_phi;
        point[ip2] = s / k.C * shifted + c / k.S * p_phi;
        if (std::abs(point[ip1]) > kMagnitudeGuard || std::abs(point[ip2]) > kMagnitudeGuard) continue;

        const Complex h_val = h.evaluate<Complex>(point);
        const Complex i1_val = in.I1.evaluate<Complex>(point);
        const Complex i2_val = in.I2.evaluate<Complex>(point);
        const Complex j_val = in.J.evaluate<Complex>(point);
        const Complex g1sq = gamma1 * gamma1;
        const Complex h_geo = p_rho * p_rho + p_phi * p_phi / (k.S * k.S) - g1sq * 0.25 * t * t;
        const double a1 = c * p_rho - s / t * p_phi;
        const double a2 = s * p_rho + c / t * p_phi;
        const Complex i1_geo = a1 * a1 - g1sq * 0.25 * t * t * c * c;
        const Complex i2_geo = a2 * a2 - g1sq * 0.25 * t * t * s * s;
        const std::array<double, 5> gaps{relative_gap(h_val, h_geo), relative_gap(i1_val, i1_geo),
                                         relative_gap(i2_val, i2_geo), relative_gap(j_val, Complex(p_phi)),
                                         relative_gap(i1_geo + i2_geo - gamma2 * p_phi * p_phi, h_geo)};
        for (std::size_t i = 0; i < gaps.size(); ++i) worst[i] = std::max(worst[i], gaps[i]);
        ++accepted;
    }
    const std::string note = std::to_string(accepted) + " samples, " + std::to_string(draws - accepted) + " redrawn";
    report.add(numeric_check(tag + ".H", "H_(2) = p_rho^2 + p_phi^2/S^2 - gamma1^2 T^2/4", worst[0], options.tolerance, note));
    report.add(numeric_check(tag + ".I1", "I1 = (cos phi p_rho - sin phi p_phi/T)^2 - gamma1^2 T^2 cos^2 phi/4", worst[1],
                             options.tolerance, note));
    report.add(numeric_check(tag + ".I2", "I2 = (sin phi p_rho + cos phi p_phi/T)^2 - gamma1^2 T^2 sin^2 phi/4", worst[2],
                             options.tolerance, note));
    report.add(numeric_check(tag + ".p_phi", "q1 p2 - q2 p1 = p_phi", worst[3], options.tolerance, note));
    report.add(numeric_check(tag + ".dependence", "I1 + I2 - gamma2 p_phi^2 = H_(2) in geodesic form", worst[4],
                             options.tolerance, note));
    return report;
}

CheckResult kappa_identity_check(double kappa, const NumericOptions& options) {
    auto rng = stream(options.seed, "identity" + number_text(kappa));
    const double limit = domain_limit(kappa);
    std::uniform_real_distribution<double> dist(0.02 * limit, 0.98 * limit);
    double worst = 0.0;
    int accepted = 0;
    int draws = 0;
    while (accepted < options.samples) {
        if (++draws > kMaxDrawsPerSample * options.samples) throw EvaluationError("identity sampling budget exhausted");
        const KappaValues k = kappa_eval(kappa, dist(rng));
        if (!k.T || std::abs(1.0 / *k.T) > kMagnitudeGuard) continue;
        worst = std::max(worst, relative_gap(1.0 / (*k.T * *k.T) + kappa, 1.0 / (k.S * k.S)));
        ++accepted;
    }
    return numeric_check("kappa=" + number_text(kappa) + ".identity", "1/T^2 + kappa = 1/S^2", worst, kIdentityTolerance,
                         std::to_string(accepted) + " samples");
}

CheckResult kappa_series_check(double kappa, const NumericOptions& options) {
    auto rng = stream(options.seed, "series" + number_text(kappa));
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    double worst = 0.0;
    for (int i = 0; i < options.samples; ++i) {
        const double x = dist(rng);
        const double slope = (kappa_eval(kappa, x).S - x) / kappa;
        worst = std::max(worst, std::abs(slope + x * x * x / 6.0));
    }
    return numeric_check("kappa=" + number_text(kappa) + ".series", "(S_kappa(x) - x)/kappa -> -x^3/6", worst,
                         kSeriesTolerance, std::to_string(options.samples) + " samples");
}

FloatFunction float_function(const Scalar& f, int radical_sign) {
    // Extended precision absorbs cancellation inside high-degree expanded polynomials.
    return [f, radical_sign](std::span<const double> point) {
        const std::vector<long double> wide(point.begin(), point.end());
        return static_cast<double>(f.evaluate<long double>(wide, radical_sign));
    };
}

namespace {

// Partials (df/dq_i, dg/dp_i, df/dp_i, dg/dq_i) for i = 1, 2.
std::vector<std::array<FloatFunction, 4>> bracket_parts(const Scalar& f, const Scalar& g, int radical_sign) {
    const Chart chart = Chart::standard(f.context());
    std::vector<std::array<FloatFunction, 4>> parts;
    for (std::size_t i = 0; i < 2; ++i) {
        parts.push_back({float_function(f.derivative(chart.q[i]), radical_sign),
                         float_function(g.derivative(chart.p[i]), radical_sign),
                         float_function(f.derivative(chart.p[i]), radical_sign),
                         float_function(g.derivative(chart.q[i]), radical_sign)});
    }
    return parts;
}

// H(q, J^T P) with J and the Hamiltonian evaluated separately.
FloatFunction float_pullback(const CanonicalMap& map, const Scalar& f) {
    const Context& ctx = f.context();
    const auto jac = position_jacobian(map);
    std::array<FloatFunction, 4> j;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) j[2 * a + b] = float_function(jac[a][b]);
    }
    const FloatFunction h = float_function(f);
    const std::size_t ip1 = ctx->index("p1"), ip2 = ctx->index("p2"), iP1 = ctx->index("P1"), iP2 = ctx->index("P2");
    return [=](std::span<const double> x) {
        std::vector<double> y(x.begin(), x.end());
        y[ip1] = j[0](x) * x[iP1] + j[2](x) * x[iP2];
        y[ip2] = j[1](x) * x[iP1] + j[3](x) * x[iP2];
        return h(y);
    };
}

// claimed(Q(q), P) with the positions evaluated first.
FloatFunction float_claimed(const CanonicalMap& map, const Scalar& claimed) {
    const Context& ctx = claimed.context();
    const FloatFunction q1 = float_function(*map.coordinates[0].value);
    const FloatFunction q2 = float_function(*map.coordinates[1].value);
    const FloatFunction c = float_function(claimed);
    const std::size_t iQ1 = ctx->index("Q1"), iQ2 = ctx->index("Q2");
    return [=](std::span<const double> x) {
        std::vector<double> y(x.begin(), x.end());
        y[iQ1] = q1(x);
        y[iQ2] = q2(x);
        return c(y);
    };
}

} // namespace

FloatFunction float_bracket(const Scalar& f, const Scalar& g, int radical_sign) {
    const auto parts = bracket_parts(f, g, radical_sign);
    return [parts](std::span<const double> point) {
        double sum = 0.0;
        for (const auto& p : parts) sum += p[0](point) * p[1](point) - p[2](point) * p[3](point);
        return sum;
    };
}

FloatFunction float_bracket_scale(const Scalar& f, const Scalar& g, int radical_sign) {
    const auto parts = bracket_parts(f, g, radical_sign);
    return [parts](std::span<const double> point) {
        double sum = 0.0;
        for (const auto& p : parts) sum += std::abs(p[0](point) * p[1](point)) + std::abs(p[2](point) * p[3](point));
        return sum;
    };
}

CheckResult float_cross_check(const FloatIdentity& identity, const Context& ctx, const NumericOptions& options) {
    auto rng = stream(options.seed, identity.id);
    std::uniform_int_distribution<int> num_dist(1, 30);
    std::bernoulli_distribution negative(0.5);
    std::uniform_int_distribution<int> den_dist(10, 20);
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2 - 0.05);
    const std::size_t ik1 = ctx->index("k1");
    const std::size_t ik2 = ctx->index("k2");
    std::vector<double> point(ctx->size(), 0.0);
    double worst = identity.expect_nonzero ? std::numeric_limits<double>::infinity() : 0.0;
    int accepted = 0;
    int draws = 0;
    while (accepted < options.samples) {
        if (++draws > kMaxDrawsPerSample * options.samples) {
            return bool_check(identity.id, identity.identity, false, "sampling budget exhausted");
        }
        for (auto& x : point) x = Rational(negative(rng) ? -num_dist(rng) : num_dist(rng), den_dist(rng)).get_d();
        if (identity.domain == SampleDomain::unit_circle) {
            const double theta = angle(rng);
            point[ik1] = std::cos(theta);
            point[ik2] = std::sin(theta);
        }
        double lhs = 0.0;
        double rhs = 0.0;
        double scale = 1.0;
        try {
            lhs = identity.lhs(point);
            rhs = identity.rhs(point);
            if (identity.guard && !(std::abs(identity.guard(point)) <= kMagnitudeGuard)) continue;
            if (identity.scale) scale = std::max(scale, identity.scale(point));
        } catch (const EvaluationError&) {
            continue;
        }
        if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(scale) || std::abs(lhs) > kMagnitudeGuard ||
            std::abs(rhs) > kMagnitudeGuard || scale > kMagnitudeGuard) {
            continue;
        }
        const double gap = std::abs(lhs - rhs) / std::max({scale, std::abs(lhs), std::abs(rhs)});
        worst = identity.expect_nonzero ? std::min(worst, gap) : std::max(worst, gap);
        ++accepted;
    }
    const std::string note = std::to_string(accepted) + " samples, " + std::to_string(draws - accepted) + " redrawn";
    if (identity.expect_nonzero) {
        CheckResult c = numeric_check(identity.id, identity.identity, worst, kWitnessThreshold, note);
        c.status = worst > kWitnessThreshold ? CheckStatus::pass : CheckStatus::fail;
        c.note = "smallest gap must exceed the tolerance; " + note;
        return c;
    }
    return numeric_check(identity.id, identity.identity, worst, options.tolerance, note);
}

std::vector<FloatIdentity> standard_float_identities() {
    const Context& ctx = standard_context();
    auto parse = [&ctx](std::string_view text) { return parse_expression(text, ctx); };
    const Integrals in = integrals(ctx);
    const Scalar h2 = hamiltonian(ctx, 2);
    std::vector<FloatIdentity> out;

    {
        const FloatFunction i1 = float_function(in.I1), i2 = float_function(in.I2), j = float_function(in.J);
        const FloatFunction g2 = float_function(parse("g2"));
        out.push_back({"float.dependence", "I1 + I2 - gamma2 J^2 = H_(2)",
                       [=](std::span<const double> x) { return i1(x) + i2(x) - g2(x) * j(x) * j(x); }, float_function(h2)});
    }
    const FloatFunction zero = [](std::span<const double>) { return 0.0; };
    auto bracket_zero = [&](std::string id, std::string text, const Scalar& f, const Scalar& g,
                            SampleDomain domain = SampleDomain::generic, FloatFunction guard = {}) {
        out.push_back({std::move(id), std::move(text), float_bracket(f, g), zero, false, domain, float_bracket_scale(f, g),
                       std::move(guard)});
    };
    bracket_zero("float.bracket_H_J", "{H_(2), J} = 0", h2, in.J);
    bracket_zero("float.bracket_H_I1", "{H_(2), I1} = 0", h2, in.I1);
    bracket_zero("float.bracket_H_I2", "{H_(2), I2} = 0", h2, in.I2);
    bracket_zero("float.bracket_H5_J", "{H_(5), J} = 0", hamiltonian(ctx, 5), in.J);
    {
        const FloatFunction x1 = float_function(in.J * Rational(1, 2));
        const FloatFunction x2 = float_function((in.I1 - in.I2) * Rational(1, 2));
        const FloatFunction x3 = float_function(parse(kX3Expanded));
        const FloatFunction h = float_function(h2), g1 = float_function(parse("g1")), g2 = float_function(parse("g2"));
        out.push_back({"float.casimir", "X2^2 + X3^2 - (g1^2 + 2 g2 H) X1^2 - 4 g2^2 X1^4 = H^2/4",
                       [=](std::span<const double> x) {
                           const double a = x1(x);
                           return x2(x) * x2(x) + x3(x) * x3(x) - (g1(x) * g1(x) + 2 * g2(x) * h(x)) * a * a -
                                  4 * g2(x) * g2(x) * a * a * a * a;
                       },
                       [=](std::span<const double> x) { return h(x) * h(x) / 4; }});
        out.push_back({"float.bracket_X1_X2", "{X1, X2} = X3", float_bracket(in.J * Rational(1, 2), (in.I1 - in.I2) * Rational(1, 2)),
                       x3});
    }
    // Chain K^T dH = dI for the catalog operators, weighted over components.
    for (const char* name : {"K_J2", "K_I2", "K_I1", "K_e"}) {
        const CatalogEntry entry = catalog(name, {}, false);
        const Chart chart = Chart::standard(ctx);
        std::vector<FloatFunction> k;
        std::vector<FloatFunction> dh;
        std::vector<FloatFunction> di;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) k.push_back(float_function(entry.tensor(i, j)));
            const std::size_t v = i < 2 ? chart.q[i] : chart.p[i - 2];
            dh.push_back(float_function(entry.hamiltonian.derivative(v)));
            di.push_back(float_function(entry.integral->derivative(v)));
        }
        out.push_back({std::string("float.chain_") + name, "K^T dH = dI, components weighted 1..4",
                       [=](std::span<const double> x) {
                           double sum = 0.0;
                           for (std::size_t j = 0; j < 4; ++j) {
                               double comp = 0.0;
                               for (std::size_t i = 0; i < 4; ++i) comp += k[4 * i + j](x) * dh[i](x);
                               sum += static_cast<double>(j + 1) * comp;
                           }
                           return sum;
                       },
                       [=](std::span<const double> x) {
                           double sum = 0.0;
                           for (std::size_t j = 0; j < 4; ++j) sum += static_cast<double>(j + 1) * di[j](x);
                           return sum;
                       },
                       false, std::string_view(name) == "K_e" ? SampleDomain::unit_circle : SampleDomain::generic});
    }
    // Elliptic brackets on the + branch.
    {
        const CanonicalMap map = canonical_map("elliptic");
        const FloatFunction one = [](std::span<const double>) { return 1.0; };
        const auto& c = map.coordinates;
        // Second derivatives of the momenta carry D^-3 with D = T^2 - 4P.
        const FloatFunction disc = float_function(reduce(*c[0].value.value().discriminant(), map.relations));
        const FloatFunction focal = [disc](std::span<const double> x) {
            const double d = disc(x);
            return 1.0 / (d * d * d);
        };
        out.push_back({"float.elliptic_Q1_P1", "{Q1, P1} = 1", float_bracket(*c[0].value, *c[2].value), one, false,
                       SampleDomain::unit_circle, {}, focal});
        out.push_back({"float.elliptic_Q2_P2", "{Q2, P2} = 1", float_bracket(*c[1].value, *c[3].value), one, false,
                       SampleDomain::unit_circle, {}, focal});
        bracket_zero("float.elliptic_Q1_P2", "{Q1, P2} = 0", *c[0].value, *c[3].value, SampleDomain::unit_circle, focal);
        bracket_zero("float.elliptic_P1_P2", "{P1, P2} = 0", *c[2].value, *c[3].value, SampleDomain::unit_circle, focal);
        const StaeckelEllipticData data = staeckel_elliptic(ctx);
        auto at = [&](const Scalar& f, const char* v) {
            std::vector<Scalar> table = identity_substitution(ctx);
            table[ctx->index("lam")] = parse(v);
            return substitute(f, table);
        };
        const Scalar claimed = (at(data.h, "Q1") * parse("P1^2") - at(data.h, "Q2") * parse("P2^2") +
                                at(data.g, "Q1") * parse("P1") - at(data.g, "Q2") * parse("P2")) /
                               parse("Q1 - Q2");
        out.push_back({"float.staeckel", "H_(2) in mixed coordinates equals the Staeckel form",
                       float_pullback(map, h2), float_claimed(map, claimed), false, SampleDomain::unit_circle});
    }
    {
        const CanonicalMap map = canonical_map("cartesian_I2");
        const Scalar claimed =
            parse("P1^2 + g1*Q1*P1 + g2*(Q1*P1)^2 + (P2^2 + g1*Q2*P2 + g2*(Q2*P2)^2)/(1 + g2*Q1^2)");
        out.push_back({"float.cartesian_separated", "H_(2) = H1(Q1, P1) + H2(Q2, P2)/(1 + gamma2 Q1^2)",
                       float_pullback(map, h2), float_claimed(map, claimed)});
    }
    {
        const EptCandidate cart = candidate("cartesian_I2");
        const Scalar g2 = parse("g2");
        std::array<FloatFunction, 4> j;
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) j[2 * a + b] = float_function(cart.jacobian[a][b]);
        }
        const FloatFunction q1 = float_function(parse("q1")), q2 = float_function(parse("q2")), g2f = float_function(g2);
        out.push_back({"float.cross_N2", "2 (JJ^T)_12 = -2 gamma2 v1 v2",
                       [=](std::span<const double> x) { return 2 * (j[0](x) * j[2](x) + j[1](x) * j[3](x)); },
                       [=](std::span<const double> x) {
                           const double v1 = j[0](x) * q1(x) + j[1](x) * q2(x);
                           const double v2 = j[2](x) * q1(x) + j[3](x) * q2(x);
                           return -2 * g2f(x) * v1 * v2;
                       }});
        out.push_back({"float.cross_N3_witness", "the N = 3 cross residual is nonzero",
                       float_function(cross_residual(cart, 3).expanded), zero, true});
    }
    return out;
}

VerificationReport numeric_suite(const NumericOptions& options) {
    VerificationReport report;
    report.suite = "numeric";
    report.parameters = {{"samples", std::to_string(options.samples)},
                         {"seed", std::to_string(options.seed)},
                         {"tol", number_text(options.tolerance)}};

    {
        const KappaValues flat = kappa_eval(0.0, 2.0);
        report.add(bool_check("kappa_eval.flat", "S_0(2) = 2, C_0(2) = 1, T_0(2) = 2",
                              flat.S == 2.0 && flat.C == 1.0 && flat.T && *flat.T == 2.0));
        const KappaValues pole = kappa_eval(1.0, std::numbers::pi / 2);
        report.add(bool_check("kappa_eval.pole", "S_1(pi/2) = 1, C_1(pi/2) = 0, T_1 has a pole",
                              std::abs(pole.S - 1.0) < kIdentityTolerance && std::abs(pole.C) < kIdentityTolerance && !pole.T));
        const KappaValues hyp = kappa_eval(-1.0, 1.0);
        report.add(bool_check("kappa_eval.hyperbolic", "(S, C, T)_{-1}(1) = (sinh 1, cosh 1, tanh 1)",
                              hyp.S == std::sinh(1.0) && hyp.C == std::cosh(1.0) && hyp.T &&
                                  std::abs(*hyp.T - std::tanh(1.0)) < kIdentityTolerance));
    }

    // omega = 0.6 gives gamma1 = 2 i omega.
    const std::array<Complex, 2> gammas{Complex(0.7, 0.0), Complex(0.0, 1.2)};
    for (double kappa : {1.0, 0.0, -1.0}) {
        for (Complex g1 : gammas) report.merge(geodesic_polar_check(kappa, g1, options), "geodesic");
        report.add(kappa_identity_check(kappa, options));
    }
    report.add(kappa_series_check(kSeriesKappa, options));
    report.add(kappa_series_check(-kSeriesKappa, options));

    NumericOptions cross = options;
    cross.samples = std::min(options.samples, kCrossCheckSamples);
    const Context& ctx = standard_context();
    for (const auto& identity : standard_float_identities()) report.add(float_cross_check(identity, ctx, cross));
    return report;
}

} // namespace haantjes
