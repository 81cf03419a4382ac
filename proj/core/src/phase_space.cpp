#include "haantjes/phase_space.hpp"

namespace haantjes {

Chart Chart::standard(const Context& ctx) {
    return Chart{{ctx->index("q1"), ctx->index("q2")}, {ctx->index("p1"), ctx->index("p2")}};
}

Chart Chart::separated(const Context& ctx) {
    return Chart{{ctx->index("Q1"), ctx->index("Q2")}, {ctx->index("P1"), ctx->index("P2")}};
}

Chart Chart::oscillator(const Context& ctx) {
    return Chart{{ctx->index("qb1"), ctx->index("qb2")}, {ctx->index("pb1"), ctx->index("pb2")}};
}

OneForm zero_form(const Context& ctx) { return {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)}; }

Scalar poisson_bracket(const Scalar& f, const Scalar& g, const Chart& chart) {
    Scalar sum(f.context());
    for (std::size_t i = 0; i < 2; ++i) {
        const Scalar fq = f.derivative(chart.q[i]);
        const Scalar gp = g.derivative(chart.p[i]);
        if (!fq.is_zero() && !gp.is_zero()) sum += fq * gp;
        const Scalar fp = f.derivative(chart.p[i]);
        const Scalar gq = g.derivative(chart.q[i]);
        if (!fp.is_zero() && !gq.is_zero()) sum -= fp * gq;
    }
    return sum;
}

OneForm differential(const Scalar& f, const Chart& chart) {
    return {f.derivative(chart.variable(0)), f.derivative(chart.variable(1)), f.derivative(chart.variable(2)),
            f.derivative(chart.variable(3))};
}

TwoForm exterior_derivative(const OneForm& alpha, const Chart& chart) {
    TwoForm out{Scalar(alpha[0].context()), Scalar(alpha[0].context()), Scalar(alpha[0].context()),
                Scalar(alpha[0].context()), Scalar(alpha[0].context()), Scalar(alpha[0].context())};
    std::size_t slot = 0;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            out[slot++] = alpha[b].derivative(chart.variable(a)) - alpha[a].derivative(chart.variable(b));
        }
    }
    return out;
}

Scalar pairing(const OneForm& alpha, const Vector4& x) {
    Scalar sum(alpha[0].context());
    for (std::size_t i = 0; i < 4; ++i) {
        if (!alpha[i].is_zero() && !x[i].is_zero()) sum += alpha[i] * x[i];
    }
    return sum;
}

Scalar poisson_pairing(const OneForm& alpha, const OneForm& beta) {
    Scalar sum(alpha[0].context());
    for (std::size_t i = 0; i < 2; ++i) {
        if (!alpha[i].is_zero() && !beta[i + 2].is_zero()) sum += alpha[i] * beta[i + 2];
        if (!alpha[i + 2].is_zero() && !beta[i].is_zero()) sum -= alpha[i + 2] * beta[i];
    }
    return sum;
}

OneForm operator+(const OneForm& a, const OneForm& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
OneForm operator-(const OneForm& a, const OneForm& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
OneForm operator*(const Scalar& s, const OneForm& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

bool is_zero(const OneForm& alpha, const Relations& relations) {
    for (const auto& c : alpha) {
        if (!is_zero(c, relations)) return false;
    }
    return true;
}

bool is_zero(const TwoForm& omega, const Relations& relations) {
    for (const auto& c : omega) {
        if (!is_zero(c, relations)) return false;
    }
    return true;
}

std::string residual_head(const OneForm& alpha) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (!alpha[i].is_zero()) return "component " + std::to_string(i) + ": " + residual_head(alpha[i]);
    }
    return "0";
}

std::string residual_head(const TwoForm& omega) {
    for (std::size_t i = 0; i < 6; ++i) {
        if (!omega[i].is_zero()) return "component " + std::to_string(i) + ": " + residual_head(omega[i]);
    }
    return "0";
}

} // namespace haantjes
