#pragma once

#include <array>

#include "haantjes/scalar.hpp"

namespace haantjes {

/// Darboux chart: which context variables play (q1, q2, p1, p2).
/// Coordinate index c in 0..3 runs over q1 q2 p1 p2 in that order.
struct Chart {
    std::array<std::size_t, 2> q{};
    std::array<std::size_t, 2> p{};

    std::size_t variable(std::size_t c) const { return c < 2 ? q[c] : p[c - 2]; }

    /// (q1, q2, p1, p2).
    static Chart standard(const Context& ctx);
    /// (Q1, Q2, P1, P2), used for separated coordinates.
    static Chart separated(const Context& ctx);
    /// (qb1, qb2, pb1, pb2), the oscillator chart.
    static Chart oscillator(const Context& ctx);
};

/// Coefficients along dq1, dq2, dp1, dp2.
using OneForm = std::array<Scalar, 4>;
/// Components along d/dq1, d/dq2, d/dp1, d/dp2.
using Vector4 = std::array<Scalar, 4>;
/// Components (a,b) with a < b in the order 01 02 03 12 13 23.
using TwoForm = std::array<Scalar, 6>;

OneForm zero_form(const Context& ctx);

/// sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i.
Scalar poisson_bracket(const Scalar& f, const Scalar& g, const Chart& chart);

OneForm differential(const Scalar& f, const Chart& chart);
/// d of a one-form: components d_a alpha_b - d_b alpha_a.
TwoForm exterior_derivative(const OneForm& alpha, const Chart& chart);

Scalar pairing(const OneForm& alpha, const Vector4& x);
/// <alpha, P beta> with P the Poisson bivector, so that
/// poisson_pairing(df, dg) = {f, g}.
Scalar poisson_pairing(const OneForm& alpha, const OneForm& beta);

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const Scalar& s, const OneForm& a);

bool is_zero(const OneForm& alpha, const Relations& relations = {});
bool is_zero(const TwoForm& omega, const Relations& relations = {});
std::string residual_head(const OneForm& alpha);
std::string residual_head(const TwoForm& omega);

} // namespace haantjes
