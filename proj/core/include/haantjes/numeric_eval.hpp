#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haantjes/report.hpp"
#include "haantjes/scalar.hpp"

namespace haantjes {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr double kDefaultTolerance = 1e-10;
/// Samples whose intermediate magnitudes exceed this are redrawn.
inline constexpr double kMagnitudeGuard = 1e8;

/// S_kappa, C_kappa and T_kappa = S/C; T is absent at a pole of the tangent.
struct KappaValues {
    double S = 0.0;
    double C = 1.0;
    std::optional<double> T;
};

KappaValues kappa_eval(double kappa, double x);

struct NumericOptions {
    int samples = 100;
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = kDefaultSeed;
};

/// Samples (rho, phi, p_rho, p_phi) in the geodesic chart of curvature
/// kappa = -gamma2, maps them to (q, p) and compares H_(2), I1, I2 and the
/// dependence relation with their geodesic forms. gamma1 may be imaginary.
VerificationReport geodesic_polar_check(double kappa, std::complex<double> gamma1, const NumericOptions& options = {});

/// 1/T^2 + kappa = 1/S^2 at sampled points of one curvature branch.
CheckResult kappa_identity_check(double kappa, const NumericOptions& options = {});

/// (S_kappa(x) - x)/kappa approaches -x^3/6 for small kappa.
CheckResult kappa_series_check(double kappa, const NumericOptions& options = {});

/// How variables are drawn for a floating cross-check.
enum class SampleDomain {
    generic,
    /// k1 = cos(theta), k2 = sin(theta).
    unit_circle,
};

using FloatFunction = std::function<double(std::span<const double>)>;

/// Both sides of an identity evaluated independently in double precision.
struct FloatIdentity {
    std::string id;
    std::string identity;
    FloatFunction lhs;
    FloatFunction rhs;
    /// Witness mode: every sample must show |lhs - rhs| > tolerance.
    bool expect_nonzero = false;
    SampleDomain domain = SampleDomain::generic;
    /// Size of the cancelling terms; the gap is measured relative to it when present.
    FloatFunction scale;
    /// Largest intermediate magnitude; samples above kMagnitudeGuard are redrawn.
    FloatFunction guard;
};

FloatFunction float_function(const Scalar& f, int radical_sign = +1);
/// {f, g} from independently evaluated partial derivatives.
FloatFunction float_bracket(const Scalar& f, const Scalar& g, int radical_sign = +1);
/// Sum of the absolute values of the products in float_bracket.
FloatFunction float_bracket_scale(const Scalar& f, const Scalar& g, int radical_sign = +1);

/// Default sample count for floating cross-checks.
inline constexpr int kCrossCheckSamples = 50;

CheckResult float_cross_check(const FloatIdentity& identity, const Context& ctx, const NumericOptions& options);

/// Floating cross-checks of identities proven exactly elsewhere.
std::vector<FloatIdentity> standard_float_identities();

/// kappa examples, geodesic checks per branch and gamma1 type, the kappa
/// identity, the series limit and the floating cross-checks.
VerificationReport numeric_suite(const NumericOptions& options = {});

} // namespace haantjes
