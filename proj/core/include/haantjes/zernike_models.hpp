#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "haantjes/tensor.hpp"

namespace haantjes {

/// Largest N with a symbolic gamma_N in the standard context.
inline constexpr int kMaxFamilyDegree = 5;

/// gamma_n as the symbol g<n>.
Scalar gamma_symbol(const Context& ctx, int n);

/// p1^2 + p2^2 + sum_{n<=N} gamma_n (q1 p1 + q2 p2)^n with symbolic gammas.
Scalar hamiltonian(const Context& ctx, int degree);
/// Same with explicit coefficients gamma[0] = gamma_1, ...
Scalar hamiltonian(std::span<const Scalar> gamma);

struct Integrals {
    Scalar J;
    Scalar I1;
    Scalar I2;
};
/// Angular momentum and the two quadratic integrals of H_(2).
Integrals integrals(const Context& ctx);
/// -g2 k1^2 J^2 - k2^2 I2.
Scalar elliptic_integral(const Context& ctx);

/// Expanded bracket {X1, X2} with X1 = J/2 and X2 = (I1 - I2)/2, kept as an
/// independent polynomial so the sign convention is pinned.
inline constexpr std::string_view kX3Expanded = "p1*p2*(1 + g2*(q1^2 + q2^2)) + g1*(q1*p2 + q2*p1)/2";

struct CatalogEntry {
    std::string name;
    Tensor11 tensor;
    Scalar hamiltonian;
    /// Chain target K^T dH = dI; absent for Nijenhuis generators.
    std::optional<Scalar> integral;
    /// Rewrites applied before zero tests.
    Relations relations;
    bool nijenhuis = false;
    std::string note;
};

std::vector<std::string> catalog_names();

/// Builds the named operator, specializes it, and (when asked) runs the
/// load-time assertions, throwing Error if any fails.
CatalogEntry catalog(std::string_view name, const Bindings& bindings = {}, bool validate = true);

/// Compatibility, Haantjes (or Nijenhuis) torsion, chain residual and semisimplicity.
VerificationReport validate_entry(const CatalogEntry& entry);

VerificationReport symmetry_algebra_report(const Bindings& bindings = {});

/// Substitution q = sqrt(2) qb, p = (pb - g1 qb)/sqrt(2) pulling functions of
/// (q, p) back to the oscillator chart.
std::vector<Scalar> oscillator_substitution(const Context& ctx);

} // namespace haantjes
