#pragma once

#include <span>
#include <string>
#include <vector>

#include "haantjes/canonical_map.hpp"

namespace haantjes {

struct SeparationOperators {
    std::vector<Tensor11> operators;
    VerificationReport report;
};

/// Diagonal operators K_a = sum_i (dH_a/dP_i)/(dH/dP_i) (d/dQ_i x dQ_i + d/dP_i x dP_i)
/// in the separated chart, each checked for compatibility, vanishing
/// Haantjes torsion and the chain K_a^T dH = dH_a.
SeparationOperators separation_operators_from_separated(std::span<const Scalar> hs, std::size_t base);

/// Leading coefficient of a separated second-order ODE given by its finite
/// roots; infinity is always counted as one more regular singular point.
struct SeparatedOde {
    std::string tag;
    std::string variable;
    Scalar leading;
    std::vector<Scalar> roots;
    Relations relations;
};

struct OdeClass {
    int regular_singular_points = 0;
    std::string label;
};

/// polar (in s = r^2), cartesian_I2, cartesian_I1, elliptic.
SeparatedOde separated_ode(std::string_view tag, const Bindings& bindings = {});
std::vector<std::string> separated_ode_tags();

/// Distinct roots (pairwise differences tested exactly) plus infinity.
OdeClass ode_singularity_count(const SeparatedOde& ode);

/// Stäckel weights h and g of the elliptic separation, in the variable lam.
struct StaeckelEllipticData {
    Scalar h;
    Scalar g;
};
StaeckelEllipticData staeckel_elliptic(const Context& ctx);

/// Relations restricted to unbound variables, with bound values inserted.
Relations specialize_relations(const Relations& relations, const Bindings& bindings);

VerificationReport elliptic_suite(const Bindings& bindings = {});

/// A function of (q, p) and its claimed form in mixed coordinates (q, P)
/// under the named canonical map.
struct SeparatedForm {
    std::string name;
    std::string map;
    Scalar function;
    Scalar claimed;
    std::string identity;
};

/// Polar H_(N) for N <= max_degree, the two Cartesian separations and the
/// elliptic Stäckel form.
std::vector<SeparatedForm> separated_forms(int max_degree = 5);

/// Pairs (H, H_a) written in the separated chart (Q, P).
struct SeparatedPair {
    std::string name;
    std::vector<Scalar> functions;
};
std::vector<SeparatedPair> separated_pairs();

/// Pullback residuals of every separated form and the separation operators
/// of every separated pair.
VerificationReport separated_suite(int max_degree = 5);

/// I1 written in the coordinates adapted to I2 (fixture only: no reference value).
Scalar i1_in_i2_coordinates();

} // namespace haantjes
