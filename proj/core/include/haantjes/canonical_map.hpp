#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haantjes/report.hpp"
#include "haantjes/tensor.hpp"

namespace haantjes {

/// One new coordinate as a function on the source chart. Transcendental
/// coordinates (the polar angle) carry only their differential.
struct Coordinate {
    std::string label;
    std::optional<Scalar> value;
    OneForm gradient;
};

Coordinate make_coordinate(std::string label, const Scalar& value, const Chart& chart);
Coordinate make_coordinate(std::string label, const OneForm& gradient);

/// New coordinates (Q1, Q2, P1, P2) as functions on `chart`.
struct CanonicalMap {
    std::string name;
    Chart chart;
    std::array<Coordinate, 4> coordinates;
    /// New positions depend on the old positions only.
    bool is_ept = false;
    /// Factors whose vanishing leaves the chart.
    std::vector<Scalar> singular_locus;
    Relations relations;
    std::string note;
};

std::vector<std::string> canonical_map_names();

/// polar, polar_rational, cartesian_I2, cartesian_I1, elliptic, oscillator_N1.
CanonicalMap canonical_map(std::string_view name, const Bindings& bindings = {});

/// The ten brackets {X_i, X_j}, i <= j, against the canonical values.
VerificationReport verify_canonical(const CanonicalMap& map);

/// J_ij = dQ_i/dq_j for an extended point transformation.
std::array<std::array<Scalar, 2>, 2> position_jacobian(const CanonicalMap& map);

/// f(q, p) with p = J^T P, so the result lives in mixed coordinates (q, P)
/// with P read from the (P1, P2) variables of the context.
Scalar pull_to_mixed(const CanonicalMap& map, const Scalar& f);

/// Replaces Q1, Q2 by their expressions in q. Every Q that occurs must have a value.
Scalar realize_positions(const CanonicalMap& map, const Scalar& claimed);

/// f(q, J^T P) - claimed(Q(q), P) vanishes identically.
CheckResult pullback_check(const CanonicalMap& map, const Scalar& f, const Scalar& claimed, std::string id,
                           std::string identity);

/// Position-only candidate coordinates tried by build_ept_from_lift.
std::vector<Scalar> default_coordinate_candidates(const Tensor11& k, const Relations& relations = {});

/// EPT whose positions are characteristic functions of a lift-form operator:
/// for each eigenvalue, the first candidate whose differential is parallel
/// to the A-block left eigenvector; momenta P = J^{-T} p.
CanonicalMap build_ept_from_lift(const Tensor11& k, const Relations& relations = {},
                                 std::span<const Scalar> candidates = {});

/// Left eigenvector of the A-block, normalized as (a10, lambda - a00) when
/// that is nonzero.
std::array<Scalar, 2> a_block_left_eigenvector(const Tensor11& k, const Scalar& lambda,
                                               const Relations& relations = {});

CheckResult exactness_check(const OneForm& alpha, const Chart& chart, std::string id, std::string identity,
                            const Relations& relations = {});

/// Integrating-factor ansatz h = N / den with N linear in the momenta.
struct MomentumAnsatz {
    int position_degree = 2;
    std::vector<std::size_t> parameters;
    int parameter_degree = 2;
};

struct ConjugateMomentum {
    Scalar r;
    Scalar h;
    OneForm beta;
    bool closed = false;
    /// Potential y with dy = beta, when one is found.
    std::optional<Scalar> potential;
    std::string note;
};

/// beta = h dx + r tau with r = 1/<dx, P tau> and h solved from d beta = 0.
ConjugateMomentum stepB_conjugate_momentum(const OneForm& dx, const OneForm& tau, const Chart& chart,
                                           const MomentumAnsatz& ansatz, const Relations& relations = {});

} // namespace haantjes
