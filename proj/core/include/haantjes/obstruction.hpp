#pragma once

#include <string>
#include <vector>

#include "haantjes/report.hpp"
#include "haantjes/tensor.hpp"

namespace haantjes {

/// Momentum-free new positions with their Jacobian J_ij = dQ_i/dq_j and v = J q.
struct EptCandidate {
    std::string name;
    std::array<Scalar, 2> positions;
    std::array<std::array<Scalar, 2>, 2> jacobian;
    std::array<Scalar, 2> v;
};

EptCandidate make_candidate(std::string name, const Scalar& q1_new, const Scalar& q2_new);
EptCandidate make_candidate(std::string name, std::string_view q1_new, std::string_view q2_new);

/// polar, polar_swapped, cartesian_I2, cartesian_I1, identity.
std::vector<std::string> candidate_names();
EptCandidate candidate(std::string_view name);

/// d^2 H / dP1 dP2 of H_(N) pulled back by the candidate, as coefficients of
/// powers of t = v.P together with the fully expanded form in (q, P).
struct CrossResidual {
    std::vector<Scalar> coefficients;
    Scalar expanded;
};

/// gamma[n-1] is gamma_n; entries beyond the vector are zero.
CrossResidual cross_residual(const EptCandidate& cand, std::span<const Scalar> gamma);
/// Symbolic gamma_1..gamma_N.
CrossResidual cross_residual(const EptCandidate& cand, int degree);

/// (J J^T)_12.
Scalar jacobian_cross(const EptCandidate& cand);
Scalar v_product(const EptCandidate& cand);

/// Exactly one position is radial-free (grad Q_a . q = 0) and the gradients
/// are orthogonal. The "orientation" check records whether Q2 is the angle.
VerificationReport polar_type_check(const EptCandidate& cand);

VerificationReport obstruction_suite(int max_degree = 5);

} // namespace haantjes
