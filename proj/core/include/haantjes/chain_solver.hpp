#pragma once

#include <span>
#include <string>
#include <vector>

#include "haantjes/tensor.hpp"

namespace haantjes {

/// Block ansatz K = (A B; C A^T) with B, C skew by construction. Each entry
/// is a combination of (phase monomial) x (parameter monomial) with an
/// unknown rational coefficient.
struct AnsatzSpec {
    int degree_a = 2;
    /// Negative: B is forced to zero (lift form).
    int degree_b = -1;
    int degree_c = 2;
    /// A entries depend on positions only.
    bool momentum_free_a = true;
    /// Context indices of parameters that may multiply unknowns.
    std::vector<std::size_t> parameters;
    int parameter_degree = 1;
};

/// Ansatz with the parameters given by name, e.g. {"g1", "g2"}.
AnsatzSpec make_ansatz(int degree, const std::vector<std::string>& parameters, int parameter_degree);

/// One ansatz unknown: entry slot times a monomial.
struct AnsatzTerm {
    enum class Slot { a00, a01, a10, a11, b, c } slot;
    Monomial monomial;
};

/// Affine family particular + span(basis) of solutions of K^T dH = dI.
struct LinearSolutionFamily {
    bool consistent = false;
    Tensor11 particular;
    std::vector<Tensor11> basis;
    std::vector<std::string> free_names;
    /// Monomials that could not be cancelled when inconsistent.
    std::vector<std::string> diagnostics;
    std::size_t unknowns = 0;
    std::size_t equations = 0;

    // Coordinates in the ansatz, kept for membership tests.
    std::vector<AnsatzTerm> terms;
    std::vector<Rational> particular_coords;
    std::vector<std::vector<Rational>> kernel_coords;
    std::vector<std::size_t> free_columns;
};

/// Requires polynomial H and I.
LinearSolutionFamily solve_chain(const Scalar& h, const Scalar& integral, const AnsatzSpec& ansatz);

/// True when K is a member of the affine family.
bool family_contains(const LinearSolutionFamily& family, const Tensor11& k);

struct FilterResult {
    /// Verified Haantjes members, in increasing lexicographic order of their
    /// free-coefficient vectors.
    std::vector<Tensor11> members;
    std::vector<std::vector<Rational>> coefficients;
    /// "direct", "linear" or "candidates".
    std::string strategy;
    std::vector<std::string> diagnostics;
};

/// Imposes vanishing Haantjes torsion on the family. Extra candidates are
/// tested when they belong to the family.
FilterResult filter_haantjes(const LinearSolutionFamily& family, std::span<const Tensor11> extra_candidates = {},
                             const Relations& relations = {});

} // namespace haantjes
