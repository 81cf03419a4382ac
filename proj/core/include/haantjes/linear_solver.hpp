#pragma once

#include <map>
#include <vector>

#include "haantjes/polynomial.hpp"

namespace haantjes {

/// Sparse linear system over Q, built one equation at a time.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    /// sum coeffs[j] * x_j = rhs. Zero coefficients are dropped.
    void add_equation(std::map<std::size_t, Rational> coeffs, Rational rhs);

    std::size_t unknowns() const noexcept { return unknowns_; }
    std::size_t equations() const noexcept { return rows_.size(); }

    struct Row {
        std::map<std::size_t, Rational> coeffs;
        Rational rhs;
    };
    const std::vector<Row>& rows() const noexcept { return rows_; }

private:
    std::size_t unknowns_;
    std::vector<Row> rows_;
};

/// Affine solution set particular + span(kernel).
struct LinearSolution {
    bool consistent = true;
    std::vector<Rational> particular;
    /// One vector per free unknown; free unknowns are the non-pivot columns.
    std::vector<std::vector<Rational>> kernel;
    std::vector<std::size_t> free_columns;
    /// Indices of equations that reduced to 0 = nonzero.
    std::vector<std::size_t> inconsistent_rows;
};

/// Exact sparse Gauss-Jordan elimination. Pivots are taken at the lowest
/// column index so the result does not depend on equation order beyond
/// the row reductions themselves; free unknowns are set to zero in the
/// particular solution.
LinearSolution solve(const LinearSystem& system);

} // namespace haantjes
