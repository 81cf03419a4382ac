#include "haantjes/linear_solver.hpp"

#include <unordered_map>

#include "haantjes/errors.hpp"

namespace haantjes {

void LinearSystem::add_equation(std::map<std::size_t, Rational> coeffs, Rational rhs) {
    std::erase_if(coeffs, [this](const auto& kv) {
        if (kv.first >= unknowns_) throw Error("equation references an unknown out of range");
        return sgn(kv.second) == 0;
    });
    rows_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// row -= factor * pivot
void axpy(SparseRow& row, Rational& rhs, const SparseRow& pivot, const Rational& pivot_rhs, const Rational& factor) {
    for (const auto& [col, value] : pivot) {
        auto it = row.find(col);
        if (it == row.end()) {
            row.emplace(col, -factor * value);
        } else {
            it->second -= factor * value;
            if (sgn(it->second) == 0) row.erase(it);
        }
    }
    rhs -= factor * pivot_rhs;
}

} // namespace

LinearSolution solve(const LinearSystem& system) {
    // Pivot rows are kept fully reduced: a pivot column appears in exactly
    // one stored row, so reducing a new row never creates fill-in in pivot
    // columns.
    std::vector<SparseRow> pivots;
    std::vector<Rational> pivot_rhs;
    std::unordered_map<std::size_t, std::size_t> pivot_of_column;
    LinearSolution out;

    for (std::size_t r = 0; r < system.rows().size(); ++r) {
        SparseRow row = system.rows()[r].coeffs;
        Rational rhs = system.rows()[r].rhs;
        std::vector<std::pair<std::size_t, Rational>> hits;
        for (const auto& [col, value] : row) {
            auto it = pivot_of_column.find(col);
            if (it != pivot_of_column.end()) hits.emplace_back(it->second, value);
        }
        for (const auto& [p, factor] : hits) axpy(row, rhs, pivots[p], pivot_rhs[p], factor);
        if (row.empty()) {
            if (sgn(rhs) != 0) {
                out.consistent = false;
                out.inconsistent_rows.push_back(r);
            }
            continue;
        }
        const std::size_t col = row.begin()->first;
        const Rational lead = row.begin()->second;
        for (auto& [c, v] : row) v /= lead;
        rhs /= lead;
        // Eliminate the new pivot column from existing pivot rows.
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            auto it = pivots[p].find(col);
            if (it == pivots[p].end()) continue;
            const Rational factor = it->second;
            axpy(pivots[p], pivot_rhs[p], row, rhs, factor);
        }
        pivot_of_column[col] = pivots.size();
        pivots.push_back(std::move(row));
        pivot_rhs.push_back(std::move(rhs));
    }

    const std::size_t n = system.unknowns();
    out.particular.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (const auto& [col, p] : pivot_of_column) {
        is_pivot[col] = true;
        out.particular[col] = pivot_rhs[p];
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out.free_columns.push_back(f);
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (const auto& [col, p] : pivot_of_column) {
            auto it = pivots[p].find(f);
            if (it != pivots[p].end()) v[col] = -it->second;
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace haantjes
