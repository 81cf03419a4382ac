#pragma once

#include <vector>

#include "haantjes/tensor.hpp"

namespace haantjes {

/// Vector-valued two-form with components (i; j, k), antisymmetric in j, k.
class Torsion3 {
public:
    explicit Torsion3(const Context& ctx);

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[16 * i + 4 * j + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[16 * i + 4 * j + k]; }

private:
    std::vector<Scalar> c_;
};

Torsion3 nijenhuis_torsion(const Tensor11& l, const Chart& chart);

/// Coordinate expression with square brackets read as the plain
/// antisymmetrizer X_jk - X_kj.
Torsion3 haantjes_torsion(const Tensor11& l, const Chart& chart);

/// L^2 T(X,Y) + T(LX,LY) - L(T(X,LY) + T(LX,Y)) built from the Nijenhuis torsion.
Torsion3 haantjes_torsion_invariant(const Tensor11& l, const Chart& chart);

bool is_zero(const Torsion3& t, const Relations& relations = {});
bool is_antisymmetric(const Torsion3& t);
std::string residual_head(const Torsion3& t);

} // namespace haantjes
