#pragma once

#include <vector>

#include "haantjes/quad_ext.hpp"

namespace haantjes {

/// One-directional rewrite var^2 -> replacement (replacement free of var).
/// Used for k2^2 -> 1 - k1^2 and g1^2 -> -b^2.
struct SquareRewrite {
    std::size_t variable;
    Polynomial replacement;
};

using Relations = std::vector<SquareRewrite>;

Polynomial reduce(const Polynomial& p, const Relations& relations);
RationalFunction reduce(const RationalFunction& f, const Relations& relations);
QuadExtScalar reduce(const QuadExtScalar& f, const Relations& relations);

/// Zero test after rewriting the numerators (both parts for the extension).
bool is_zero_modulo(const RationalFunction& f, const Relations& relations);
bool is_zero_modulo(const QuadExtScalar& f, const Relations& relations);

/// k2^2 -> 1 - k1^2 over the standard context.
Relations unit_circle_relation(const Context& context);
/// g1^2 -> -b^2 (gamma1 = -i beta).
Relations imaginary_gamma1_relation(const Context& context);

} // namespace haantjes
