#pragma once

#include <span>
#include <utility>
#include <vector>

#include "haantjes/quad_ext.hpp"
#include "haantjes/relations.hpp"

namespace haantjes {

/// The universal coefficient type. A rational function is the special case
/// without a radical part.
using Scalar = QuadExtScalar;

/// Fixed values for some variables of a context.
using Bindings = std::vector<std::pair<std::size_t, Rational>>;

inline Scalar constant(const Context& ctx, const Rational& value) { return Scalar::constant(ctx, value); }
inline Scalar var(const Context& ctx, std::string_view name) { return Scalar::variable(ctx, name); }

/// f with every variable v replaced by values[v].
Scalar substitute(const Polynomial& f, std::span<const Scalar> values);
Scalar substitute(const RationalFunction& f, std::span<const Scalar> values);
/// The discriminant must map to a polynomial.
Scalar substitute(const Scalar& f, std::span<const Scalar> values);

/// Identity substitution table for a context, ready to be edited.
std::vector<Scalar> identity_substitution(const Context& ctx);

Polynomial specialize(const Polynomial& f, const Bindings& bindings);
RationalFunction specialize(const RationalFunction& f, const Bindings& bindings);
Scalar specialize(const Scalar& f, const Bindings& bindings);

/// Numerators of the inputs over their least common factor denominator.
std::vector<Polynomial> clear_denominators(std::span<const RationalFunction> values);

/// Zero test after the relations are applied.
inline bool is_zero(const Scalar& s, const Relations& relations = {}) {
    return relations.empty() ? s.is_zero() : is_zero_modulo(s, relations);
}

/// Short human-readable summary of a residual: "0" or its leading terms.
std::string residual_head(const Scalar& s, std::size_t max_chars = 160);

} // namespace haantjes
