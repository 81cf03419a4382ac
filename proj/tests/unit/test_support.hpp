#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "haantjes/expression.hpp"
#include "haantjes/scalar.hpp"

namespace haantjes::test {

inline const Context& ctx() { return standard_context(); }

inline Scalar P(std::string_view text) { return parse_expression(text, ctx()); }

inline std::size_t idx(std::string_view name) { return ctx()->index(name); }

/// Random polynomial in q1, q2, p1, p2 (and optionally g1, g2) with small integer coefficients.
inline Scalar random_polynomial(std::mt19937_64& rng, int max_degree = 3, int terms = 5, bool parameters = false) {
    std::vector<std::size_t> vars{idx("q1"), idx("q2"), idx("p1"), idx("p2")};
    if (parameters) {
        vars.push_back(idx("g1"));
        vars.push_back(idx("g2"));
    }
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    Polynomial out(ctx());
    for (int t = 0; t < terms; ++t) {
        Polynomial m = Polynomial::constant(ctx(), Rational(coeff(rng)));
        for (int d = degree(rng); d > 0; --d) m *= Polynomial::variable(ctx(), vars[pick(rng)]);
        out += m;
    }
    return Scalar(RationalFunction(out));
}

/// Rational point with small entries, nonzero so that q-denominators stay defined.
inline std::vector<Rational> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(2, 7);
    std::bernoulli_distribution sign(0.5);
    std::vector<Rational> point(ctx()->size());
    for (auto& x : point) {
        x = Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng));
        x.canonicalize();
    }
    return point;
}

inline std::vector<double> to_double(const std::vector<Rational>& point) {
    std::vector<double> out;
    for (const auto& x : point) out.push_back(x.get_d());
    return out;
}

} // namespace haantjes::test
