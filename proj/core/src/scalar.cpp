#include "haantjes/scalar.hpp"

#include <algorithm>
#include <map>

namespace haantjes {

Scalar substitute(const Polynomial& f, std::span<const Scalar> values) {
    if (values.size() != f.context()->size()) throw ContextMismatch();
    if (values.empty()) throw Error("empty substitution");
    const Context& target = values.front().context();
    std::vector<std::vector<Scalar>> powers(values.size());
    Scalar sum(target);
    for (const auto& term : f.terms()) {
        Scalar value = Scalar::constant(target, term.coefficient);
        for (std::size_t v = 0; v < values.size(); ++v) {
            const unsigned e = term.monomial[v];
            if (e == 0) continue;
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(values[v]);
            while (cache.size() < e) cache.push_back(cache.back() * values[v]);
            value = value * cache[e - 1];
        }
        sum += value;
    }
    return sum;
}

Scalar substitute(const RationalFunction& f, std::span<const Scalar> values) {
    Scalar result = substitute(f.numerator(), values);
    if (f.is_polynomial()) return result;
    Scalar den = Scalar::constant(result.context(), 1);
    for (const auto& factor : f.denominator()) den = den * substitute(factor.base, values).pow(factor.exponent);
    return result / den;
}

Scalar substitute(const Scalar& f, std::span<const Scalar> values) {
    Scalar a = substitute(f.rational_part(), values);
    if (!f.has_radical()) return a;
    const Scalar d = substitute(*f.discriminant(), values);
    const RationalFunction dr = require_rational(d);
    if (!dr.is_polynomial()) throw Error("substituted discriminant is not a polynomial");
    Scalar root = Scalar::sqrt_of(dr.numerator());
    if (auto exact = dr.numerator().exact_sqrt()) root = Scalar(*exact);
    return a + substitute(f.radical_part(), values) * root;
}

std::vector<Scalar> identity_substitution(const Context& ctx) {
    std::vector<Scalar> out;
    out.reserve(ctx->size());
    for (std::size_t v = 0; v < ctx->size(); ++v) out.emplace_back(RationalFunction::variable(ctx, v));
    return out;
}

Polynomial specialize(const Polynomial& f, const Bindings& bindings) {
    Polynomial out = f;
    for (const auto& [v, value] : bindings) {
        if (out.depends_on(v)) out = out.substitute(v, Polynomial::constant(f.context(), value));
    }
    return out;
}

RationalFunction specialize(const RationalFunction& f, const Bindings& bindings) {
    if (bindings.empty()) return f;
    std::vector<Factor> den;
    for (const auto& factor : f.denominator()) {
        Polynomial base = specialize(factor.base, bindings);
        if (base.is_zero()) throw EvaluationError("specialization makes a denominator vanish");
        den.push_back(Factor{std::move(base), factor.exponent});
    }
    return RationalFunction::from_parts(specialize(f.numerator(), bindings), std::move(den));
}

Scalar specialize(const Scalar& f, const Bindings& bindings) {
    if (bindings.empty()) return f;
    RationalFunction a = specialize(f.rational_part(), bindings);
    if (!f.has_radical()) return Scalar(std::move(a));
    Polynomial d = specialize(*f.discriminant(), bindings);
    RationalFunction b = specialize(f.radical_part(), bindings);
    if (auto root = d.exact_sqrt()) return Scalar(a + b * RationalFunction(*root));
    if (d.is_zero()) return Scalar(std::move(a));
    return Scalar(std::move(a), std::move(b), std::move(d));
}

std::vector<Polynomial> clear_denominators(std::span<const RationalFunction> values) {
    if (values.empty()) return {};
    const Context& ctx = values.front().context();
    // Least common multiple over the factor multisets, keyed by canonical text.
    std::map<std::string, Factor> lcm;
    for (const auto& f : values) {
        for (const auto& factor : f.denominator()) {
            auto [it, inserted] = lcm.try_emplace(factor.base.to_string(), factor);
            if (!inserted) it->second.exponent = std::max(it->second.exponent, factor.exponent);
        }
    }
    std::vector<Polynomial> out;
    out.reserve(values.size());
    for (const auto& f : values) {
        Polynomial n = f.numerator();
        if (n.is_zero()) {
            out.push_back(n);
            continue;
        }
        std::map<std::string, int> own;
        for (const auto& factor : f.denominator()) own[factor.base.to_string()] = factor.exponent;
        for (const auto& [key, factor] : lcm) {
            const int missing = factor.exponent - (own.count(key) ? own[key] : 0);
            if (missing > 0) n *= factor.base.pow(static_cast<unsigned>(missing));
        }
        out.push_back(std::move(n));
    }
    (void)ctx;
    return out;
}

std::string residual_head(const Scalar& s, std::size_t max_chars) {
    if (s.is_zero()) return "0";
    std::string text = s.to_string();
    if (text.size() > max_chars) text = text.substr(0, max_chars) + "...";
    return text;
}

} // namespace haantjes
