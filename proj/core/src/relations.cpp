#include "haantjes/relations.hpp"

#include <map>

namespace haantjes {

Polynomial reduce(const Polynomial& p, const Relations& relations) {
    Polynomial current = p;
    for (const auto& rule : relations) {
        if (current.degree_in(rule.variable) < 2) continue;
        std::vector<Polynomial> powers{Polynomial::constant(p.context(), 1)};
        std::map<unsigned, std::vector<Term>> by_half;
        for (const auto& term : current.terms()) {
            Term t = term;
            const unsigned e = t.monomial.exponents[rule.variable];
            const unsigned half = e / 2;
            t.monomial.exponents[rule.variable] = static_cast<std::uint8_t>(e % 2);
            t.monomial.degree = static_cast<std::uint16_t>(t.monomial.degree - 2 * half);
            by_half[half].push_back(std::move(t));
        }
        Polynomial out(p.context());
        for (auto& [half, terms] : by_half) {
            while (powers.size() <= half) powers.push_back(powers.back() * rule.replacement);
            out += Polynomial::from_terms(p.context(), std::move(terms)) * powers[half];
        }
        current = std::move(out);
    }
    return current;
}

RationalFunction reduce(const RationalFunction& f, const Relations& relations) {
    if (relations.empty()) return f;
    std::vector<Factor> den;
    for (const auto& factor : f.denominator()) den.push_back(Factor{reduce(factor.base, relations), factor.exponent});
    return RationalFunction::from_parts(reduce(f.numerator(), relations), std::move(den));
}

QuadExtScalar reduce(const QuadExtScalar& f, const Relations& relations) {
    if (relations.empty()) return f;
    if (!f.has_radical()) return QuadExtScalar(reduce(f.rational_part(), relations));
    return QuadExtScalar(reduce(f.rational_part(), relations), reduce(f.radical_part(), relations),
                         reduce(*f.discriminant(), relations));
}

bool is_zero_modulo(const RationalFunction& f, const Relations& relations) {
    return reduce(f.numerator(), relations).is_zero();
}

bool is_zero_modulo(const QuadExtScalar& f, const Relations& relations) {
    return is_zero_modulo(f.rational_part(), relations) && is_zero_modulo(f.radical_part(), relations);
}

Relations unit_circle_relation(const Context& context) {
    const std::size_t k1 = context->index("k1");
    const std::size_t k2 = context->index("k2");
    return {SquareRewrite{k2, Polynomial::constant(context, 1) - Polynomial::variable(context, k1, 2)}};
}

Relations imaginary_gamma1_relation(const Context& context) {
    const std::size_t g1 = context->index("g1");
    const std::size_t b = context->index("b");
    return {SquareRewrite{g1, -Polynomial::variable(context, b, 2)}};
}

} // namespace haantjes
