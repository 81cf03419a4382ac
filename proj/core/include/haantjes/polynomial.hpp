#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "haantjes/variable_set.hpp"

namespace haantjes {

using Rational = mpq_class;

/// Exponent vector over a context, with cached total degree.
struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exponents{};
    std::uint16_t degree = 0;

    static Monomial variable(std::size_t index, unsigned power = 1);

    unsigned operator[](std::size_t index) const noexcept { return exponents[index]; }
    bool is_one() const noexcept { return degree == 0; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const noexcept;
    /// Square root if every exponent is even.
    std::optional<Monomial> sqrt() const noexcept;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree == b.degree && a.exponents == b.exponents;
    }
};

/// Graded-lex order: total degree first, then lexicographic in context order.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
    explicit Polynomial(Context context);

    static Polynomial constant(Context context, const Rational& value);
    static Polynomial variable(Context context, std::size_t index, unsigned power = 1);
    static Polynomial variable(Context context, std::string_view name, unsigned power = 1);
    /// Accepts terms in any order with repeats and zeros; canonicalizes.
    static Polynomial from_terms(Context context, std::vector<Term> terms);

    const Context& context() const noexcept { return context_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::optional<Rational> constant_value() const;

    /// Throws on the zero polynomial.
    const Term& leading_term() const;
    const Rational& leading_coefficient() const { return leading_term().coefficient; }

    int total_degree() const noexcept;
    int degree_in(std::size_t var) const noexcept;
    bool depends_on(std::size_t var) const noexcept;
    /// Indices of variables that occur.
    std::vector<std::size_t> support() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scale) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(std::size_t var) const;

    /// Coefficient of var^power, as a polynomial free of var.
    Polynomial coefficient(std::size_t var, unsigned power) const;
    /// Coefficient of an exact monomial in the given variables, collecting the rest.
    Polynomial coefficient(const Monomial& in_vars, std::span<const std::size_t> vars) const;

    /// Replace variable `var` by polynomial `value`.
    Polynomial substitute(std::size_t var, const Polynomial& value) const;

    /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
    std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;
    /// r with r*r == *this and positive leading coefficient, if it exists over Q.
    std::optional<Polynomial> exact_sqrt() const;

    /// Scaled so the leading coefficient is 1. Zero stays zero.
    Polynomial monic() const;

    /// Same polynomial viewed in an extension of its context.
    Polynomial embed(const Context& larger) const;

    template <class T>
    T evaluate(std::span<const T> point) const;

    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(Context context, std::vector<Term> sorted_terms);
    void require_same_context(const Polynomial& other) const;

    Context context_;
    std::vector<Term> terms_;
};

/// Total order on canonical polynomials (used to sort denominator factors).
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

bool exact_sqrt(const Rational& value, Rational& root);

/// Convert a rational to T (double, std::complex<double>, Rational).
template <class T>
T rational_as(const Rational& value);

template <>
inline Rational rational_as<Rational>(const Rational& value) { return value; }
template <>
inline double rational_as<double>(const Rational& value) { return value.get_d(); }
template <>
inline long double rational_as<long double>(const Rational& value) {
    return static_cast<long double>(value.get_num().get_d()) / static_cast<long double>(value.get_den().get_d());
}
template <>
inline std::complex<double> rational_as<std::complex<double>>(const Rational& value) {
    return {value.get_d(), 0.0};
}

template <class T>
T Polynomial::evaluate(std::span<const T> point) const {
    const std::size_t n = context_->size();
    // Powers are cached per variable up to the maximal degree seen.
    std::vector<std::vector<T>> powers(n);
    T sum = rational_as<T>(Rational(0));
    for (const auto& term : terms_) {
        T value = rational_as<T>(term.coefficient);
        for (std::size_t v = 0; v < n; ++v) {
            const unsigned e = term.monomial[v];
            if (e == 0) continue;
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(point[v]);
            while (cache.size() < e) cache.push_back(cache.back() * point[v]);
            value = value * cache[e - 1];
        }
        sum = sum + value;
    }
    return sum;
}

} // namespace haantjes
