#pragma once

#include <span>
#include <string>
#include <vector>

#include "haantjes/errors.hpp"
#include "haantjes/polynomial.hpp"

namespace haantjes {

/// One denominator factor base^exponent.
struct Factor {
    Polynomial base;
    int exponent = 1;
};

/// Quotient of a polynomial by a multiset of polynomial factors.
///
/// No multivariate gcd is ever computed. Denominator factors are kept
/// monic, single-term factors are split into variable powers, syntactically
/// equal factors merge, and a factor cancels only when it divides the
/// numerator exactly. Equality is tested by cross-multiplication.
class RationalFunction {
public:
    explicit RationalFunction(Context context);
    RationalFunction(Polynomial numerator); // NOLINT(google-explicit-constructor)

    static RationalFunction constant(Context context, const Rational& value);
    static RationalFunction variable(Context context, std::string_view name);
    static RationalFunction variable(Context context, std::size_t index);
    /// numerator / denominator with the denominator taken as one factor.
    static RationalFunction fraction(Polynomial numerator, const Polynomial& denominator);
    static RationalFunction from_parts(Polynomial numerator, std::vector<Factor> denominator);

    const Context& context() const noexcept { return num_.context(); }
    const Polynomial& numerator() const noexcept { return num_; }
    std::span<const Factor> denominator() const noexcept { return den_; }
    Polynomial denominator_product() const;

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }
    std::optional<Rational> constant_value() const;
    bool depends_on(std::size_t var) const noexcept;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction operator*(const Rational& scale) const;
    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
    RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

    RationalFunction inverse() const;
    RationalFunction pow(int exponent) const;
    RationalFunction derivative(std::size_t var) const;

    /// Coefficient of var^power; the denominator must not involve var.
    RationalFunction coefficient(std::size_t var, unsigned power) const;

    RationalFunction embed(const Context& larger) const;

    template <class T>
    T evaluate(std::span<const T> point) const;

    std::string to_string() const;

private:
    RationalFunction(Polynomial numerator, std::vector<Factor> denominator, bool normalized);
    void normalize();
    void cancel();

    Polynomial num_;
    std::vector<Factor> den_;
};

/// Cross-multiplication equality: num_a*den_b - num_b*den_a == 0.
bool equal(const RationalFunction& a, const RationalFunction& b);

inline RationalFunction operator*(const Rational& s, const RationalFunction& f) { return f * s; }

template <class T>
T RationalFunction::evaluate(std::span<const T> point) const {
    T value = num_.evaluate(point);
    for (const auto& f : den_) {
        const T base = f.base.evaluate(point);
        if (base == rational_as<T>(Rational(0))) {
            throw EvaluationError("denominator factor " + f.base.to_string() + " vanishes");
        }
        for (int e = 0; e < f.exponent; ++e) value = value / base;
    }
    return value;
}

} // namespace haantjes
