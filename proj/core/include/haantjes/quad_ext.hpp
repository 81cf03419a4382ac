#pragma once

#include <memory>
#include <string>

#include "haantjes/rational_function.hpp"

namespace haantjes {

/// Element a + b*sqrt(D) of the quadratic extension Q(vars)[sqrt(D)].
///
/// An element without a radical part may leave D unset; it adopts the
/// discriminant of whatever it is combined with. Combining two elements
/// with different discriminants throws DiscriminantMismatch.
class QuadExtScalar {
public:
    explicit QuadExtScalar(Context context);
    QuadExtScalar(RationalFunction rational); // NOLINT(google-explicit-constructor)
    QuadExtScalar(Polynomial rational);       // NOLINT(google-explicit-constructor)
    QuadExtScalar(RationalFunction rational, RationalFunction radical, Polynomial discriminant);

    static QuadExtScalar constant(Context context, const Rational& value);
    static QuadExtScalar variable(Context context, std::string_view name);
    /// The element sqrt(D) itself.
    static QuadExtScalar sqrt_of(Polynomial discriminant);

    const Context& context() const noexcept { return a_.context(); }
    const RationalFunction& rational_part() const noexcept { return a_; }
    const RationalFunction& radical_part() const noexcept { return b_; }
    /// Null when no radical has been introduced.
    const std::shared_ptr<const Polynomial>& discriminant() const noexcept { return disc_; }
    bool has_radical() const noexcept { return !b_.is_zero(); }

    /// Both parts vanish.
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool depends_on(std::size_t var) const noexcept;

    QuadExtScalar operator-() const;
    QuadExtScalar operator+(const QuadExtScalar& rhs) const;
    QuadExtScalar operator-(const QuadExtScalar& rhs) const;
    QuadExtScalar operator*(const QuadExtScalar& rhs) const;
    QuadExtScalar operator/(const QuadExtScalar& rhs) const;
    QuadExtScalar operator*(const Rational& scale) const;
    QuadExtScalar& operator+=(const QuadExtScalar& rhs) { return *this = *this + rhs; }
    QuadExtScalar& operator-=(const QuadExtScalar& rhs) { return *this = *this - rhs; }
    QuadExtScalar& operator*=(const QuadExtScalar& rhs) { return *this = *this * rhs; }
    QuadExtScalar& operator/=(const QuadExtScalar& rhs) { return *this = *this / rhs; }

    /// a - b*sqrt(D).
    QuadExtScalar conjugate() const;
    /// a^2 - b^2 D.
    RationalFunction norm() const;
    QuadExtScalar inverse() const;
    QuadExtScalar pow(int exponent) const;

    /// d(a + b sqrt D) = da + (db + b dD/(2D)) sqrt D.
    QuadExtScalar derivative(std::size_t var) const;

    QuadExtScalar embed(const Context& larger) const;

    /// Value with sqrt(D) replaced by sign*sqrt(D(point)).
    /// Throws EvaluationError when D(point) < 0 for real T.
    template <class T>
    T evaluate(std::span<const T> point, int radical_sign = +1) const;

    std::string to_string() const;

private:
    std::shared_ptr<const Polynomial> unify(const QuadExtScalar& rhs) const;

    RationalFunction a_;
    RationalFunction b_;
    std::shared_ptr<const Polynomial> disc_;
};

inline QuadExtScalar operator*(const Rational& s, const QuadExtScalar& f) { return f * s; }

/// Rational part only (throws if a radical part is present).
RationalFunction require_rational(const QuadExtScalar& value);

namespace detail {
template <class T>
T real_sqrt(const T& value);
template <>
double real_sqrt<double>(const double& value);
template <>
long double real_sqrt<long double>(const long double& value);
template <>
std::complex<double> real_sqrt<std::complex<double>>(const std::complex<double>& value);
template <>
Rational real_sqrt<Rational>(const Rational& value);
} // namespace detail

template <class T>
T QuadExtScalar::evaluate(std::span<const T> point, int radical_sign) const {
    T value = a_.evaluate(point);
    if (b_.is_zero()) return value;
    const T d = disc_->evaluate(point);
    return value + b_.evaluate(point) * detail::real_sqrt(d) * rational_as<T>(Rational(radical_sign));
}

} // namespace haantjes
