#include "haantjes/quad_ext.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace haantjes {

QuadExtScalar::QuadExtScalar(Context context) : a_(context), b_(std::move(context)) {}

QuadExtScalar::QuadExtScalar(RationalFunction rational) : a_(std::move(rational)), b_(a_.context()) {}

QuadExtScalar::QuadExtScalar(Polynomial rational) : QuadExtScalar(RationalFunction(std::move(rational))) {}

QuadExtScalar::QuadExtScalar(RationalFunction rational, RationalFunction radical, Polynomial discriminant)
    : a_(std::move(rational)), b_(std::move(radical)) {
    if (a_.context() != b_.context() || a_.context() != discriminant.context()) throw ContextMismatch();
    if (discriminant.is_zero()) throw Error("zero discriminant");
    disc_ = std::make_shared<const Polynomial>(std::move(discriminant));
}

QuadExtScalar QuadExtScalar::constant(Context context, const Rational& value) {
    return QuadExtScalar(RationalFunction::constant(std::move(context), value));
}

QuadExtScalar QuadExtScalar::variable(Context context, std::string_view name) {
    return QuadExtScalar(RationalFunction::variable(std::move(context), name));
}

QuadExtScalar QuadExtScalar::sqrt_of(Polynomial discriminant) {
    const Context ctx = discriminant.context();
    return QuadExtScalar(RationalFunction(ctx), RationalFunction::constant(ctx, 1), std::move(discriminant));
}

bool QuadExtScalar::depends_on(std::size_t var) const noexcept {
    if (a_.depends_on(var)) return true;
    if (b_.is_zero()) return false;
    return b_.depends_on(var) || disc_->depends_on(var);
}

std::shared_ptr<const Polynomial> QuadExtScalar::unify(const QuadExtScalar& rhs) const {
    if (context() != rhs.context()) throw ContextMismatch();
    if (!disc_) return rhs.disc_;
    if (!rhs.disc_ || disc_ == rhs.disc_) return disc_;
    if (*disc_ == *rhs.disc_) return disc_;
    // A side without a radical part may drop its discriminant.
    if (rhs.b_.is_zero()) return disc_;
    if (b_.is_zero()) return rhs.disc_;
    throw DiscriminantMismatch();
}

QuadExtScalar QuadExtScalar::operator-() const {
    QuadExtScalar r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadExtScalar QuadExtScalar::operator+(const QuadExtScalar& rhs) const {
    QuadExtScalar r(context());
    r.disc_ = unify(rhs);
    r.a_ = a_ + rhs.a_;
    r.b_ = b_ + rhs.b_;
    return r;
}

QuadExtScalar QuadExtScalar::operator-(const QuadExtScalar& rhs) const { return *this + (-rhs); }

QuadExtScalar QuadExtScalar::operator*(const QuadExtScalar& rhs) const {
    QuadExtScalar r(context());
    r.disc_ = unify(rhs);
    const bool lr = b_.is_zero();
    const bool rr = rhs.b_.is_zero();
    if (lr && rr) {
        r.a_ = a_ * rhs.a_;
    } else if (lr) {
        r.a_ = a_ * rhs.a_;
        r.b_ = a_ * rhs.b_;
    } else if (rr) {
        r.a_ = a_ * rhs.a_;
        r.b_ = b_ * rhs.a_;
    } else {
        r.a_ = a_ * rhs.a_ + b_ * rhs.b_ * RationalFunction(*r.disc_);
        r.b_ = a_ * rhs.b_ + b_ * rhs.a_;
    }
    return r;
}

QuadExtScalar QuadExtScalar::operator*(const Rational& scale) const {
    QuadExtScalar r = *this;
    r.a_ = a_ * scale;
    r.b_ = b_ * scale;
    return r;
}

QuadExtScalar QuadExtScalar::conjugate() const {
    QuadExtScalar r = *this;
    r.b_ = -b_;
    return r;
}

RationalFunction QuadExtScalar::norm() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - b_ * b_ * RationalFunction(*disc_);
}

QuadExtScalar QuadExtScalar::inverse() const {
    if (b_.is_zero()) {
        QuadExtScalar r(a_.inverse());
        r.disc_ = disc_;
        return r;
    }
    const RationalFunction n = norm();
    if (n.is_zero()) throw EvaluationError("inverse of a zero divisor in the quadratic extension");
    const RationalFunction inv = n.inverse();
    QuadExtScalar r(context());
    r.disc_ = disc_;
    r.a_ = a_ * inv;
    r.b_ = -(b_ * inv);
    return r;
}

QuadExtScalar QuadExtScalar::operator/(const QuadExtScalar& rhs) const {
    if (rhs.b_.is_zero()) {
        QuadExtScalar r(context());
        r.disc_ = unify(rhs);
        const RationalFunction inv = rhs.a_.inverse();
        r.a_ = a_ * inv;
        r.b_ = b_ * inv;
        return r;
    }
    return *this * rhs.inverse();
}

QuadExtScalar QuadExtScalar::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    QuadExtScalar result = constant(context(), 1);
    result.disc_ = disc_;
    QuadExtScalar base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

QuadExtScalar QuadExtScalar::derivative(std::size_t var) const {
    QuadExtScalar r(context());
    r.disc_ = disc_;
    r.a_ = a_.derivative(var);
    if (b_.is_zero()) return r;
    RationalFunction db = b_.derivative(var);
    const Polynomial dd = disc_->derivative(var);
    if (!dd.is_zero()) db += b_ * RationalFunction::fraction(dd, *disc_) * Rational(1, 2);
    r.b_ = std::move(db);
    return r;
}

QuadExtScalar QuadExtScalar::embed(const Context& larger) const {
    QuadExtScalar r(a_.embed(larger));
    r.b_ = b_.embed(larger);
    if (disc_) r.disc_ = std::make_shared<const Polynomial>(disc_->embed(larger));
    return r;
}

std::string QuadExtScalar::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::ostringstream os;
    if (!a_.is_zero()) os << '(' << a_.to_string() << ") + ";
    os << '(' << b_.to_string() << ")*sqrt(" << disc_->to_string() << ')';
    return os.str();
}

RationalFunction require_rational(const QuadExtScalar& value) {
    if (value.has_radical()) throw Error("expected a rational scalar, found radical part " + value.to_string());
    return value.rational_part();
}

namespace detail {

template <>
double real_sqrt<double>(const double& value) {
    if (value < 0) throw EvaluationError("negative discriminant in real evaluation");
    return std::sqrt(value);
}

template <>
long double real_sqrt<long double>(const long double& value) {
    if (value < 0) throw EvaluationError("negative discriminant in real evaluation");
    return std::sqrt(value);
}

template <>
std::complex<double> real_sqrt<std::complex<double>>(const std::complex<double>& value) {
    return std::sqrt(value);
}

template <>
Rational real_sqrt<Rational>(const Rational& value) {
    Rational root;
    if (!exact_sqrt(value, root)) throw EvaluationError("discriminant value is not a rational square");
    return root;
}

} // namespace detail

} // namespace haantjes
