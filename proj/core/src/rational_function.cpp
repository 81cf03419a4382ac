#include "haantjes/rational_function.hpp"

#include <algorithm>
#include <sstream>

namespace haantjes {

namespace {

bool factor_less(const Factor& a, const Factor& b) { return compare(a.base, b.base) < 0; }

// Merge two sorted factor lists, combining exponents with `op`.
template <class Op>
std::vector<Factor> merge_factors(std::span<const Factor> a, std::span<const Factor> b, Op op) {
    std::vector<Factor> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && factor_less(a[i], b[j]))) {
            out.push_back(Factor{a[i].base, op(a[i].exponent, 0)});
            ++i;
        } else if (i == a.size() || factor_less(b[j], a[i])) {
            out.push_back(Factor{b[j].base, op(0, b[j].exponent)});
            ++j;
        } else {
            out.push_back(Factor{a[i].base, op(a[i].exponent, b[j].exponent)});
            ++i;
            ++j;
        }
    }
    std::erase_if(out, [](const Factor& f) { return f.exponent == 0; });
    return out;
}

Polynomial product_of(const Context& ctx, std::span<const Factor> factors) {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& f : factors) p *= f.base.pow(static_cast<unsigned>(f.exponent));
    return p;
}

// Product of the factors of `full` divided by those of `part` (part <= full).
Polynomial cofactor(const Context& ctx, std::span<const Factor> full, std::span<const Factor> part) {
    auto diff = merge_factors(full, part, [](int x, int y) { return x - y; });
    return product_of(ctx, diff);
}

} // namespace

RationalFunction::RationalFunction(Context context) : num_(std::move(context)) {}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(Polynomial numerator, std::vector<Factor> denominator, bool normalized)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (!normalized) normalize();
    cancel();
}

RationalFunction RationalFunction::constant(Context context, const Rational& value) {
    return RationalFunction(Polynomial::constant(std::move(context), value));
}

RationalFunction RationalFunction::variable(Context context, std::string_view name) {
    return RationalFunction(Polynomial::variable(std::move(context), name));
}

RationalFunction RationalFunction::variable(Context context, std::size_t index) {
    return RationalFunction(Polynomial::variable(std::move(context), index));
}

RationalFunction RationalFunction::fraction(Polynomial numerator, const Polynomial& denominator) {
    if (numerator.context() != denominator.context()) throw ContextMismatch();
    return RationalFunction(std::move(numerator), {Factor{denominator, 1}}, false);
}

RationalFunction RationalFunction::from_parts(Polynomial numerator, std::vector<Factor> denominator) {
    for (const auto& f : denominator) {
        if (f.base.context() != numerator.context()) throw ContextMismatch();
        if (f.exponent < 0) throw Error("negative denominator exponent");
    }
    return RationalFunction(std::move(numerator), std::move(denominator), false);
}

void RationalFunction::normalize() {
    const Context& ctx = num_.context();
    std::vector<Factor> out;
    Rational scale(1);
    for (auto& f : den_) {
        if (f.exponent == 0) continue;
        if (f.base.is_zero()) throw EvaluationError("zero denominator factor");
        if (f.base.is_constant()) {
            Rational c = *f.base.constant_value();
            for (int e = 0; e < f.exponent; ++e) scale *= c;
            continue;
        }
        const Rational lc = f.base.leading_coefficient();
        for (int e = 0; e < f.exponent; ++e) scale *= lc;
        if (f.base.is_monomial()) {
            const Monomial& m = f.base.leading_term().monomial;
            for (std::size_t v = 0; v < ctx->size(); ++v) {
                if (m[v] != 0) out.push_back(Factor{Polynomial::variable(ctx, v), int(m[v]) * f.exponent});
            }
        } else {
            out.push_back(Factor{f.base.monic(), f.exponent});
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    std::vector<Factor> merged;
    for (auto& f : out) {
        if (!merged.empty() && merged.back().base == f.base) {
            merged.back().exponent += f.exponent;
        } else {
            merged.push_back(std::move(f));
        }
    }
    den_ = std::move(merged);
    if (scale != 1) num_ = num_ * Rational(1 / scale);
}

void RationalFunction::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.exponent > 0) {
            auto q = num_.exact_divide(f.base);
            if (!q) break;
            num_ = std::move(*q);
            --f.exponent;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.exponent == 0; });
}

Polynomial RationalFunction::denominator_product() const { return product_of(context(), den_); }

std::optional<Rational> RationalFunction::constant_value() const {
    if (!den_.empty()) return std::nullopt;
    return num_.constant_value();
}

bool RationalFunction::depends_on(std::size_t var) const noexcept {
    if (num_.depends_on(var)) return true;
    return std::any_of(den_.begin(), den_.end(), [var](const Factor& f) { return f.base.depends_on(var); });
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    if (context() != rhs.context()) throw ContextMismatch();
    if (rhs.is_zero()) return *this;
    if (is_zero()) return rhs;
    const bool same_den = den_.size() == rhs.den_.size() &&
                          std::equal(den_.begin(), den_.end(), rhs.den_.begin(), [](const Factor& a, const Factor& b) {
                              return a.exponent == b.exponent && a.base == b.base;
                          });
    if (same_den) return RationalFunction(num_ + rhs.num_, den_, true);
    auto lcm = merge_factors(den_, rhs.den_, [](int x, int y) { return std::max(x, y); });
    Polynomial n = num_ * cofactor(context(), lcm, den_) + rhs.num_ * cofactor(context(), lcm, rhs.den_);
    return RationalFunction(std::move(n), std::move(lcm), true);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return *this + (-rhs); }

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    if (context() != rhs.context()) throw ContextMismatch();
    if (is_zero() || rhs.is_zero()) return RationalFunction(context());
    // Each operand is already reduced against its own factors; cancel across.
    RationalFunction a(num_, rhs.den_, true);
    RationalFunction b(rhs.num_, den_, true);
    auto den = merge_factors(a.den_, b.den_, [](int x, int y) { return x + y; });
    return RationalFunction(a.num_ * b.num_, std::move(den), true);
}

RationalFunction RationalFunction::operator*(const Rational& scale) const {
    if (sgn(scale) == 0) return RationalFunction(context());
    RationalFunction r = *this;
    r.num_ = r.num_ * scale;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw EvaluationError("inverse of zero");
    return RationalFunction(denominator_product(), {Factor{num_, 1}}, false);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const { return *this * rhs.inverse(); }

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction r = *this;
    r.num_ = num_.pow(static_cast<unsigned>(exponent));
    for (auto& f : r.den_) f.exponent *= exponent;
    std::erase_if(r.den_, [](const Factor& f) { return f.exponent == 0; });
    return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    // d(n / prod f^e) = (n' F - n sum e f' F/f) / (prod f^e * F), F = prod of the
    // factors that involve var.
    std::vector<std::size_t> moving;
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (den_[i].base.depends_on(var)) moving.push_back(i);
    }
    if (moving.empty()) return RationalFunction(num_.derivative(var), den_, true);
    const Context& ctx = context();
    Polynomial big_f = Polynomial::constant(ctx, 1);
    for (auto i : moving) big_f *= den_[i].base;
    Polynomial numerator = num_.derivative(var) * big_f;
    for (auto i : moving) {
        Polynomial others = Polynomial::constant(ctx, 1);
        for (auto j : moving) {
            if (j != i) others *= den_[j].base;
        }
        numerator -= num_ * den_[i].base.derivative(var) * others * Rational(den_[i].exponent);
    }
    std::vector<Factor> den = den_;
    for (auto i : moving) den[i].exponent += 1;
    return RationalFunction(std::move(numerator), std::move(den), true);
}

RationalFunction RationalFunction::coefficient(std::size_t var, unsigned power) const {
    for (const auto& f : den_) {
        if (f.base.depends_on(var)) throw Error("coefficient extraction through a denominator");
    }
    return RationalFunction(num_.coefficient(var, power), den_, true);
}

RationalFunction RationalFunction::embed(const Context& larger) const {
    std::vector<Factor> den;
    for (const auto& f : den_) den.push_back(Factor{f.base.embed(larger), f.exponent});
    return RationalFunction(num_.embed(larger), std::move(den), true);
}

std::string RationalFunction::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << '(' << num_.to_string() << ")/(";
    bool first = true;
    for (const auto& f : den_) {
        if (!first) os << '*';
        first = false;
        const bool single_var = f.base.is_monomial();
        if (single_var) {
            os << f.base.to_string();
        } else {
            os << '(' << f.base.to_string() << ')';
        }
        if (f.exponent > 1) os << '^' << f.exponent;
    }
    os << ')';
    return os.str();
}

bool equal(const RationalFunction& a, const RationalFunction& b) {
    if (a.context() != b.context()) throw ContextMismatch();
    Polynomial lhs = a.numerator() * b.denominator_product();
    Polynomial rhs = b.numerator() * a.denominator_product();
    return (lhs - rhs).is_zero();
}

} // namespace haantjes
