#include "haantjes/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "haantjes/errors.hpp"

namespace haantjes {

Monomial Monomial::variable(std::size_t index, unsigned power) {
    if (index >= kMaxVariables) throw Error("variable index out of range");
    if (power > 255) throw Error("exponent overflow");
    Monomial m;
    m.exponents[index] = static_cast<std::uint8_t>(power);
    m.degree = static_cast<std::uint16_t>(power);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = unsigned(exponents[i]) + other.exponents[i];
        if (e > 255) throw Error("exponent overflow");
        out.exponents[i] = static_cast<std::uint8_t>(e);
    }
    out.degree = static_cast<std::uint16_t>(degree + other.degree);
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree > other.degree) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (exponents[i] > other.exponents[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        out.exponents[i] = static_cast<std::uint8_t>(other.exponents[i] - exponents[i]);
    }
    out.degree = static_cast<std::uint16_t>(other.degree - degree);
    return out;
}

std::optional<Monomial> Monomial::sqrt() const noexcept {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (exponents[i] % 2 != 0) return std::nullopt;
        out.exponents[i] = static_cast<std::uint8_t>(exponents[i] / 2);
    }
    out.degree = static_cast<std::uint16_t>(degree / 2);
    return out;
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    const int c = std::memcmp(a.exponents.data(), b.exponents.data(), kMaxVariables);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::string_view bytes(reinterpret_cast<const char*>(m.exponents.data()), kMaxVariables);
    return std::hash<std::string_view>{}(bytes);
}

namespace {

bool term_greater(const Term& a, const Term& b) {
    return graded_lex(a.monomial, b.monomial) == std::strong_ordering::greater;
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coefficient += t.coefficient;
        } else {
            if (!out.empty() && sgn(out.back().coefficient) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coefficient) == 0) out.pop_back();
    return out;
}

// Merge two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_greater(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_greater(b[j], a[i])) {
            Term t = b[j++];
            if (sign < 0) t.coefficient = -t.coefficient;
            out.push_back(std::move(t));
        } else {
            Rational c = sign < 0 ? Rational(a[i].coefficient - b[j].coefficient)
                                  : Rational(a[i].coefficient + b[j].coefficient);
            if (sgn(c) != 0) out.push_back(Term{a[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial::Polynomial(Context context) : context_(std::move(context)) {
    if (!context_) throw Error("null context");
}

Polynomial::Polynomial(Context context, std::vector<Term> sorted_terms)
    : context_(std::move(context)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Context context, const Rational& value) {
    Polynomial p(std::move(context));
    if (sgn(value) != 0) p.terms_.push_back(Term{Monomial{}, value});
    return p;
}

Polynomial Polynomial::variable(Context context, std::size_t index, unsigned power) {
    if (index >= context->size()) throw Error("variable index out of range");
    Polynomial p(std::move(context));
    p.terms_.push_back(Term{Monomial::variable(index, power), Rational(1)});
    return p;
}

Polynomial Polynomial::variable(Context context, std::string_view name, unsigned power) {
    const std::size_t index = context->index(name);
    return variable(std::move(context), index, power);
}

Polynomial Polynomial::from_terms(Context context, std::vector<Term> terms) {
    return Polynomial(std::move(context), canonicalize(std::move(terms)));
}

void Polynomial::require_same_context(const Polynomial& other) const {
    if (context_ != other.context_) throw ContextMismatch();
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_.front().coefficient;
    return std::nullopt;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::total_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.front().monomial.degree;
}

int Polynomial::degree_in(std::size_t var) const noexcept {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, int(t.monomial[var]));
    return d;
}

bool Polynomial::depends_on(std::size_t var) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.monomial[var] != 0; });
}

std::vector<std::size_t> Polynomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < context_->size(); ++v) {
        if (depends_on(v)) out.push_back(v);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coefficient = -x.coefficient;
    return Polynomial(context_, std::move(t));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_context(rhs);
    return Polynomial(context_, merge(terms_, rhs.terms_, +1));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_context(rhs);
    return Polynomial(context_, merge(terms_, rhs.terms_, -1));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_context(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(context_);
    const Polynomial& small = size() <= rhs.size() ? *this : rhs;
    const Polynomial& large = size() <= rhs.size() ? rhs : *this;
    if (small.size() == 1) {
        const Term& s = small.terms_.front();
        std::vector<Term> out;
        out.reserve(large.size());
        // Multiplying by a monomial preserves the order.
        for (const auto& t : large.terms_) {
            out.push_back(Term{t.monomial * s.monomial, t.coefficient * s.coefficient});
        }
        return Polynomial(context_, std::move(out));
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(small.size() * large.size());
    Rational product;
    for (const auto& a : small.terms_) {
        for (const auto& b : large.terms_) {
            product = a.coefficient * b.coefficient;
            auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, product);
            if (!inserted) it->second += product;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
    }
    std::sort(out.begin(), out.end(), term_greater);
    return Polynomial(context_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& scale) const {
    if (sgn(scale) == 0) return Polynomial(context_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coefficient *= scale;
    return Polynomial(context_, std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(context_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= context_->size()) throw Error("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const unsigned e = t.monomial[var];
        if (e == 0) continue;
        Term d = t;
        d.monomial.exponents[var] = static_cast<std::uint8_t>(e - 1);
        d.monomial.degree = static_cast<std::uint16_t>(d.monomial.degree - 1);
        d.coefficient *= e;
        out.push_back(std::move(d));
    }
    return from_terms(context_, std::move(out));
}

Polynomial Polynomial::coefficient(std::size_t var, unsigned power) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.monomial[var] != power) continue;
        Term c = t;
        c.monomial.exponents[var] = 0;
        c.monomial.degree = static_cast<std::uint16_t>(c.monomial.degree - power);
        out.push_back(std::move(c));
    }
    return from_terms(context_, std::move(out));
}

Polynomial Polynomial::coefficient(const Monomial& in_vars, std::span<const std::size_t> vars) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        bool match = true;
        for (auto v : vars) {
            if (t.monomial[v] != in_vars[v]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        Term c = t;
        for (auto v : vars) {
            c.monomial.degree = static_cast<std::uint16_t>(c.monomial.degree - c.monomial.exponents[v]);
            c.monomial.exponents[v] = 0;
        }
        out.push_back(std::move(c));
    }
    return from_terms(context_, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
    require_same_context(value);
    const int maxdeg = degree_in(var);
    if (maxdeg <= 0) return *this;
    std::vector<Polynomial> powers;
    powers.push_back(constant(context_, 1));
    for (int k = 1; k <= maxdeg; ++k) powers.push_back(powers.back() * value);
    Polynomial result(context_);
    for (int k = 0; k <= maxdeg; ++k) {
        Polynomial c = coefficient(var, static_cast<unsigned>(k));
        if (!c.is_zero()) result += c * powers[static_cast<std::size_t>(k)];
    }
    return result;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
    require_same_context(divisor);
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return Polynomial(context_);
    const Term& lead = divisor.terms_.front();
    if (divisor.size() == 1) {
        std::vector<Term> out;
        out.reserve(size());
        for (const auto& t : terms_) {
            if (!lead.monomial.divides(t.monomial)) return std::nullopt;
            out.push_back(Term{lead.monomial.quotient_of(t.monomial), t.coefficient / lead.coefficient});
        }
        return Polynomial(context_, std::move(out));
    }
    // Cheap rejections: degrees per variable must be compatible.
    for (std::size_t v = 0; v < context_->size(); ++v) {
        if (divisor.degree_in(v) > degree_in(v)) return std::nullopt;
    }
    std::vector<Term> quotient;
    Polynomial rem = *this;
    while (!rem.is_zero()) {
        const Term& r = rem.terms_.front();
        if (!lead.monomial.divides(r.monomial)) return std::nullopt;
        Term q{lead.monomial.quotient_of(r.monomial), r.coefficient / lead.coefficient};
        Polynomial qp(context_, {q});
        rem -= divisor * qp;
        quotient.push_back(std::move(q));
    }
    return from_terms(context_, std::move(quotient));
}

bool exact_sqrt(const Rational& value, Rational& root) {
    if (sgn(value) < 0) return false;
    mpz_class n = value.get_num();
    mpz_class d = value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

std::optional<Polynomial> Polynomial::exact_sqrt() const {
    if (is_zero()) return Polynomial(context_);
    const Term& lead = terms_.front();
    auto mroot = lead.monomial.sqrt();
    Rational croot;
    if (!mroot || !haantjes::exact_sqrt(lead.coefficient, croot)) return std::nullopt;
    Term first{*mroot, croot};
    Polynomial root(context_, {first});
    Polynomial rem = *this - root * root;
    const Term twice_lead{first.monomial, first.coefficient * 2};
    while (!rem.is_zero()) {
        const Term& r = rem.terms_.front();
        if (!twice_lead.monomial.divides(r.monomial)) return std::nullopt;
        Term next{twice_lead.monomial.quotient_of(r.monomial), r.coefficient / twice_lead.coefficient};
        // The next root term must sit strictly below the previous ones.
        if (graded_lex(next.monomial, root.terms_.back().monomial) != std::strong_ordering::less) {
            return std::nullopt;
        }
        Polynomial t(context_, {next});
        rem -= (root * Rational(2) + t) * t;
        root.terms_.push_back(std::move(next));
    }
    return root;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational inv = 1 / leading_coefficient();
    return *this * inv;
}

Polynomial Polynomial::embed(const Context& larger) const {
    if (!context_->embeds_into(*larger)) throw ContextMismatch();
    return Polynomial(larger, terms_);
}

namespace {

void append_rational(std::ostringstream& os, const Rational& c) {
    os << c.get_num();
    if (c.get_den() != 1) os << '/' << c.get_den();
}

} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool wrote = false;
        if (t.monomial.is_one() || c != 1) {
            append_rational(os, c);
            wrote = true;
        }
        for (std::size_t v = 0; v < context_->size(); ++v) {
            const unsigned e = t.monomial[v];
            if (e == 0) continue;
            if (wrote) os << '*';
            os << context_->name(v);
            if (e > 1) os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

std::size_t Polynomial::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        h ^= MonomialHash{}(t.monomial) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.coefficient.get_str()) + (h << 6) + (h >> 2);
    }
    return h;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.context_ != b.context_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    }
    return true;
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
    const auto ta = a.terms();
    const auto tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = graded_lex(ta[i].monomial, tb[i].monomial); c != 0) return c;
        const int cc = cmp(ta[i].coefficient, tb[i].coefficient);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return ta.size() <=> tb.size();
}

} // namespace haantjes
