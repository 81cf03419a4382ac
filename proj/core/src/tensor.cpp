#include "haantjes/tensor.hpp"

#include <sstream>

namespace haantjes {

Tensor11::Tensor11(Context context)
    : m_{Scalar(context), Scalar(context), Scalar(context), Scalar(context), Scalar(context), Scalar(context),
         Scalar(context), Scalar(context), Scalar(context), Scalar(context), Scalar(context), Scalar(context),
         Scalar(context), Scalar(context), Scalar(context), Scalar(context)} {}

Tensor11 Tensor11::identity(const Context& ctx) {
    Tensor11 t(ctx);
    for (std::size_t i = 0; i < 4; ++i) t(i, i) = Scalar::constant(ctx, 1);
    return t;
}

Tensor11 Tensor11::diagonal(const std::array<Scalar, 4>& entries) {
    Tensor11 t(entries[0].context());
    for (std::size_t i = 0; i < 4; ++i) t(i, i) = entries[i];
    return t;
}

Tensor11 Tensor11::from_rows(const std::array<std::array<Scalar, 4>, 4>& rows) {
    Tensor11 t(rows[0][0].context());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) t(i, j) = rows[i][j];
    }
    return t;
}

Tensor11 Tensor11::operator+(const Tensor11& rhs) const {
    Tensor11 t = *this;
    for (std::size_t i = 0; i < 16; ++i) t.m_[i] += rhs.m_[i];
    return t;
}

Tensor11 Tensor11::operator-(const Tensor11& rhs) const {
    Tensor11 t = *this;
    for (std::size_t i = 0; i < 16; ++i) t.m_[i] -= rhs.m_[i];
    return t;
}

Tensor11 Tensor11::operator*(const Tensor11& rhs) const {
    Tensor11 t(context());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                const Scalar& b = rhs(k, j);
                if (!b.is_zero()) t(i, j) += a * b;
            }
        }
    }
    return t;
}

Tensor11 Tensor11::transpose() const {
    Tensor11 t(context());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
    }
    return t;
}

Scalar Tensor11::trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

Vector4 Tensor11::apply(const Vector4& x) const {
    Vector4 out = zero_form(context());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (!(*this)(i, j).is_zero() && !x[j].is_zero()) out[i] += (*this)(i, j) * x[j];
        }
    }
    return out;
}

OneForm Tensor11::transpose_apply(const OneForm& alpha) const {
    OneForm out = zero_form(context());
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (!(*this)(i, j).is_zero() && !alpha[i].is_zero()) out[j] += (*this)(i, j) * alpha[i];
        }
    }
    return out;
}

Tensor11 Tensor11::map(const std::function<Scalar(const Scalar&)>& f) const {
    Tensor11 t = *this;
    for (auto& e : t.m_) e = f(e);
    return t;
}

std::string Tensor11::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < 4; ++i) {
        os << '[';
        for (std::size_t j = 0; j < 4; ++j) os << (j ? " ; " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

Tensor11 operator*(const Scalar& s, const Tensor11& t) {
    return t.map([&s](const Scalar& e) { return e.is_zero() ? e : s * e; });
}

bool is_zero(const Tensor11& t, const Relations& relations) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (!is_zero(t(i, j), relations)) return false;
        }
    }
    return true;
}

bool equal(const Tensor11& a, const Tensor11& b, const Relations& relations) { return is_zero(a - b, relations); }

Tensor11 reduce(const Tensor11& t, const Relations& relations) {
    return t.map([&relations](const Scalar& e) { return reduce(e, relations); });
}

Tensor11 specialize(const Tensor11& t, const Bindings& bindings) {
    return t.map([&bindings](const Scalar& e) { return specialize(e, bindings); });
}

std::string residual_head(const Tensor11& t) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (!t(i, j).is_zero()) {
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + residual_head(t(i, j));
            }
        }
    }
    return "0";
}

Block2 block(const Tensor11& k, std::size_t row, std::size_t col) {
    const std::size_t r = 2 * row;
    const std::size_t c = 2 * col;
    return Block2{{k(r, c), k(r, c + 1), k(r + 1, c), k(r + 1, c + 1)}};
}

Tensor11 compatibility_residual(const Tensor11& k) {
    const Context& ctx = k.context();
    // Omega(X) = omega(X, .) for omega = sum dq^i ^ dp_i: Omega = (0 I; -I 0).
    Tensor11 omega(ctx);
    omega(0, 2) = Scalar::constant(ctx, 1);
    omega(1, 3) = Scalar::constant(ctx, 1);
    omega(2, 0) = Scalar::constant(ctx, -1);
    omega(3, 1) = Scalar::constant(ctx, -1);
    return omega * k - k.transpose() * omega;
}

VerificationReport check_symplectic_compatibility(const Tensor11& k, const Relations& relations) {
    VerificationReport report;
    report.suite = "compatibility";
    const Tensor11 residual = compatibility_residual(k);
    report.add(exact_check("omega_k", "Omega K = K^T Omega", is_zero(residual, relations), residual_head(residual)));
    const Block2 a = block(k, 0, 0);
    const Block2 b = block(k, 0, 1);
    const Block2 c = block(k, 1, 0);
    const Block2 d = block(k, 1, 1);
    const Context& ctx = k.context();
    Scalar worst(ctx);
    bool ok = true;
    auto check = [&](const Scalar& s) {
        if (!is_zero(s, relations)) {
            if (ok) worst = s;
            ok = false;
        }
    };
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            check(d(i, j) - a(j, i));
            check(b(i, j) + b(j, i));
            check(c(i, j) + c(j, i));
        }
    }
    report.add(exact_check("block_form", "K = (A B; C A^T) with B, C skew", ok, residual_head(worst)));
    return report;
}

bool is_lift_form(const Tensor11& k, const Relations& relations) {
    const Block2 b = block(k, 0, 1);
    for (const auto& e : b.m) {
        if (!is_zero(e, relations)) return false;
    }
    return true;
}

OneForm chain_residual(const Tensor11& k, const Scalar& h, const Scalar& integral, const Chart& chart) {
    return k.transpose_apply(differential(h, chart)) - differential(integral, chart);
}

Tensor11 nijenhuis_generator(const Tensor11& k) {
    const Scalar half_trace = k.trace() * Rational(1, 2);
    return k - half_trace * Tensor11::identity(k.context());
}

Tensor11 exchange_symmetry(const Tensor11& k, const Chart& chart) {
    const Context& ctx = k.context();
    std::vector<Scalar> table = identity_substitution(ctx);
    table[chart.q[0]] = Scalar(RationalFunction::variable(ctx, chart.q[1]));
    table[chart.q[1]] = Scalar(RationalFunction::variable(ctx, chart.q[0]));
    table[chart.p[0]] = Scalar(RationalFunction::variable(ctx, chart.p[1]));
    table[chart.p[1]] = Scalar(RationalFunction::variable(ctx, chart.p[0]));
    static constexpr std::array<std::size_t, 4> swap{1, 0, 3, 2};
    Tensor11 out(ctx);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out(swap[i], swap[j]) = substitute(k(i, j), table);
    }
    return out;
}

CheckResult commute_check(const Tensor11& k1, const Tensor11& k2, const Relations& relations, bool judge) {
    const Tensor11 residual = k1 * k2 - k2 * k1;
    const bool zero = is_zero(residual, relations);
    if (!judge) {
        return recorded("commutator", "K1 K2 - K2 K1", zero ? "commute" : "do not commute: " + residual_head(residual));
    }
    return exact_check("commutator", "K1 K2 = K2 K1", zero, residual_head(residual));
}

} // namespace haantjes
