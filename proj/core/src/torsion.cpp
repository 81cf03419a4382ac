#include "haantjes/torsion.hpp"

#include <vector>

namespace haantjes {

namespace {

// d[b][i*4+j] = d L(i,j) / d x^b.
using Derivatives = std::vector<std::vector<Scalar>>;

Derivatives derivatives(const Tensor11& l, const Chart& chart) {
    const Context& ctx = l.context();
    Derivatives d(4, std::vector<Scalar>(16, Scalar(ctx)));
    for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) d[b][4 * i + j] = l(i, j).derivative(chart.variable(b));
        }
    }
    return d;
}

void accumulate(Scalar& sum, const Scalar& a, const Scalar& b) {
    if (!a.is_zero() && !b.is_zero()) sum += a * b;
}

} // namespace

Torsion3::Torsion3(const Context& ctx)
    : c_(64, Scalar(ctx)) {}

Torsion3 nijenhuis_torsion(const Tensor11& l, const Chart& chart) {
    const Derivatives d = derivatives(l, chart);
    Torsion3 t(l.context());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = j + 1; k < 4; ++k) {
                Scalar s(l.context());
                for (std::size_t a = 0; a < 4; ++a) {
                    accumulate(s, d[a][4 * i + k], l(a, j));
                    accumulate(s, -d[a][4 * i + j], l(a, k));
                    const Scalar cross = d[k][4 * a + j] - d[j][4 * a + k];
                    accumulate(s, cross, l(i, a));
                }
                t(i, k, j) = -s;
                t(i, j, k) = std::move(s);
            }
        }
    }
    return t;
}

Torsion3 haantjes_torsion(const Tensor11& l, const Chart& chart) {
    const Context& ctx = l.context();
    const Tensor11 l2 = l * l;
    const Tensor11 l3 = l2 * l;
    const Derivatives d1 = derivatives(l, chart);
    const Derivatives d2 = derivatives(l2, chart);
    Torsion3 t(ctx);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = j + 1; k < 4; ++k) {
                Scalar s(ctx);
                for (std::size_t a = 0; a < 4; ++a) {
                    // -2 (L^3)^i_a d_[j L^a_k]
                    accumulate(s, l3(i, a) * Rational(-2), d1[j][4 * a + k] - d1[k][4 * a + j]);
                    // (L^2)^i_a ( d_[j (L^2)^a_k] + 4 L^b_[j d_b L^a_k] )
                    Scalar inner = d2[j][4 * a + k] - d2[k][4 * a + j];
                    for (std::size_t b = 0; b < 4; ++b) {
                        Scalar x(ctx);
                        accumulate(x, l(b, j), d1[b][4 * a + k]);
                        accumulate(x, -l(b, k), d1[b][4 * a + j]);
                        if (!x.is_zero()) inner += x * Rational(4);
                    }
                    accumulate(s, l2(i, a), inner);
                    // -2 L^i_a ( L^b_[j d_b (L^2)^a_k] + (L^2)^b_[j d_b L^a_k] )
                    Scalar third(ctx);
                    for (std::size_t b = 0; b < 4; ++b) {
                        accumulate(third, l(b, j), d2[b][4 * a + k]);
                        accumulate(third, -l(b, k), d2[b][4 * a + j]);
                        accumulate(third, l2(b, j), d1[b][4 * a + k]);
                        accumulate(third, -l2(b, k), d1[b][4 * a + j]);
                    }
                    accumulate(s, l(i, a) * Rational(-2), third);
                    // (L^2)^a_[j d_a (L^2)^i_k]
                    accumulate(s, l2(a, j), d2[a][4 * i + k]);
                    accumulate(s, -l2(a, k), d2[a][4 * i + j]);
                }
                t(i, k, j) = -s;
                t(i, j, k) = std::move(s);
            }
        }
    }
    return t;
}

Torsion3 haantjes_torsion_invariant(const Tensor11& l, const Chart& chart) {
    const Context& ctx = l.context();
    const Torsion3 n = nijenhuis_torsion(l, chart);
    const Tensor11 l2 = l * l;
    Torsion3 t(ctx);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = j + 1; k < 4; ++k) {
                Scalar s(ctx);
                for (std::size_t a = 0; a < 4; ++a) {
                    accumulate(s, l2(i, a), n(a, j, k));
                    for (std::size_t b = 0; b < 4; ++b) {
                        if (!n(i, a, b).is_zero()) accumulate(s, n(i, a, b), l(a, j) * l(b, k));
                        Scalar x(ctx);
                        accumulate(x, n(a, j, b), l(b, k));
                        accumulate(x, n(a, b, k), l(b, j));
                        accumulate(s, -l(i, a), x);
                    }
                }
                t(i, k, j) = -s;
                t(i, j, k) = std::move(s);
            }
        }
    }
    return t;
}

bool is_zero(const Torsion3& t, const Relations& relations) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (!is_zero(t(i, j, k), relations)) return false;
            }
        }
    }
    return true;
}

bool is_antisymmetric(const Torsion3& t) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (!(t(i, j, k) + t(i, k, j)).is_zero()) return false;
            }
        }
    }
    return true;
}

std::string residual_head(const Torsion3& t) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (!t(i, j, k).is_zero()) {
                    return "component (" + std::to_string(i) + ";" + std::to_string(j) + "," + std::to_string(k) +
                           "): " + residual_head(t(i, j, k));
                }
            }
        }
    }
    return "0";
}

} // namespace haantjes
