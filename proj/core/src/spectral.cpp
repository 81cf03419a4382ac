#include "haantjes/spectral.hpp"

#include <optional>

namespace haantjes {

namespace {

Scalar minor2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) { return a * d - b * c; }

// Normalizes a kernel vector: shared denominators cleared, first nonzero
// rational coefficient scaled to one.
OneForm normalize(const OneForm& v) {
    const Context& ctx = v[0].context();
    std::vector<RationalFunction> parts;
    for (const auto& e : v) {
        parts.push_back(e.rational_part());
        parts.push_back(e.radical_part());
    }
    const std::vector<Polynomial> cleared = clear_denominators(parts);
    std::shared_ptr<const Polynomial> disc;
    for (const auto& e : v) {
        if (e.has_radical()) disc = e.discriminant();
    }
    OneForm out = zero_form(ctx);
    std::optional<Rational> lead;
    for (std::size_t i = 0; i < 4 && !lead; ++i) {
        if (!cleared[2 * i].is_zero()) lead = cleared[2 * i].leading_coefficient();
        else if (!cleared[2 * i + 1].is_zero()) lead = cleared[2 * i + 1].leading_coefficient();
    }
    const Rational scale = lead ? Rational(1) / *lead : Rational(1);
    for (std::size_t i = 0; i < 4; ++i) {
        const Polynomial a = cleared[2 * i] * scale;
        const Polynomial b = cleared[2 * i + 1] * scale;
        out[i] = b.is_zero() ? Scalar(a) : Scalar(RationalFunction(a), RationalFunction(b), *disc);
    }
    return out;
}

} // namespace

std::array<Scalar, 2> quadratic_roots(const Scalar& sum, const Scalar& product, const Relations& relations) {
    const RationalFunction disc = reduce(require_rational(sum * sum - product * Rational(4)), relations);
    const Context& ctx = sum.context();
    Scalar root(ctx);
    if (!disc.is_zero()) {
        const Polynomial den = disc.denominator_product();
        const Polynomial radicand = disc.numerator() * den;
        if (auto exact = radicand.exact_sqrt()) {
            root = Scalar(RationalFunction::fraction(*exact, den));
        } else {
            root = Scalar(RationalFunction(ctx), RationalFunction::fraction(Polynomial::constant(ctx, 1), den),
                          radicand);
        }
    }
    const Scalar base = reduce(sum, relations);
    return {(base + root) * Rational(1, 2), (base - root) * Rational(1, 2)};
}

Scalar determinant(const Tensor11& m) {
    // Laplace expansion along the first two rows by 2x2 minors.
    static constexpr std::array<std::array<std::size_t, 2>, 6> pairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    Scalar det(m.context());
    for (std::size_t a = 0; a < 6; ++a) {
        const auto [c0, c1] = pairs[a];
        const auto [d0, d1] = pairs[5 - a];
        const Scalar top = minor2(m(0, c0), m(0, c1), m(1, c0), m(1, c1));
        if (top.is_zero()) continue;
        const Scalar bottom = minor2(m(2, d0), m(2, d1), m(3, d0), m(3, d1));
        if (bottom.is_zero()) continue;
        // Sign of the permutation (c0 c1 d0 d1).
        const int inversions = (c0 > d0) + (c0 > d1) + (c1 > d0) + (c1 > d1);
        det += (inversions % 2 == 0 ? top : -top) * bottom;
    }
    return det;
}

Scalar characteristic_polynomial(const Tensor11& k) {
    const Context& ctx = k.context();
    const Scalar lam = Scalar::variable(ctx, "lam");
    return determinant(k - lam * Tensor11::identity(ctx));
}

std::vector<Eigenvalue> eigen_data(const Tensor11& k, const Relations& relations) {
    const Context& ctx = k.context();
    std::array<Scalar, 2> roots{Scalar(ctx), Scalar(ctx)};
    if (is_lift_form(k, relations)) {
        const Block2 a = block(k, 0, 0);
        roots = quadratic_roots(a(0, 0) + a(1, 1), minor2(a(0, 0), a(0, 1), a(1, 0), a(1, 1)), relations);
    } else {
        const RationalFunction chi = reduce(require_rational(characteristic_polynomial(k)), relations);
        const Polynomial den = chi.denominator_product();
        const std::optional<Polynomial> root = (chi.numerator() * den).exact_sqrt();
        if (!root) throw Error("characteristic polynomial is not the square of a quadratic");
        const RationalFunction c = RationalFunction::fraction(*root, den);
        const std::size_t lam = ctx->index("lam");
        if (c.numerator().degree_in(lam) != 2) throw Error("characteristic polynomial is not the square of a quadratic");
        const RationalFunction lead = c.coefficient(lam, 2);
        const RationalFunction sum = -(c.coefficient(lam, 1) / lead);
        const RationalFunction product = c.coefficient(lam, 0) / lead;
        roots = quadratic_roots(Scalar(sum), Scalar(product), relations);
    }
    if (is_zero(roots[0] - roots[1], relations)) return {Eigenvalue{roots[0], 4}};
    return {Eigenvalue{roots[0], 2}, Eigenvalue{roots[1], 2}};
}

VerificationReport semisimplicity_check(const Tensor11& k, const std::vector<Eigenvalue>& eigenvalues,
                                        const Relations& relations) {
    VerificationReport report;
    report.suite = "semisimplicity";
    const Context& ctx = k.context();
    Tensor11 product = Tensor11::identity(ctx);
    for (const auto& e : eigenvalues) product = product * (k - e.value * Tensor11::identity(ctx));
    const Tensor11 reduced = reduce(product, relations);
    report.add(exact_check("minimal_polynomial", "product of (K - lambda_i I) over distinct eigenvalues = 0",
                           is_zero(reduced, relations), residual_head(reduced)));
    return report;
}

OneForm eigenform_residual(const Tensor11& k, const Scalar& lambda, const OneForm& alpha) {
    return k.transpose_apply(alpha) - lambda * alpha;
}

std::vector<OneForm> left_kernel(const Tensor11& k, const Scalar& lambda, const Relations& relations) {
    const Context& ctx = k.context();
    // Rows of M = K^T - lambda I, reduced to row echelon form.
    std::array<std::array<Scalar, 4>, 4> m{{{Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)},
                                             {Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)}}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar e = k(j, i);
            if (i == j) e -= lambda;
            m[i][j] = reduce(e, relations);
        }
    }
    std::array<std::optional<std::size_t>, 4> pivot_row{};
    std::size_t row = 0;
    for (std::size_t col = 0; col < 4 && row < 4; ++col) {
        std::optional<std::size_t> found;
        for (std::size_t r = row; r < 4 && !found; ++r) {
            if (!is_zero(m[r][col], relations)) found = r;
        }
        if (!found) continue;
        std::swap(m[row], m[*found]);
        const Scalar inv = m[row][col].inverse();
        for (std::size_t j = 0; j < 4; ++j) m[row][j] = reduce(m[row][j] * inv, relations);
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == row || is_zero(m[r][col], relations)) continue;
            const Scalar factor = m[r][col];
            for (std::size_t j = 0; j < 4; ++j) m[r][j] = reduce(m[r][j] - factor * m[row][j], relations);
        }
        pivot_row[col] = row++;
    }
    std::vector<OneForm> kernel;
    for (std::size_t free = 0; free < 4; ++free) {
        if (pivot_row[free]) continue;
        OneForm v = zero_form(ctx);
        v[free] = Scalar::constant(ctx, 1);
        for (std::size_t col = 0; col < 4; ++col) {
            if (pivot_row[col]) v[col] = -m[*pivot_row[col]][free];
        }
        kernel.push_back(normalize(v));
    }
    return kernel;
}

std::array<OneForm, 2> codistribution_basis(const Tensor11& k, const Scalar& lambda, const Relations& relations) {
    std::vector<OneForm> kernel = left_kernel(k, lambda, relations);
    if (kernel.size() != 2) {
        throw Error("characteristic co-distribution has rank " + std::to_string(kernel.size()) + ", expected 2");
    }
    return {kernel[0], kernel[1]};
}

bool span_contains(const std::array<OneForm, 2>& basis, const OneForm& alpha, const Relations& relations) {
    const std::array<const OneForm*, 3> rows{&basis[0], &basis[1], &alpha};
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::array<std::size_t, 3> cols{};
        std::size_t n = 0;
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != skip) cols[n++] = c;
        }
        auto e = [&](std::size_t r, std::size_t c) -> const Scalar& { return (*rows[r])[cols[c]]; };
        const Scalar minor = e(0, 0) * minor2(e(1, 1), e(1, 2), e(2, 1), e(2, 2)) -
                             e(0, 1) * minor2(e(1, 0), e(1, 2), e(2, 0), e(2, 2)) +
                             e(0, 2) * minor2(e(1, 0), e(1, 1), e(2, 0), e(2, 1));
        if (!is_zero(minor, relations)) return false;
    }
    return true;
}

} // namespace haantjes
