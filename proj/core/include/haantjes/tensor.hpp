#pragma once

#include <array>
#include <functional>
#include <string>

#include "haantjes/phase_space.hpp"
#include "haantjes/report.hpp"

namespace haantjes {

/// (1,1)-tensor field on the four-dimensional phase space, stored as a
/// 4x4 matrix L(i, j) = L^i_j in chart coordinates (q1, q2, p1, p2).
class Tensor11 {
public:
    explicit Tensor11(Context context);

    static Tensor11 identity(const Context& ctx);
    static Tensor11 diagonal(const std::array<Scalar, 4>& entries);
    static Tensor11 from_rows(const std::array<std::array<Scalar, 4>, 4>& rows);

    const Context& context() const noexcept { return m_[0].context(); }
    Scalar& operator()(std::size_t i, std::size_t j) { return m_[4 * i + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_[4 * i + j]; }

    Tensor11 operator+(const Tensor11& rhs) const;
    Tensor11 operator-(const Tensor11& rhs) const;
    Tensor11 operator*(const Tensor11& rhs) const;
    Tensor11 transpose() const;
    Scalar trace() const;

    /// L X.
    Vector4 apply(const Vector4& x) const;
    /// L^T alpha.
    OneForm transpose_apply(const OneForm& alpha) const;

    Tensor11 map(const std::function<Scalar(const Scalar&)>& f) const;

    std::string to_string() const;

private:
    std::array<Scalar, 16> m_;
};

Tensor11 operator*(const Scalar& s, const Tensor11& t);

bool is_zero(const Tensor11& t, const Relations& relations = {});
bool equal(const Tensor11& a, const Tensor11& b, const Relations& relations = {});
Tensor11 reduce(const Tensor11& t, const Relations& relations);
Tensor11 specialize(const Tensor11& t, const Bindings& bindings);
std::string residual_head(const Tensor11& t);

/// 2x2 blocks of K = (A B; C D) in Darboux order.
struct Block2 {
    std::array<Scalar, 4> m;  // row-major
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m[2 * i + j]; }
};
Block2 block(const Tensor11& k, std::size_t row, std::size_t col);

/// Omega K - K^T Omega for the canonical symplectic matrix.
Tensor11 compatibility_residual(const Tensor11& k);
/// Pass iff Omega K = K^T Omega; equivalently (A B; C A^T) with B, C skew.
VerificationReport check_symplectic_compatibility(const Tensor11& k, const Relations& relations = {});
/// True when the B block vanishes identically.
bool is_lift_form(const Tensor11& k, const Relations& relations = {});

/// K^T dH - dI.
OneForm chain_residual(const Tensor11& k, const Scalar& h, const Scalar& integral, const Chart& chart);

/// K - (tr K / 2) I.
Tensor11 nijenhuis_generator(const Tensor11& k);

/// Swap q1 <-> q2 and p1 <-> p2 in both the indices and the entries.
Tensor11 exchange_symmetry(const Tensor11& k, const Chart& chart);

/// Residual K1 K2 - K2 K1 as a check.
CheckResult commute_check(const Tensor11& k1, const Tensor11& k2, const Relations& relations = {},
                          bool judge = true);

} // namespace haantjes
