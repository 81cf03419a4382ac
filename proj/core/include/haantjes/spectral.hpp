#pragma once

#include <array>
#include <vector>

#include "haantjes/tensor.hpp"

namespace haantjes {

struct Eigenvalue {
    Scalar value;
    int multiplicity = 0;
};

/// Roots of x^2 - sum x + product, the "+" branch first. The discriminant
/// is reduced by the relations; a perfect square gives rational roots,
/// otherwise both roots carry sqrt(numerator * denominator).
std::array<Scalar, 2> quadratic_roots(const Scalar& sum, const Scalar& product, const Relations& relations = {});

/// det(M) of a 2x2 or 4x4 block given row-major.
Scalar determinant(const Tensor11& m);

/// det(K - lam I) as a scalar in the context variable `lam`.
Scalar characteristic_polynomial(const Tensor11& k);

/// Lift form: the A-block roots, each of multiplicity two. Otherwise the
/// characteristic polynomial must be the square of a quadratic in lam;
/// throws Error when it is not.
std::vector<Eigenvalue> eigen_data(const Tensor11& k, const Relations& relations = {});

/// Passes iff the product of (K - lambda I) over the distinct eigenvalues vanishes.
VerificationReport semisimplicity_check(const Tensor11& k, const std::vector<Eigenvalue>& eigenvalues,
                                        const Relations& relations = {});

/// Basis of ker(K^T - lambda I), denominators cleared. Throws Error unless
/// the kernel has dimension two.
std::array<OneForm, 2> codistribution_basis(const Tensor11& k, const Scalar& lambda, const Relations& relations = {});

/// Kernel of K^T - lambda I of any dimension.
std::vector<OneForm> left_kernel(const Tensor11& k, const Scalar& lambda, const Relations& relations = {});

/// alpha lies in the span of the basis (all 3x3 minors vanish).
bool span_contains(const std::array<OneForm, 2>& basis, const OneForm& alpha, const Relations& relations = {});

/// (K^T - lambda I) alpha.
OneForm eigenform_residual(const Tensor11& k, const Scalar& lambda, const OneForm& alpha);

} // namespace haantjes
