#pragma once

#include <Eigen/Dense>

namespace ncb {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// Numerical column rank via singular-value thresholding at
/// tol · (largest singular value).
int column_rank(const Mat& a, double tol);

/// Rotate each column by a phase so its first nonzero coordinate is
/// positive real.  Makes SVD-derived bases reproducible.
void sign_fix_columns(Mat& basis, double tol = 1e-12);

/// Orthonormal basis of the column space, sign-fixed; singular values
/// below tol·max(σ_max, 1) are discarded.  The unit floor assumes inputs
/// assembled from unit-scale operators, so an all-noise matrix is zero.
Mat range_basis(const Mat& a, double tol);

/// Orthonormal basis of the null space (right singular vectors with
/// singular value ≤ tol·max(σ_max, 1)), sign-fixed.
Mat null_space(const Mat& a, double tol);

/// Largest singular value (matrix 2-norm); 0 for empty matrices.
double spectral_norm(const Mat& a);

}  // namespace ncb
