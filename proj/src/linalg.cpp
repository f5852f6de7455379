#include "ncb/linalg.hpp"

#include <algorithm>
#include <complex>

#include <Eigen/SVD>

namespace ncb {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

int column_rank(const Mat& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    double cutoff = tol * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return sv(0) == 0.0 ? 0 : r;
}

void sign_fix_columns(Mat& basis, double tol) {
    for (int c = 0; c < basis.cols(); ++c) {
        for (int r = 0; r < basis.rows(); ++r) {
            std::complex<double> v = basis(r, c);
            if (std::abs(v) > tol) {
                basis.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

Mat range_basis(const Mat& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return Mat(a.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0) return Mat(a.rows(), 0);
    // Floor the scale at 1 so an all-noise matrix (inputs are unit-scale
    // operators throughout) is treated as zero rather than as full rank.
    double cutoff = tol * std::max(sv(0), 1.0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    Mat basis = svd.matrixU().leftCols(r);
    sign_fix_columns(basis);
    return basis;
}

Mat null_space(const Mat& a, double tol) {
    if (a.cols() == 0) return Mat(0, 0);
    if (a.rows() == 0) {
        Mat id = Mat::Identity(a.cols(), a.cols());
        return id;
    }
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    // Same unit-scale floor as range_basis: constraints assembled from
    // unit-scale operators that cancel to rounding noise have a full kernel.
    double cutoff = sv(0) == 0.0 ? 0.0 : tol * std::max(sv(0), 1.0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    Mat basis = svd.matrixV().rightCols(a.cols() - r);
    sign_fix_columns(basis);
    return basis;
}

double spectral_norm(const Mat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
}

}  // namespace ncb
