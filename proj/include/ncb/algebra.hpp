#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncb {

using cdouble = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// A finite-dimensional *-algebra presented as a direct sum of full complex
/// matrix blocks M_{n_1} ⊕ ... ⊕ M_{n_k}.  Linear dimension is Σ n_i².
///
/// The algebra fixes a deterministic linear basis ordering used by every
/// downstream kernel computation: block-major, then row-major within a
/// block.  Basis index k ↦ (block i, row r, col c) with
/// k = offset(i) + r·n_i + c.
struct MatrixAlgebra {
    std::vector<int> block_sizes;
    std::string label;

    int num_blocks() const { return static_cast<int>(block_sizes.size()); }

    /// Total linear dimension Σ n_i².
    int dim() const {
        int d = 0;
        for (int n : block_sizes) d += n * n;
        return d;
    }

    /// Offset of block i in the flattened coordinate vector.
    int block_offset(int i) const {
        int off = 0;
        for (int j = 0; j < i; ++j) off += block_sizes[j] * block_sizes[j];
        return off;
    }

    bool commutative() const {
        for (int n : block_sizes)
            if (n != 1) return false;
        return true;
    }
};

using AlgebraPtr = std::shared_ptr<const MatrixAlgebra>;

/// An element of a MatrixAlgebra: one dense complex matrix per block.
struct AlgebraElement {
    AlgebraPtr algebra;
    std::vector<Mat> blocks;

    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr alg, std::vector<Mat> b) : algebra(std::move(alg)), blocks(std::move(b)) {}

    AlgebraElement adjoint() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
};

AlgebraPtr make_algebra(const std::vector<int>& block_sizes, const std::string& label);

AlgebraElement zero_element(const AlgebraPtr& alg);
AlgebraElement identity_element(const AlgebraPtr& alg);

/// Basis element with flat index k (block-major, row-major).
AlgebraElement basis_element(const AlgebraPtr& alg, int k);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(cdouble s, const AlgebraElement& a);

/// Coordinates of a in the deterministic basis.
Vec flatten(const AlgebraElement& a);
AlgebraElement unflatten(const AlgebraPtr& alg, const Vec& v);

/// Hilbert-Schmidt inner product Σ_i tr(a_i† b_i); conjugate-linear in a.
cdouble hs_inner(const AlgebraElement& a, const AlgebraElement& b);

/// C*-norm: max over blocks of the largest singular value.
double operator_norm(const AlgebraElement& a);

/// ‖a² − a‖ ≤ tol and ‖a* − a‖ ≤ tol.
bool is_projection(const AlgebraElement& a, double tol);

/// Per-block matrix trace, in block order.
std::vector<cdouble> trace_vector(const AlgebraElement& a);

/// Dense matrix of x ↦ ax (resp. x ↦ xa) in the deterministic basis.
Mat left_mult_matrix(const AlgebraElement& a);
Mat right_mult_matrix(const AlgebraElement& a);

/// Commutative shorthand: ℂ^k as an algebra, element from diagonal values.
AlgebraPtr diagonal_algebra(int k, const std::string& label = "diag");
AlgebraElement diagonal_element(const AlgebraPtr& alg, const std::vector<cdouble>& values);

}  // namespace ncb
