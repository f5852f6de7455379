#include "ncb/algebra.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace ncb {

namespace {

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra.get() != b.algebra.get())
        throw std::invalid_argument("algebra mismatch between operands");
}

}  // namespace

AlgebraPtr make_algebra(const std::vector<int>& block_sizes, const std::string& label) {
    if (block_sizes.empty())
        throw std::invalid_argument("make_algebra: block_sizes must be nonempty");
    for (int n : block_sizes)
        if (n < 1) throw std::invalid_argument("make_algebra: block sizes must be >= 1");
    auto alg = std::make_shared<MatrixAlgebra>();
    alg->block_sizes = block_sizes;
    alg->label = label;
    return alg;
}

AlgebraElement zero_element(const AlgebraPtr& alg) {
    std::vector<Mat> blocks;
    blocks.reserve(alg->block_sizes.size());
    for (int n : alg->block_sizes) blocks.push_back(Mat::Zero(n, n));
    return {alg, std::move(blocks)};
}

AlgebraElement identity_element(const AlgebraPtr& alg) {
    std::vector<Mat> blocks;
    blocks.reserve(alg->block_sizes.size());
    for (int n : alg->block_sizes) blocks.push_back(Mat::Identity(n, n));
    return {alg, std::move(blocks)};
}

AlgebraElement basis_element(const AlgebraPtr& alg, int k) {
    if (k < 0 || k >= alg->dim())
        throw std::invalid_argument("basis_element: index out of range");
    AlgebraElement e = zero_element(alg);
    for (int i = 0; i < alg->num_blocks(); ++i) {
        int n = alg->block_sizes[i];
        int off = alg->block_offset(i);
        if (k < off + n * n) {
            int local = k - off;
            e.blocks[i](local / n, local % n) = 1.0;
            return e;
        }
    }
    return e;  // unreachable
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<Mat> out;
    out.reserve(blocks.size());
    for (const Mat& b : blocks) out.push_back(b.adjoint());
    return {algebra, std::move(out)};
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same_algebra(*this, other);
    for (size_t i = 0; i < blocks.size(); ++i) blocks[i] += other.blocks[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same_algebra(*this, other);
    for (size_t i = 0; i < blocks.size(); ++i) blocks[i] -= other.blocks[i];
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    r += b;
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    r -= b;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    std::vector<Mat> out;
    out.reserve(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) out.push_back(a.blocks[i] * b.blocks[i]);
    return {a.algebra, std::move(out)};
}

AlgebraElement operator*(cdouble s, const AlgebraElement& a) {
    std::vector<Mat> out;
    out.reserve(a.blocks.size());
    for (const Mat& b : a.blocks) out.push_back(s * b);
    return {a.algebra, std::move(out)};
}

Vec flatten(const AlgebraElement& a) {
    Vec v(a.algebra->dim());
    int k = 0;
    for (const Mat& b : a.blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) v(k++) = b(r, c);
    return v;
}

AlgebraElement unflatten(const AlgebraPtr& alg, const Vec& v) {
    if (v.size() != alg->dim())
        throw std::invalid_argument("unflatten: coordinate vector has wrong length");
    AlgebraElement a = zero_element(alg);
    int k = 0;
    for (Mat& b : a.blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) b(r, c) = v(k++);
    return a;
}

cdouble hs_inner(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    cdouble s = 0.0;
    for (size_t i = 0; i < a.blocks.size(); ++i)
        s += (a.blocks[i].adjoint() * b.blocks[i]).trace();
    return s;
}

double operator_norm(const AlgebraElement& a) {
    double nrm = 0.0;
    for (const Mat& b : a.blocks) {
        if (b.rows() == 1) {
            nrm = std::max(nrm, std::abs(b(0, 0)));
        } else {
            Eigen::JacobiSVD<Mat> svd(b);
            nrm = std::max(nrm, svd.singularValues()(0));
        }
    }
    return nrm;
}

bool is_projection(const AlgebraElement& a, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_projection: tol must be positive");
    return operator_norm(a * a - a) <= tol && operator_norm(a.adjoint() - a) <= tol;
}

std::vector<cdouble> trace_vector(const AlgebraElement& a) {
    std::vector<cdouble> out;
    out.reserve(a.blocks.size());
    for (const Mat& b : a.blocks) out.push_back(b.trace());
    return out;
}

Mat left_mult_matrix(const AlgebraElement& a) {
    int d = a.algebra->dim();
    Mat m = Mat::Zero(d, d);
    // Blockwise: left multiplication by a_i acts as a_i ⊗ I on the row index
    // of block i in the row-major flattening.
    for (int i = 0; i < a.algebra->num_blocks(); ++i) {
        int n = a.algebra->block_sizes[i];
        int off = a.algebra->block_offset(i);
        const Mat& ai = a.blocks[i];
        for (int r = 0; r < n; ++r)
            for (int rp = 0; rp < n; ++rp)
                for (int c = 0; c < n; ++c)
                    m(off + r * n + c, off + rp * n + c) = ai(r, rp);
    }
    return m;
}

Mat right_mult_matrix(const AlgebraElement& a) {
    int d = a.algebra->dim();
    Mat m = Mat::Zero(d, d);
    for (int i = 0; i < a.algebra->num_blocks(); ++i) {
        int n = a.algebra->block_sizes[i];
        int off = a.algebra->block_offset(i);
        const Mat& ai = a.blocks[i];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int cp = 0; cp < n; ++cp)
                    m(off + r * n + c, off + r * n + cp) = ai(cp, c);
    }
    return m;
}

AlgebraPtr diagonal_algebra(int k, const std::string& label) {
    return make_algebra(std::vector<int>(k, 1), label);
}

AlgebraElement diagonal_element(const AlgebraPtr& alg, const std::vector<cdouble>& values) {
    if (static_cast<int>(values.size()) != alg->num_blocks())
        throw std::invalid_argument("diagonal_element: wrong number of values");
    AlgebraElement a = zero_element(alg);
    for (size_t i = 0; i < values.size(); ++i) {
        if (alg->block_sizes[i] != 1)
            throw std::invalid_argument("diagonal_element: algebra is not commutative");
        a.blocks[i](0, 0) = values[i];
    }
    return a;
}

}  // namespace ncb
