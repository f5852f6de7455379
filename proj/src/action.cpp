#include "ncb/action.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "ncb/errors.hpp"
#include "ncb/linalg.hpp"

namespace ncb {

AlgebraElement GroupAction::apply(int g, const AlgebraElement& a) const {
    const Automorphism& phi = automorphisms[g];
    AlgebraElement out = zero_element(algebra);
    for (int i = 0; i < algebra->num_blocks(); ++i) {
        int j = phi.block_dest[i];
        out.blocks[j] = phi.unitaries[j] * a.blocks[i] * phi.unitaries[j].adjoint();
    }
    return out;
}

Mat automorphism_matrix(const GroupAction& action, int g) {
    int d = action.algebra->dim();
    Mat m(d, d);
    for (int k = 0; k < d; ++k)
        m.col(k) = flatten(action.apply(g, basis_element(action.algebra, k)));
    return m;
}

std::vector<ActionViolation> check_action(const GroupAction& action, double tol) {
    if (tol <= 0) throw std::invalid_argument("check_action: tol must be positive");
    std::vector<ActionViolation> out;
    const FiniteGroup& G = action.group;
    const AlgebraPtr& alg = action.algebra;
    int d = alg->dim();
    int nb = alg->num_blocks();

    if (static_cast<int>(action.automorphisms.size()) != G.order) {
        out.push_back({"automorphism-count", -1, -1, 0.0});
        return out;
    }
    // Structural sanity: block_dest is a size-compatible permutation and the
    // conjugators are unitary.
    for (int g = 0; g < G.order; ++g) {
        const Automorphism& phi = action.automorphisms[g];
        std::vector<int> seen(nb, 0);
        bool structural_ok = static_cast<int>(phi.block_dest.size()) == nb &&
                             static_cast<int>(phi.unitaries.size()) == nb;
        if (structural_ok) {
            for (int i = 0; i < nb; ++i) {
                int j = phi.block_dest[i];
                if (j < 0 || j >= nb || seen[j]++ ||
                    alg->block_sizes[i] != alg->block_sizes[j] ||
                    phi.unitaries[j].rows() != alg->block_sizes[j] ||
                    phi.unitaries[j].cols() != alg->block_sizes[j])
                    structural_ok = false;
            }
        }
        if (!structural_ok) {
            out.push_back({"block-structure", g, -1, 0.0});
            continue;
        }
        for (int j = 0; j < nb; ++j) {
            const Mat& u = phi.unitaries[j];
            double res = (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm();
            if (res > tol) out.push_back({"unitarity", g, -1, res});
        }
    }
    if (!out.empty()) return out;

    std::vector<Mat> mats(G.order);
    for (int g = 0; g < G.order; ++g) mats[g] = automorphism_matrix(action, g);

    double id_res = (mats[G.identity] - Mat::Identity(d, d)).norm();
    if (id_res > tol) out.push_back({"identity", G.identity, -1, id_res});

    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            double res = (mats[g] * mats[h] - mats[G.mul(g, h)]).norm();
            if (res > tol) out.push_back({"composition", g, h, res});
        }

    // Multiplicativity, *-preservation and norm preservation on the basis.
    // Basis pairs are capped at 64² to keep the check bounded on big algebras.
    int nbasis = std::min(d, 64);
    std::vector<AlgebraElement> basis;
    for (int k = 0; k < nbasis; ++k) basis.push_back(basis_element(alg, k));
    for (int g = 0; g < G.order; ++g) {
        double mult_res = 0.0, star_res = 0.0, norm_res = 0.0;
        for (int i = 0; i < nbasis; ++i) {
            star_res = std::max(star_res, operator_norm(action.apply(g, basis[i].adjoint()) -
                                                        action.apply(g, basis[i]).adjoint()));
            norm_res = std::max(norm_res, std::abs(operator_norm(action.apply(g, basis[i])) -
                                                   operator_norm(basis[i])));
            for (int j = 0; j < nbasis; ++j)
                mult_res = std::max(
                    mult_res, operator_norm(action.apply(g, basis[i] * basis[j]) -
                                            action.apply(g, basis[i]) * action.apply(g, basis[j])));
        }
        if (mult_res > tol) out.push_back({"multiplicativity", g, -1, mult_res});
        if (star_res > tol) out.push_back({"star-preservation", g, -1, star_res});
        if (norm_res > tol) out.push_back({"norm-preservation", g, -1, norm_res});
    }
    return out;
}

AlgebraElement conditional_expectation(const GroupAction& action, const AlgebraElement& a) {
    AlgebraElement sum = zero_element(action.algebra);
    for (int g = 0; g < action.group.order; ++g) sum += action.apply(g, a);
    return cdouble(1.0 / action.group.order, 0.0) * sum;
}

FixedSubalgebra fixed_subalgebra(const GroupAction& action, double tol) {
    int d = action.algebra->dim();
    Mat avg = Mat::Zero(d, d);
    for (int g = 0; g < action.group.order; ++g) avg += automorphism_matrix(action, g);
    avg /= action.group.order;
    Mat basis = range_basis(avg, tol);
    FixedSubalgebra sub;
    sub.parent = action.algebra;
    sub.basis_matrix = basis;
    sub.dimension = static_cast<int>(basis.cols());
    for (int c = 0; c < basis.cols(); ++c)
        sub.basis.push_back(unflatten(action.algebra, basis.col(c)));
    return sub;
}

bool is_free_on_spectrum(const GroupAction& action) {
    if (!action.algebra->commutative())
        throw UnsupportedAlgebraError(
            "is_free_on_spectrum: the point-freeness proxy is defined only for "
            "commutative algebras");
    for (int g = 0; g < action.group.order; ++g) {
        if (g == action.group.identity) continue;
        const auto& dest = action.automorphisms[g].block_dest;
        for (size_t i = 0; i < dest.size(); ++i)
            if (dest[i] == static_cast<int>(i)) return false;
    }
    return true;
}

namespace {

// Hermitian basis of the center of the span of `sub`, as parent elements.
std::vector<AlgebraElement> center_hermitian_basis(const FixedSubalgebra& sub, double tol) {
    int k = sub.dimension;
    int d = sub.parent->dim();
    // Rows: one commutator equation per (basis element j, parent coordinate);
    // columns: coefficients over the subalgebra basis.
    Mat constraints(static_cast<long>(k) * d, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Vec comm = flatten(sub.basis[i] * sub.basis[j] - sub.basis[j] * sub.basis[i]);
            constraints.block(static_cast<long>(j) * d, i, d, 1) = comm;
        }
    }
    Mat coeffs = null_space(constraints, tol);
    std::vector<AlgebraElement> out;
    for (int c = 0; c < coeffs.cols(); ++c) {
        AlgebraElement z = zero_element(sub.parent);
        for (int i = 0; i < k; ++i) z += coeffs(i, c) * sub.basis[i];
        AlgebraElement h = cdouble(0.5, 0) * (z + z.adjoint());
        AlgebraElement a = cdouble(0, -0.5) * (z - z.adjoint());
        if (operator_norm(h) > tol) out.push_back(h);
        if (operator_norm(a) > tol) out.push_back(a);
    }
    return out;
}

}  // namespace

WedderburnData wedderburn_decomposition(const FixedSubalgebra& sub, double tol) {
    std::vector<AlgebraElement> herm = center_hermitian_basis(sub, tol);
    if (herm.empty())
        throw InternalInconsistencyError("wedderburn_decomposition: empty center");

    std::mt19937 rng(20240817);  // fixed seed: reproducible decisions
    std::uniform_real_distribution<double> unif(0.25, 1.75);

    for (int attempt = 0; attempt < 16; ++attempt) {
        // Generic self-adjoint central element; generically its eigenvalues
        // separate the central blocks.
        AlgebraElement z = zero_element(sub.parent);
        for (const auto& h : herm) z += cdouble(unif(rng), 0) * h;

        // Spectral data across all parent blocks.
        struct EigDatum {
            double value;
            int block;
            Vec vector;
        };
        std::vector<EigDatum> eigs;
        double scale = 0.0;
        for (int b = 0; b < sub.parent->num_blocks(); ++b) {
            Eigen::SelfAdjointEigenSolver<Mat> es(z.blocks[b]);
            for (int i = 0; i < es.eigenvalues().size(); ++i) {
                eigs.push_back({es.eigenvalues()(i), b, es.eigenvectors().col(i)});
                scale = std::max(scale, std::abs(es.eigenvalues()(i)));
            }
        }
        std::sort(eigs.begin(), eigs.end(),
                  [](const EigDatum& a, const EigDatum& b) { return a.value < b.value; });
        double gap = std::max(scale, 1.0) * 1e-6;

        // Cluster eigenvalues, drop the near-zero cluster (outside the unit
        // of the subalgebra when the embedding is non-unital).
        std::vector<AlgebraElement> projections;
        size_t i = 0;
        bool degenerate = false;
        while (i < eigs.size()) {
            size_t j = i;
            while (j + 1 < eigs.size() && eigs[j + 1].value - eigs[j].value < gap) ++j;
            double cluster_value = eigs[i].value;
            if (std::abs(cluster_value) > gap) {
                AlgebraElement p = zero_element(sub.parent);
                for (size_t t = i; t <= j; ++t)
                    p.blocks[eigs[t].block] += eigs[t].vector * eigs[t].vector.adjoint();
                projections.push_back(p);
            }
            i = j + 1;
        }

        // Validate: each candidate lies in the subalgebra, is a projection,
        // is central, the spanned ideals have square dimension, and the
        // candidates resolve the whole center.
        double vtol = 1e-7;
        std::vector<int> sizes;
        bool ok = static_cast<int>(projections.size()) >= 1 && !degenerate;
        AlgebraElement psum = zero_element(sub.parent);
        for (const auto& p : projections) psum += p;
        // Σ z_j must be the unit of the subalgebra = E-projection of parent 1;
        // equivalently it must act as identity on the subalgebra span.
        for (int c = 0; ok && c < sub.dimension; ++c)
            if (operator_norm(psum * sub.basis[c] - sub.basis[c]) > vtol) ok = false;
        for (const auto& p : projections) {
            if (!ok) break;
            if (!is_projection(p, vtol)) ok = false;
            Vec pv = flatten(p);
            Vec residual = pv - sub.basis_matrix * (sub.basis_matrix.adjoint() * pv);
            if (residual.norm() > vtol * std::max(1.0, pv.norm())) ok = false;
            for (int c = 0; ok && c < sub.dimension; ++c)
                if (operator_norm(p * sub.basis[c] - sub.basis[c] * p) > vtol) ok = false;
            if (ok) {
                // dim(A z_j) must be a perfect square m_j².
                Mat ideal(sub.parent->dim(), sub.dimension);
                for (int c = 0; c < sub.dimension; ++c)
                    ideal.col(c) = flatten(sub.basis[c] * p);
                int idim = column_rank(ideal, tol);
                int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(idim))));
                if (m * m != idim) ok = false;
                else sizes.push_back(m);
            }
        }
        if (ok) {
            int total = 0;
            for (int m : sizes) total += m * m;
            if (total != sub.dimension) ok = false;
        }
        if (ok) return {projections, sizes};
    }
    throw InternalInconsistencyError(
        "wedderburn_decomposition: could not resolve minimal central projections");
}

GroupAction trivial_action(const FiniteGroup& group, const AlgebraPtr& algebra) {
    Automorphism id;
    for (int i = 0; i < algebra->num_blocks(); ++i) {
        id.block_dest.push_back(i);
        id.unitaries.push_back(Mat::Identity(algebra->block_sizes[i], algebra->block_sizes[i]));
    }
    GroupAction act;
    act.group = group;
    act.algebra = algebra;
    act.automorphisms.assign(group.order, id);
    return act;
}

GroupAction permutation_action(const FiniteGroup& group, const AlgebraPtr& algebra,
                               const std::vector<std::vector<int>>& perms) {
    if (!algebra->commutative())
        throw std::invalid_argument("permutation_action: algebra must be commutative");
    if (static_cast<int>(perms.size()) != group.order)
        throw std::invalid_argument("permutation_action: one permutation per group element");
    GroupAction act;
    act.group = group;
    act.algebra = algebra;
    for (int g = 0; g < group.order; ++g) {
        Automorphism phi;
        phi.block_dest = perms[g];
        phi.unitaries.assign(algebra->num_blocks(), Mat::Identity(1, 1));
        act.automorphisms.push_back(std::move(phi));
    }
    return act;
}

GroupAction conjugation_action(const FiniteGroup& group, const AlgebraPtr& algebra,
                               const std::vector<std::vector<Mat>>& unitaries) {
    if (static_cast<int>(unitaries.size()) != group.order)
        throw std::invalid_argument("conjugation_action: one unitary list per group element");
    GroupAction act;
    act.group = group;
    act.algebra = algebra;
    for (int g = 0; g < group.order; ++g) {
        Automorphism phi;
        for (int i = 0; i < algebra->num_blocks(); ++i) phi.block_dest.push_back(i);
        phi.unitaries = unitaries[g];
        act.automorphisms.push_back(std::move(phi));
    }
    return act;
}

GroupAction free_translation_action(const FiniteGroup& group, int copies) {
    if (copies < 1) throw std::invalid_argument("free_translation_action: copies must be >= 1");
    auto alg = diagonal_algebra(group.order * copies, "free-cover");
    std::vector<std::vector<int>> perms(group.order, std::vector<int>(group.order * copies));
    for (int g = 0; g < group.order; ++g)
        for (int o = 0; o < copies; ++o)
            for (int h = 0; h < group.order; ++h)
                perms[g][o * group.order + h] = o * group.order + group.mul(g, h);
    return permutation_action(group, alg, perms);
}

}  // namespace ncb
