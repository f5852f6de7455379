#include "ncb/cotensor.hpp"

#include <numeric>
#include <stdexcept>

#include "ncb/linalg.hpp"

namespace ncb {

namespace {

void check_module_laws(const FiniteGroup& group, const std::vector<Mat>& ops, int dim,
                       bool right, double tol) {
    if (static_cast<int>(ops.size()) != group.order)
        throw std::invalid_argument("module: one operator per group element");
    for (const Mat& op : ops)
        if (op.rows() != dim || op.cols() != dim)
            throw std::invalid_argument("module: operator has wrong shape");
    if ((ops[group.identity] - Mat::Identity(dim, dim)).norm() > tol)
        throw std::invalid_argument("module: identity operator is not Id");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            int target = right ? group.mul(h, g) : group.mul(g, h);
            if ((ops[g] * ops[h] - ops[target]).norm() > tol * std::max(1.0, ops[target].norm()))
                throw std::invalid_argument("module: representation law fails");
        }
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order || a.table != b.table)
        throw std::invalid_argument("group mismatch between module factors");
}

}  // namespace

GModuleRight make_right_module(const FiniteGroup& group, std::vector<Mat> ops, double tol) {
    int dim = ops.empty() ? 0 : static_cast<int>(ops[0].rows());
    check_module_laws(group, ops, dim, /*right=*/true, tol);
    return {group, dim, std::move(ops)};
}

GModuleLeft make_left_module(const FiniteGroup& group, std::vector<Mat> ops, double tol) {
    int dim = ops.empty() ? 0 : static_cast<int>(ops[0].rows());
    check_module_laws(group, ops, dim, /*right=*/false, tol);
    return {group, dim, std::move(ops)};
}

GModuleRight regular_right_module(const FiniteGroup& group) {
    std::vector<Mat> ops;
    for (int g = 0; g < group.order; ++g) {
        Mat m = Mat::Zero(group.order, group.order);
        for (int x = 0; x < group.order; ++x) m(group.mul(x, g), x) = 1.0;
        ops.push_back(std::move(m));
    }
    return make_right_module(group, std::move(ops));
}

GModuleRight right_module_of_action(const GroupAction& action) {
    std::vector<Mat> ops;
    for (int g = 0; g < action.group.order; ++g)
        ops.push_back(automorphism_matrix(action, action.group.inv(g)));
    return make_right_module(action.group, std::move(ops));
}

GModuleLeft left_module_of_action(const GroupAction& action) {
    std::vector<Mat> ops;
    for (int g = 0; g < action.group.order; ++g)
        ops.push_back(automorphism_matrix(action, g));
    return make_left_module(action.group, std::move(ops));
}

CotensorSubspace cotensor_modules(const GModuleRight& m, const GModuleLeft& n, double tol) {
    require_same_group(m.group, n.group);
    int N = m.group.order;
    int dm = m.dim, dn = n.dim;
    Mat idm = Mat::Identity(dm, dm), idn = Mat::Identity(dn, dn);
    // All group elements are enumerated, not just generators.
    Mat stacked(static_cast<long>(N) * dm * dn, static_cast<long>(dm) * dn);
    for (int g = 0; g < N; ++g)
        stacked.block(static_cast<long>(g) * dm * dn, 0, dm * dn, dm * dn) =
            kron(m.ops[g], idn) - kron(idm, n.ops[g]);
    CotensorSubspace out;
    out.dim_m = dm;
    out.dim_n = dn;
    out.basis = null_space(stacked, tol);
    out.dimension = static_cast<int>(out.basis.cols());
    return out;
}

HopfDelta hopf_comultiplication(const FiniteGroup& group) {
    int N = group.order;
    Eigen::MatrixXi delta = Eigen::MatrixXi::Zero(N * N, N);
    for (int g1 = 0; g1 < N; ++g1)
        for (int g2 = 0; g2 < N; ++g2) delta(g1 * N + g2, group.mul(g1, g2)) = 1;
    return {group, delta};
}

bool is_coassociative(const HopfDelta& delta) {
    int N = delta.group.order;
    const Eigen::MatrixXi& D = delta.delta_matrix;
    // (Δ⊗Id)∘Δ and (Id⊗Δ)∘Δ as integer matrices N³ × N.
    Eigen::MatrixXi lhs = Eigen::MatrixXi::Zero(N * N * N, N);
    Eigen::MatrixXi rhs = Eigen::MatrixXi::Zero(N * N * N, N);
    for (int g = 0; g < N; ++g)
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                int c = D(a * N + b, g);
                if (!c) continue;
                for (int a1 = 0; a1 < N; ++a1)
                    for (int a2 = 0; a2 < N; ++a2)
                        lhs((a1 * N + a2) * N + b, g) += c * D(a1 * N + a2, a);
                for (int b1 = 0; b1 < N; ++b1)
                    for (int b2 = 0; b2 < N; ++b2)
                        rhs((a * N + b1) * N + b2, g) += c * D(b1 * N + b2, b);
            }
    return lhs == rhs;
}

CotensorSubspace hopf_cotensor(const GModuleRight& m, const GModuleLeft& n, double tol) {
    require_same_group(m.group, n.group);
    int N = m.group.order;
    int dm = m.dim, dn = n.dim;
    // Coactions: ρ(v) = Σ_g (v·g) ⊗ δ_g and λ(w) = Σ_g δ_g ⊗ (g·w).
    // The constraint (ρ⊗Id − Id⊗λ) t = 0 lives in M ⊗ H ⊗ N with index
    // ordering (m-index, group index, n-index).
    Mat constraint = Mat::Zero(static_cast<long>(dm) * N * dn, static_cast<long>(dm) * dn);
    for (int g = 0; g < N; ++g) {
        for (int a = 0; a < dm; ++a)
            for (int b = 0; b < dm; ++b) {
                cdouble r = m.ops[g](a, b);
                if (r == cdouble(0.0)) continue;
                for (int c = 0; c < dn; ++c)
                    constraint((static_cast<long>(a) * N + g) * dn + c,
                               static_cast<long>(b) * dn + c) += r;
            }
        for (int c = 0; c < dn; ++c)
            for (int e = 0; e < dn; ++e) {
                cdouble l = n.ops[g](c, e);
                if (l == cdouble(0.0)) continue;
                for (int a = 0; a < dm; ++a)
                    constraint((static_cast<long>(a) * N + g) * dn + c,
                               static_cast<long>(a) * dn + e) -= l;
            }
    }
    CotensorSubspace out;
    out.dim_m = dm;
    out.dim_n = dn;
    out.basis = null_space(constraint, tol);
    out.dimension = static_cast<int>(out.basis.cols());
    return out;
}

namespace {

// Identification of the coefficient space of Ã⊗B with the block algebra
// ⊕_{i,j} M_{n_i·m_j}: coefficient index (a-basis, b-basis) maps to one
// entry of a tensor block.
struct TensorAlgebraMap {
    AlgebraPtr tensor_algebra;
    std::vector<int> coeff_to_basis;  // size dA·dB, permutation

    TensorAlgebraMap(const AlgebraPtr& A, const AlgebraPtr& B) {
        std::vector<int> sizes;
        for (int ni : A->block_sizes)
            for (int mj : B->block_sizes) sizes.push_back(ni * mj);
        tensor_algebra = make_algebra(sizes, A->label + "(x)" + B->label);
        int dB = B->dim();
        coeff_to_basis.resize(static_cast<size_t>(A->dim()) * dB);
        int nbB = B->num_blocks();
        for (int i = 0; i < A->num_blocks(); ++i) {
            int ni = A->block_sizes[i];
            int offA = A->block_offset(i);
            for (int j = 0; j < nbB; ++j) {
                int mj = B->block_sizes[j];
                int offB = B->block_offset(j);
                int tb = i * nbB + j;
                int offT = tensor_algebra->block_offset(tb);
                int nt = ni * mj;
                for (int r = 0; r < ni; ++r)
                    for (int s = 0; s < ni; ++s)
                        for (int t = 0; t < mj; ++t)
                            for (int u = 0; u < mj; ++u) {
                                int a = offA + r * ni + s;
                                int b = offB + t * mj + u;
                                int dest = offT + (r * mj + t) * nt + (s * mj + u);
                                coeff_to_basis[static_cast<size_t>(a) * dB + b] = dest;
                            }
            }
        }
    }

    AlgebraElement to_element(const Vec& coeff) const {
        Vec v(tensor_algebra->dim());
        for (size_t k = 0; k < coeff_to_basis.size(); ++k)
            v(coeff_to_basis[k]) = coeff(static_cast<long>(k));
        return unflatten(tensor_algebra, v);
    }

    Vec to_coeff(const AlgebraElement& el) const {
        Vec v = flatten(el);
        Vec coeff(coeff_to_basis.size());
        for (size_t k = 0; k < coeff_to_basis.size(); ++k)
            coeff(static_cast<long>(k)) = v(coeff_to_basis[k]);
        return coeff;
    }
};

}  // namespace

BorelResult borel_construction(const GroupAction& a_tilde_right, const GroupAction& b_left,
                               double tol) {
    require_same_group(a_tilde_right.group, b_left.group);
    long combined = static_cast<long>(a_tilde_right.algebra->dim()) * b_left.algebra->dim();
    if (combined > 4096)
        throw std::invalid_argument("borel_construction: combined dimension exceeds 4096");

    GModuleRight m = right_module_of_action(a_tilde_right);
    GModuleLeft n = left_module_of_action(b_left);
    CotensorSubspace c = cotensor_modules(m, n, tol);

    BorelResult out;
    out.linear_basis = c.basis;
    out.linear_dimension = c.dimension;

    TensorAlgebraMap map(a_tilde_right.algebra, b_left.algebra);

    // Span stabilization under multiplication: the finite-dimensional
    // surrogate of the norm closure of the generated subalgebra.
    Mat span = c.basis;  // orthonormal columns
    bool grew = true;
    while (grew) {
        grew = false;
        int k = static_cast<int>(span.cols());
        std::vector<AlgebraElement> elems;
        elems.reserve(k);
        for (int i = 0; i < k; ++i) elems.push_back(map.to_element(span.col(i)));
        for (int i = 0; i < k && static_cast<long>(span.cols()) < combined; ++i)
            for (int j = 0; j < k && static_cast<long>(span.cols()) < combined; ++j) {
                Vec prod = map.to_coeff(elems[i] * elems[j]);
                Vec residual = prod - span * (span.adjoint() * prod);
                if (residual.norm() > tol * std::max(1.0, prod.norm())) {
                    residual.normalize();
                    span.conservativeResize(Eigen::NoChange, span.cols() + 1);
                    span.col(span.cols() - 1) = residual;
                    grew = true;
                }
            }
    }
    sign_fix_columns(span);
    out.algebra_basis = span;
    out.algebra_dimension = static_cast<int>(span.cols());
    return out;
}

GSet make_right_gset(const FiniteGroup& group, std::vector<std::vector<int>> act) {
    GSet s{group, act.empty() ? 0 : static_cast<int>(act[0].size()), std::move(act)};
    if (static_cast<int>(s.act.size()) != group.order)
        throw std::invalid_argument("gset: one permutation per group element");
    for (int x = 0; x < s.size; ++x)
        if (s.act[group.identity][x] != x)
            throw std::invalid_argument("gset: identity must act trivially");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h)
            for (int x = 0; x < s.size; ++x)
                if (s.act[g][s.act[h][x]] != s.act[group.mul(h, g)][x])
                    throw std::invalid_argument("gset: right action law fails");
    return s;
}

GSet make_left_gset(const FiniteGroup& group, std::vector<std::vector<int>> act) {
    GSet s{group, act.empty() ? 0 : static_cast<int>(act[0].size()), std::move(act)};
    if (static_cast<int>(s.act.size()) != group.order)
        throw std::invalid_argument("gset: one permutation per group element");
    for (int x = 0; x < s.size; ++x)
        if (s.act[group.identity][x] != x)
            throw std::invalid_argument("gset: identity must act trivially");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h)
            for (int x = 0; x < s.size; ++x)
                if (s.act[g][s.act[h][x]] != s.act[group.mul(g, h)][x])
                    throw std::invalid_argument("gset: left action law fails");
    return s;
}

GSet regular_right_gset(const FiniteGroup& group) {
    std::vector<std::vector<int>> act(group.order, std::vector<int>(group.order));
    for (int g = 0; g < group.order; ++g)
        for (int x = 0; x < group.order; ++x) act[g][x] = group.mul(x, g);
    return make_right_gset(group, std::move(act));
}

BorelOrbitResult commutative_oracle(const GSet& x_right, const GSet& y_left) {
    const FiniteGroup& G = x_right.group;
    require_same_group(G, y_left.group);
    int nx = x_right.size, ny = y_left.size;

    // Union-find over X×Y.
    std::vector<int> parent(static_cast<size_t>(nx) * ny);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    };
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int g = 0; g < G.order; ++g)
                unite(x_right.act[g][x] * ny + y, x * ny + y_left.act[G.inv(g)][y]);

    BorelOrbitResult out;
    out.orbit_of.resize(parent.size());
    std::vector<int> label(parent.size(), -1);
    int count = 0;
    for (size_t i = 0; i < parent.size(); ++i) {
        int root = find(static_cast<int>(i));
        if (label[root] < 0) label[root] = count++;
        out.orbit_of[i] = label[root];
    }
    out.orbit_count = count;
    out.quotient_algebra = diagonal_algebra(count, "borel-quotient");
    return out;
}

GroupAction gset_function_action(const GSet& right_set) {
    auto alg = diagonal_algebra(right_set.size, "C(X)");
    std::vector<std::vector<int>> perms(right_set.group.order);
    // α_g(δ_x) = δ_{x·g⁻¹}, so that the derived right module sends δ_x to δ_{x·g}.
    for (int g = 0; g < right_set.group.order; ++g)
        perms[g] = right_set.act[right_set.group.inv(g)];
    return permutation_action(right_set.group, alg, perms);
}

GroupAction gset_function_action_left(const GSet& left_set) {
    auto alg = diagonal_algebra(left_set.size, "C(Y)");
    std::vector<std::vector<int>> perms(left_set.group.order);
    for (int g = 0; g < left_set.group.order; ++g) perms[g] = left_set.act[g];
    return permutation_action(left_set.group, alg, perms);
}

}  // namespace ncb
