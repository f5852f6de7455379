#include "ncb/flat_bundle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncb/errors.hpp"
#include "ncb/linalg.hpp"

namespace ncb {

LocalSystem make_local_system(const FiniteGroup& group, std::vector<Mat> rho, double tol) {
    if (static_cast<int>(rho.size()) != group.order)
        throw std::invalid_argument("local system: one matrix per group element");
    int n = static_cast<int>(rho[0].rows());
    for (const Mat& u : rho) {
        if (u.rows() != n || u.cols() != n)
            throw std::invalid_argument("local system: matrices must be square of equal size");
        if ((u.adjoint() * u - Mat::Identity(n, n)).norm() > tol)
            throw std::invalid_argument("local system: matrices must be unitary");
    }
    if ((rho[group.identity] - Mat::Identity(n, n)).norm() != 0.0)
        throw std::invalid_argument("local system: rho(e) must be the identity exactly");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h)
            if ((rho[g] * rho[h] - rho[group.mul(g, h)]).norm() > tol)
                throw std::invalid_argument("local system: homomorphism law fails");
    return {group, n, std::move(rho)};
}

LocalSystem trivial_system(const FiniteGroup& group, int n) {
    return make_local_system(group, std::vector<Mat>(group.order, Mat::Identity(n, n)));
}

LocalSystem character_system(int k, int j) {
    FiniteGroup group = make_cyclic_group(k);
    std::vector<Mat> rho;
    for (int g = 0; g < k; ++g) {
        Mat m(1, 1);
        if (g == 0) {
            m(0, 0) = 1.0;
        } else {
            double phi = 2.0 * std::numbers::pi * j * g / k;
            m(0, 0) = cdouble(std::cos(phi), std::sin(phi));
        }
        rho.push_back(std::move(m));
    }
    return make_local_system(group, std::move(rho));
}

LocalSystem direct_sum(const LocalSystem& a, const LocalSystem& b) {
    if (a.group.table != b.group.table)
        throw std::invalid_argument("direct_sum: group mismatch");
    std::vector<Mat> rho;
    for (int g = 0; g < a.group.order; ++g) {
        Mat m = Mat::Zero(a.dim + b.dim, a.dim + b.dim);
        m.topLeftCorner(a.dim, a.dim) = a.rho[g];
        m.bottomRightCorner(b.dim, b.dim) = b.rho[g];
        rho.push_back(std::move(m));
    }
    return make_local_system(a.group, std::move(rho));
}

Mat averaging_projection(const GroupAction& action, const LocalSystem& system) {
    if (action.group.table != system.group.table)
        throw std::invalid_argument("averaging_projection: group mismatch");
    const FiniteGroup& G = action.group;
    int d = action.algebra->dim();
    int n = system.dim;
    Mat p = Mat::Zero(static_cast<long>(d) * n, static_cast<long>(d) * n);
    for (int g = 0; g < G.order; ++g)
        p += kron(automorphism_matrix(action, G.inv(g)), system.rho[g].adjoint());
    return p / G.order;
}

FlatBundleModule flat_bundle_module(const GroupAction& action, const LocalSystem& system,
                                    double tol) {
    FlatBundleModule out;
    out.projection = averaging_projection(action, system);
    out.basis = range_basis(out.projection, 0.5);  // projector: range = σ ≈ 1 part
    out.dimension = static_cast<int>(out.basis.cols());

    // Independent route: the cotensor kernel of (Ã as right module, ℂⁿ via ρ).
    CotensorSubspace ct = cotensor_modules(right_module_of_action(action),
                                           make_left_module(system.group, system.rho), tol);
    if (ct.dimension != out.dimension)
        throw InternalInconsistencyError(
            "flat_bundle_module: projection image dimension != cotensor dimension (broken "
            "covering input)");

    // Rank data over the base: per Wedderburn block j of A = Ã^G, the trace
    // of a representing idempotent is dim(P·z_j)/m_j.
    FixedSubalgebra base = fixed_subalgebra(action, tol);
    WedderburnData wd = wedderburn_decomposition(base, tol);
    int n = system.dim;
    for (size_t j = 0; j < wd.central_projections.size(); ++j) {
        Mat rz = kron(right_mult_matrix(wd.central_projections[j]), Mat::Identity(n, n));
        int idim = column_rank(rz * out.basis, tol);
        int m = wd.block_sizes[j];
        if (idim % m != 0)
            throw InternalInconsistencyError(
                "flat_bundle_module: module component dimension not divisible by block size");
        out.rank_data.push_back(idim / m);
        out.base_block_sizes.push_back(m);
    }
    return out;
}

KClass k_class(const GroupAction& action, const LocalSystem& system, double tol) {
    FlatBundleModule mod = flat_bundle_module(action, system, tol);
    KClass cls;
    cls.plus = mod.rank_data;
    for (int m : mod.base_block_sizes) cls.minus.push_back(system.dim * m);
    cls.provenance = "[rho] - [triv_" + std::to_string(system.dim) + "] over " +
                     action.algebra->label;
    return cls;
}

}  // namespace ncb
