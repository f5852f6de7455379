#include "ncb/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "ncb/errors.hpp"
#include "ncb/linalg.hpp"

namespace ncb {

HilbertModule make_hilbert_module(const GroupAction& action, double tol) {
    return {action, fixed_subalgebra(action, tol)};
}

AlgebraElement module_inner_product(const HilbertModule& module, const AlgebraElement& x,
                                    const AlgebraElement& y) {
    return conditional_expectation(module.action, x.adjoint() * y);
}

Mat rank_one_operator(const HilbertModule& module, const AlgebraElement& xi,
                      const AlgebraElement& zeta) {
    int d = module.action.algebra->dim();
    Mat m(d, d);
    for (int k = 0; k < d; ++k) {
        AlgebraElement eta = basis_element(module.action.algebra, k);
        m.col(k) = flatten(zeta * module_inner_product(module, xi, eta));
    }
    return m;
}

bool verify_g_decomposition(const GroupAction& action,
                            const std::vector<AlgebraElement>& subspace_basis, double tol) {
    int d = action.algebra->dim();
    int cols = action.group.order * static_cast<int>(subspace_basis.size());
    Mat translates(d, cols);
    int c = 0;
    for (int g = 0; g < action.group.order; ++g)
        for (const auto& w : subspace_basis)
            translates.col(c++) = flatten(action.apply(g, w));
    // Independent and spanning <=> rank equals both the column count and d.
    int r = column_rank(translates, tol);
    return r == cols && r == d;
}

GaloisReport verify_galois_conditions(const GaloisCandidate& candidate, double tol) {
    if (candidate.frame_e.empty() || candidate.frame_e.size() != candidate.frame_xi.size())
        throw std::invalid_argument(
            "verify_galois_conditions: frames must be nonempty and of equal length");
    const HilbertModule& module = candidate.module;
    const GroupAction& action = module.action;
    const AlgebraPtr& alg = action.algebra;
    int d = alg->dim();
    int N = action.group.order;
    size_t I = candidate.frame_e.size();

    GaloisReport report;
    report.tolerance = tol;

    // 1. Σ e_i* e_i = 1.
    AlgebraElement sum_ee = zero_element(alg);
    for (const auto& e : candidate.frame_e) sum_ee += e.adjoint() * e;
    report.condition_residuals[0] = operator_norm(sum_ee - identity_element(alg));
    report.details[0] = "unit decomposition sum e_i* e_i";

    // 2. Σ_{g,i} θ_{gξ_i, gξ_i} = Id on Ã.
    Mat op_sum = Mat::Zero(d, d);
    for (int g = 0; g < N; ++g)
        for (const auto& xi : candidate.frame_xi) {
            AlgebraElement gxi = action.apply(g, xi);
            op_sum += rank_one_operator(module, gxi, gxi);
        }
    report.condition_residuals[1] = spectral_norm(op_sum - Mat::Identity(d, d));
    report.details[1] = "reproducing frame sum of rank-one operators";

    // 3. ⟨ξ_i, ξ_i⟩ = e_i* e_i.
    double res3 = 0.0;
    for (size_t i = 0; i < I; ++i)
        res3 = std::max(res3, operator_norm(
                                  module_inner_product(module, candidate.frame_xi[i],
                                                       candidate.frame_xi[i]) -
                                  candidate.frame_e[i].adjoint() * candidate.frame_e[i]));
    report.condition_residuals[2] = res3;
    report.details[2] = "frame normalization <xi_i, xi_i> = e_i* e_i";

    // 4. ⟨gξ_i, ξ_i⟩ = 0 for nontrivial g (vacuous for the trivial group).
    double res4 = 0.0;
    for (int g = 0; g < N; ++g) {
        if (g == action.group.identity) continue;
        for (const auto& xi : candidate.frame_xi)
            res4 = std::max(res4, operator_norm(module_inner_product(
                                      module, action.apply(g, xi), xi)));
    }
    report.condition_residuals[3] = res4;
    report.details[3] = "translate orthogonality <g xi_i, xi_i> = 0";

    report.verdict = true;
    for (double r : report.condition_residuals)
        if (r > tol) report.verdict = false;
    return report;
}

GaloisCandidate free_commutative_frame(const GroupAction& action, double tol) {
    if (!action.algebra->commutative())
        throw UnsupportedAlgebraError("free_commutative_frame: algebra must be commutative");
    if (!is_free_on_spectrum(action))
        throw UnsupportedAlgebraError("free_commutative_frame: action must be free");

    int npoints = action.algebra->num_blocks();
    int N = action.group.order;
    std::vector<int> orbit(npoints, -1);
    std::vector<int> transversal;
    for (int x = 0; x < npoints; ++x) {
        if (orbit[x] >= 0) continue;
        int o = static_cast<int>(transversal.size());
        transversal.push_back(x);
        for (int g = 0; g < N; ++g) orbit[action.automorphisms[g].block_dest[x]] = o;
    }

    GaloisCandidate cand;
    cand.module = make_hilbert_module(action, tol);
    for (size_t i = 0; i < transversal.size(); ++i) {
        AlgebraElement e = zero_element(action.algebra);
        for (int x = 0; x < npoints; ++x)
            if (orbit[x] == static_cast<int>(i)) e.blocks[x](0, 0) = 1.0;
        AlgebraElement xi = zero_element(action.algebra);
        xi.blocks[transversal[i]](0, 0) = std::sqrt(static_cast<double>(N));
        cand.frame_e.push_back(std::move(e));
        cand.frame_xi.push_back(std::move(xi));
    }
    return cand;
}

}  // namespace ncb
