#include "ncb/torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ncb/errors.hpp"
#include "ncb/linalg.hpp"

namespace ncb {

namespace {

Mat matrix_power(const Mat& m, int e) {
    Mat out = Mat::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

cdouble unit_phase(double turns) {
    return {std::cos(2.0 * std::numbers::pi * turns), std::sin(2.0 * std::numbers::pi * turns)};
}

}  // namespace

AlgebraElement FuzzyTorus::monomial(int a, int b) const {
    a = ((a % q) + q) % q;
    b = ((b % q) + q) % q;
    return {algebra, {matrix_power(clock, a) * matrix_power(shift, b)}};
}

FuzzyTorus fuzzy_torus(int q, int p) {
    if (q < 2 || q > 64) throw std::invalid_argument("fuzzy_torus: q must be in [2, 64]");
    int pm = ((p % q) + q) % q;
    if (std::gcd(pm == 0 ? q : pm, q) != 1)
        throw std::invalid_argument("fuzzy_torus: p and q must be coprime");
    FuzzyTorus t;
    t.q = q;
    t.p = p;
    t.zeta = unit_phase(static_cast<double>(p) / q);
    t.algebra = make_algebra({q}, "M_" + std::to_string(q));
    t.clock = Mat::Zero(q, q);
    for (int j = 0; j < q; ++j) t.clock(j, j) = unit_phase(static_cast<double>(p) * j / q);
    // V e_j = e_{j-1}, so that VU = ζ·UV.
    t.shift = Mat::Zero(q, q);
    for (int j = 0; j < q; ++j) t.shift((j - 1 + q) % q, j) = 1.0;
    return t;
}

namespace {

// First monomial U^a V^b (lexicographic in (a,b)) conjugating U ↦ phase_u·U
// and V ↦ phase_v·V.
std::optional<Mat> find_conjugator(const FuzzyTorus& t, cdouble phase_u, cdouble phase_v,
                                   double tol) {
    for (int a = 0; a < t.q; ++a)
        for (int b = 0; b < t.q; ++b) {
            Mat w = t.monomial(a, b).blocks[0];
            if ((w * t.clock * w.adjoint() - phase_u * t.clock).norm() <= tol &&
                (w * t.shift * w.adjoint() - phase_v * t.shift).norm() <= tol)
                return w;
        }
    return std::nullopt;
}

}  // namespace

TorusCoverScenario torus_cover(int q, int p, int m, int n, double tol) {
    if (m < 1 || n < 1 || q % m != 0 || q % n != 0)
        throw std::invalid_argument("torus_cover: m and n must divide q");
    if (m * n > 16) throw std::invalid_argument("torus_cover: m*n must be <= 16");

    TorusCoverScenario cover;
    cover.total = fuzzy_torus(q, p);
    cover.m = m;
    cover.n = n;

    auto wu = find_conjugator(cover.total, unit_phase(1.0 / m), 1.0, tol);
    if (!wu)
        throw UnsupportedParametersError(
            "torus_cover: no monomial conjugator realizes U -> zeta_m U for (q=" +
            std::to_string(q) + ", p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
    auto wv = find_conjugator(cover.total, 1.0, unit_phase(1.0 / n), tol);
    if (!wv)
        throw UnsupportedParametersError(
            "torus_cover: no monomial conjugator realizes V -> zeta_n V for (q=" +
            std::to_string(q) + ", p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
    cover.conjugator_u = *wu;
    cover.conjugator_v = *wv;

    FiniteGroup group = product_group(make_cyclic_group(m), make_cyclic_group(n));
    std::vector<std::vector<Mat>> unitaries;
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
            unitaries.push_back({matrix_power(*wu, j) * matrix_power(*wv, k)});
    cover.action = conjugation_action(group, cover.total.algebra, unitaries);

    cover.base = fixed_subalgebra(cover.action, tol);
    // The fixed algebra must coincide with span{U^{mj} V^{nk}}.
    int expected = (q / m) * (q / n);
    if (cover.base.dimension != expected)
        throw InternalInconsistencyError("torus_cover: fixed algebra has unexpected dimension");
    const Mat& B = cover.base.basis_matrix;
    for (int j = 0; j < q / m; ++j)
        for (int k = 0; k < q / n; ++k) {
            Vec v = flatten(cover.total.monomial(m * j, n * k));
            if ((v - B * (B.adjoint() * v)).norm() > 1e-7 * v.norm())
                throw InternalInconsistencyError(
                    "torus_cover: U^{mj}V^{nk} is not fixed by the constructed action");
        }
    return cover;
}

ConnectionForm make_connection(Mat coeff_u, Mat coeff_v) {
    if (coeff_u.rows() != coeff_u.cols() || coeff_v.rows() != coeff_v.cols() ||
        coeff_u.rows() != coeff_v.rows())
        throw std::invalid_argument("make_connection: coefficient matrices must be square, same rank");
    ConnectionForm c;
    c.rank = static_cast<int>(coeff_u.rows());
    c.coeff_u = std::move(coeff_u);
    c.coeff_v = std::move(coeff_v);
    return c;
}

Mat curvature(const ConnectionForm& conn) {
    return conn.coeff_u * conn.coeff_v - conn.coeff_v * conn.coeff_u;
}

ConnectionForm paper_connection(double c_u, double c_v) {
    Mat au = Mat::Zero(4, 4), av = Mat::Zero(4, 4);
    au(1, 0) = c_u;
    au(0, 1) = -c_u;
    av(3, 2) = c_v;
    av(2, 3) = -c_v;
    return make_connection(std::move(au), std::move(av));
}

ConnectionForm lift_connection(const ConnectionForm& conn, const TorusCoverScenario& cover) {
    (void)cover;
    // Under the canonical identification of the generators of F⊗_B Ã with
    // those of F, the lifted connection has the same constant coefficients.
    return conn;
}

DescentResult twisted_descent(const TorusCoverScenario& cover, const LocalSystem& system,
                              const ConnectionForm& lifted, double tol) {
    if (system.dim != lifted.rank)
        throw std::invalid_argument("twisted_descent: system dimension must equal lifted rank");
    if (system.group.table != cover.action.group.table)
        throw std::invalid_argument("twisted_descent: system group must equal cover group");

    const FiniteGroup& G = cover.action.group;
    int d = cover.total.algebra->dim();
    int r = lifted.rank;
    long dim = static_cast<long>(d) * r;

    DescentResult out;
    // Invariant projection of the twisted action g(a⊗x) = α_g(a)⊗ρ(g)x.
    out.projection = Mat::Zero(dim, dim);
    for (int g = 0; g < G.order; ++g)
        out.projection += kron(automorphism_matrix(cover.action, g), system.rho[g]);
    out.projection /= G.order;

    out.module_basis = range_basis(out.projection, 0.5);
    out.module_dimension = static_cast<int>(out.module_basis.cols());
    if (out.module_dimension % cover.base.dimension != 0)
        throw InternalInconsistencyError(
            "twisted_descent: module dimension not a multiple of the base dimension");
    out.base_rank = out.module_dimension / cover.base.dimension;

    Mat lift_u = kron(Mat::Identity(d, d), lifted.coeff_u);
    Mat lift_v = kron(Mat::Identity(d, d), lifted.coeff_v);
    Mat complement = Mat::Identity(dim, dim) - out.projection;
    out.well_definedness_residual =
        std::max(spectral_norm(out.projection * lift_u * complement),
                 spectral_norm(out.projection * lift_v * complement));
    if (out.well_definedness_residual > tol)
        throw InternalInconsistencyError(
            "twisted_descent: descended connection is not well defined (residual " +
            std::to_string(out.well_definedness_residual) + ")");

    out.coeff_u = out.module_basis.adjoint() * lift_u * out.module_basis;
    out.coeff_v = out.module_basis.adjoint() * lift_v * out.module_basis;
    out.descended_curvature = out.coeff_u * out.coeff_v - out.coeff_v * out.coeff_u;

    bool trivial = true;
    for (const Mat& u : system.rho)
        if ((u - Mat::Identity(r, r)).norm() > 1e-12) trivial = false;
    if (trivial) {
        // The canonical invariant basis {b_α ⊗ e_i} must span the module and
        // carry the descended operators back to the input coefficients.
        Mat canonical = kron(cover.base.basis_matrix, Mat::Identity(r, r));
        const Mat& Q = out.module_basis;
        double span_res = (canonical - Q * (Q.adjoint() * canonical)).norm();
        Mat du = canonical.adjoint() * lift_u * canonical;
        Mat dv = canonical.adjoint() * lift_v * canonical;
        Mat idb = Mat::Identity(cover.base.dimension, cover.base.dimension);
        double coeff_res = std::max((du - kron(idb, lifted.coeff_u)).norm(),
                                    (dv - kron(idb, lifted.coeff_v)).norm());
        out.reproduction_residual = std::max(span_res, coeff_res);
    }
    return out;
}

}  // namespace ncb
