#pragma once

#include <optional>

#include "ncb/action.hpp"
#include "ncb/algebra.hpp"
#include "ncb/flat_bundle.hpp"

namespace ncb {

/// Desk-scale model of the rational noncommutative torus: the q×q
/// clock/shift pair with VU = ζ·UV, ζ = e^{2πip/q}, inside M_q(ℂ).
struct FuzzyTorus {
    int q = 0, p = 0;
    cdouble zeta;
    AlgebraPtr algebra;  // M_q(ℂ)
    Mat clock;           // U
    Mat shift;           // V

    /// U^a V^b as an algebra element.
    AlgebraElement monomial(int a, int b) const;
};

FuzzyTorus fuzzy_torus(int q, int p);

/// The ℤ_m×ℤ_n covering action on the torus: the generators multiply U by
/// ζ_m and V by ζ_n, realized by conjugation with monomial unitaries found
/// by exhaustive search.  Fixed subalgebra = span{U^{mj} V^{nk}}.
struct TorusCoverScenario {
    FuzzyTorus total;
    int m = 0, n = 0;
    GroupAction action;       // ℤ_m×ℤ_n, lexicographic element order
    FixedSubalgebra base;
    Mat conjugator_u;         // realizes U ↦ ζ_m U
    Mat conjugator_v;         // realizes V ↦ ζ_n V
};

TorusCoverScenario torus_cover(int q, int p, int m, int n, double tol = 1e-9);

/// Constant connection on a free module of the given rank, with coefficient
/// matrices pairing with the symbols du and dv.
struct ConnectionForm {
    int rank = 0;
    Mat coeff_u, coeff_v;
};

ConnectionForm make_connection(Mat coeff_u, Mat coeff_v);

/// Curvature coefficient of du∧dv.  For constant coefficients the exterior
/// derivative term vanishes, leaving the commutator [coeff_u, coeff_v].
Mat curvature(const ConnectionForm& conn);

/// The rank-4 connection ∇e₁ = c_u e₂⊗du, ∇e₂ = −c_u e₁⊗du,
/// ∇e₃ = c_v e₄⊗dv, ∇e₄ = −c_v e₃⊗dv.
ConnectionForm paper_connection(double c_u, double c_v);

/// Lift to the induced free module over the total algebra: same coefficient
/// matrices under the canonical basis identification.
ConnectionForm lift_connection(const ConnectionForm& conn, const TorusCoverScenario& cover);

/// Twisted descent through a local system ρ: builds the twisted action
/// g(a⊗x) = α_g(a)⊗ρ(g)x on Ã⊗ℂʳ, its invariant projection p′, the
/// descended module and the descended connection ∇′p′(x) = (p′⊗Id)(∇̃x).
struct DescentResult {
    Mat projection;              // p' on Ã⊗ℂʳ
    Mat module_basis;            // orthonormal basis of the descended module
    int module_dimension = 0;    // complex dimension of F'
    int base_rank = 0;           // module_dimension / dim(A^G)
    Mat coeff_u, coeff_v;        // descended coefficients on the image coordinates
    Mat descended_curvature;     // [coeff_u, coeff_v]
    double well_definedness_residual = 0.0;
    // Set when ρ is trivial: residual of the identification of the descended
    // data with the input connection under the canonical invariant basis.
    std::optional<double> reproduction_residual;
};

DescentResult twisted_descent(const TorusCoverScenario& cover, const LocalSystem& system,
                              const ConnectionForm& lifted, double tol = 1e-9);

}  // namespace ncb
