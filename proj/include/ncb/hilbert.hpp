#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncb/action.hpp"

namespace ncb {

/// The Hilbert module structure on Ã over its fixed-point subalgebra,
/// with the averaged inner product ⟨x,y⟩ = (1/|G|) Σ_g α_g(x*y).
struct HilbertModule {
    GroupAction action;     // G acting on Ã
    FixedSubalgebra base;   // B = Ã^G
};

HilbertModule make_hilbert_module(const GroupAction& action, double tol = 1e-9);

/// ⟨x, y⟩ = (1/|G|) Σ_g α_g(x*y); conjugate-linear in x, lands in the base.
AlgebraElement module_inner_product(const HilbertModule& module, const AlgebraElement& x,
                                    const AlgebraElement& y);

/// Dense matrix of θ_{ξ,ζ}: η ↦ ζ·⟨ξ, η⟩ in the deterministic basis of Ã.
Mat rank_one_operator(const HilbertModule& module, const AlgebraElement& xi,
                      const AlgebraElement& zeta);

/// True iff the translates {α_g(w) : g ∈ G, w ∈ basis} are linearly
/// independent and jointly span Ã, both at tolerance tol.
bool verify_g_decomposition(const GroupAction& action,
                            const std::vector<AlgebraElement>& subspace_basis, double tol);

struct GaloisCandidate {
    HilbertModule module;
    std::vector<AlgebraElement> frame_e;    // e_i, in the base's parent embedding
    std::vector<AlgebraElement> frame_xi;   // ξ_i in Ã
};

/// Residuals of the four frame conditions:
///   1. ‖Σ e_i* e_i − 1‖
///   2. ‖Σ_{g,i} θ_{gξ_i, gξ_i} − Id‖   (operator-matrix 2-norm)
///   3. max_i ‖⟨ξ_i, ξ_i⟩ − e_i* e_i‖
///   4. max over nontrivial g and i of ‖⟨gξ_i, ξ_i⟩‖
struct GaloisReport {
    std::array<double, 4> condition_residuals{};
    bool verdict = false;
    double tolerance = 0.0;
    std::array<std::string, 4> details;
};

GaloisReport verify_galois_conditions(const GaloisCandidate& candidate, double tol);

/// The canonical frame for a free action on a commutative algebra: one
/// (e_i, ξ_i) pair per coordinate orbit, with ξ_i = √|G| times the
/// indicator of an orbit transversal point and e_i the orbit indicator.
/// Throws UnsupportedAlgebraError unless the action is commutative and free.
GaloisCandidate free_commutative_frame(const GroupAction& action, double tol = 1e-9);

}  // namespace ncb
