#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ncb/action.hpp"
#include "ncb/algebra.hpp"
#include "ncb/group.hpp"

namespace ncb {

/// Right G-module: operators R_g with R_g R_h = R_{hg}.
struct GModuleRight {
    FiniteGroup group;
    int dim = 0;
    std::vector<Mat> ops;
};

/// Left G-module: operators L_g with L_g L_h = L_{gh}.
struct GModuleLeft {
    FiniteGroup group;
    int dim = 0;
    std::vector<Mat> ops;
};

GModuleRight make_right_module(const FiniteGroup& group, std::vector<Mat> ops,
                               double tol = 1e-9);
GModuleLeft make_left_module(const FiniteGroup& group, std::vector<Mat> ops, double tol = 1e-9);

/// The regular right module ℂ[G]: δ_x · g = δ_{xg}.
GModuleRight regular_right_module(const FiniteGroup& group);

/// View a (left) GroupAction on an algebra as a right module via
/// a·g := α_{g⁻¹}(a), resp. as a left module via the α_g matrices.
GModuleRight right_module_of_action(const GroupAction& action);
GModuleLeft left_module_of_action(const GroupAction& action);

/// Basis of M □_G N inside M ⊗ N (index ordering: m-index major).
struct CotensorSubspace {
    int dim_m = 0, dim_n = 0;
    Mat basis;  // (dim_m·dim_n) × dimension, orthonormal, sign-fixed
    int dimension = 0;
};

/// Joint kernel of {R_g ⊗ Id − Id ⊗ L_g : g ∈ G}, all group elements
/// enumerated, null space at tolerance tol.
CotensorSubspace cotensor_modules(const GModuleRight& m, const GModuleLeft& n,
                                  double tol = 1e-9);

/// The comultiplication of Map(G,ℂ) in the δ_g basis: an integer
/// |G|² × |G| matrix sending δ_g to Σ_{g₁g₂=g} δ_{g₁} ⊗ δ_{g₂}.
struct HopfDelta {
    FiniteGroup group;
    Eigen::MatrixXi delta_matrix;
};

HopfDelta hopf_comultiplication(const FiniteGroup& group);

/// Exact (integer) coassociativity check (Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ.
bool is_coassociative(const HopfDelta& delta);

/// Cotensor computed through the Map(G,ℂ)-comodule route: converts both
/// module structures to coactions and intersects in M ⊗ H ⊗ N.  Used as an
/// algebraically independent route to the same subspace.
CotensorSubspace hopf_cotensor(const GModuleRight& m, const GModuleLeft& n, double tol = 1e-9);

/// Borel construction: the linear cotensor subspace C ⊂ Ã⊗B and the
/// subalgebra it generates (span stabilization under multiplication).
struct BorelResult {
    Mat linear_basis;
    int linear_dimension = 0;
    Mat algebra_basis;
    int algebra_dimension = 0;
};

BorelResult borel_construction(const GroupAction& a_tilde_right, const GroupAction& b_left,
                               double tol = 1e-9);

/// Finite G-set: act[g][x] is the image of point x under g (right sets
/// store x·g, left sets store g·x).
struct GSet {
    FiniteGroup group;
    int size = 0;
    std::vector<std::vector<int>> act;
};

GSet make_right_gset(const FiniteGroup& group, std::vector<std::vector<int>> act);
GSet make_left_gset(const FiniteGroup& group, std::vector<std::vector<int>> act);

/// Free right G-set G itself under right translation.
GSet regular_right_gset(const FiniteGroup& group);

/// X×Y / ≈ with (x·g, y) ≈ (x, g⁻¹·y), by union-find.
struct BorelOrbitResult {
    int orbit_count = 0;
    std::vector<int> orbit_of;  // indexed by x·|Y| + y
    AlgebraPtr quotient_algebra;
};

BorelOrbitResult commutative_oracle(const GSet& x_right, const GSet& y_left);

/// Function-algebra action of a G-set: for a right set this is the induced
/// left action (g·f)(x) = f(x·g) presented as a GroupAction on ℂ^{|X|}.
GroupAction gset_function_action(const GSet& right_set);
GroupAction gset_function_action_left(const GSet& left_set);

}  // namespace ncb
