#pragma once

#include <string>
#include <vector>

#include "ncb/action.hpp"
#include "ncb/cotensor.hpp"
#include "ncb/group.hpp"

namespace ncb {

/// A unitary representation ρ: G → U(n); the carrier of a noncommutative
/// local system.
struct LocalSystem {
    FiniteGroup group;
    int dim = 0;
    std::vector<Mat> rho;
};

LocalSystem make_local_system(const FiniteGroup& group, std::vector<Mat> rho,
                              double tol = 1e-9);
LocalSystem trivial_system(const FiniteGroup& group, int n);

/// The j-th character of ℤ_k as a 1-dimensional system.
LocalSystem character_system(int k, int j);

LocalSystem direct_sum(const LocalSystem& a, const LocalSystem& b);

/// The averaging idempotent p(a⊗x) = (1/|G|) Σ_g (a·g) ⊗ ρ(g)⁻¹x on
/// Ã ⊗ ℂⁿ (a·g := α_{g⁻¹}(a)), as a dense matrix in the product basis.
Mat averaging_projection(const GroupAction& action, const LocalSystem& system);

/// The flat-bundle module P = Ã □_G ℂⁿ, computed two independent ways
/// (projection image and cotensor kernel) and cross-checked.
struct FlatBundleModule {
    Mat projection;
    Mat basis;        // orthonormal basis of the image
    int dimension = 0;
    std::vector<int> rank_data;        // per-block trace of a representing idempotent over A
    std::vector<int> base_block_sizes; // Wedderburn block sizes of A = Ã^G
};

FlatBundleModule flat_bundle_module(const GroupAction& action, const LocalSystem& system,
                                    double tol = 1e-9);

/// Image of [ρ] − [triv_n] under the class map: the difference of the
/// rank vectors of P(ρ) and of the free module Aⁿ.
struct KClass {
    std::vector<int> plus, minus;
    std::string provenance;
};

KClass k_class(const GroupAction& action, const LocalSystem& system, double tol = 1e-9);

}  // namespace ncb
