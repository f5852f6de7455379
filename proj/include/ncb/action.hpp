#pragma once

#include <string>
#include <vector>

#include "ncb/algebra.hpp"
#include "ncb/group.hpp"

namespace ncb {

/// A *-automorphism of ⊕ M_{n_i}(ℂ): permute blocks, then conjugate each
/// landing block by a unitary.  Storing this structural form (rather than an
/// arbitrary linear map) makes *-preservation and multiplicativity built in;
/// check_action still verifies them numerically against corrupted data.
struct Automorphism {
    std::vector<int> block_dest;   // source block i lands in block_dest[i]
    std::vector<Mat> unitaries;    // indexed by destination block
};

struct GroupAction {
    FiniteGroup group;
    AlgebraPtr algebra;
    std::vector<Automorphism> automorphisms;  // one per group element

    AlgebraElement apply(int g, const AlgebraElement& a) const;
};

/// Dense matrix of α_g in the deterministic basis of the algebra.
Mat automorphism_matrix(const GroupAction& action, int g);

struct ActionViolation {
    std::string law;   // which law failed
    int g = -1, h = -1;
    double residual = 0.0;
};

/// Verifies α_e = id, α_g∘α_h = α_{gh}, multiplicativity and *-preservation
/// on the basis.  Failures are returned as data, not thrown.
std::vector<ActionViolation> check_action(const GroupAction& action, double tol);

/// E(a) = (1/|G|) Σ_g α_g(a).
AlgebraElement conditional_expectation(const GroupAction& action, const AlgebraElement& a);

/// The fixed-point subalgebra A^G, materialized as an orthonormal
/// (Hilbert-Schmidt) basis inside the parent algebra.
struct FixedSubalgebra {
    AlgebraPtr parent;
    std::vector<AlgebraElement> basis;
    Mat basis_matrix;  // parent-dim × dimension, columns = flattened basis
    int dimension = 0;
};

FixedSubalgebra fixed_subalgebra(const GroupAction& action, double tol = 1e-9);

/// Freeness proxy for commutative algebras: no non-identity g fixes a
/// coordinate.  Throws UnsupportedAlgebraError on noncommutative input.
bool is_free_on_spectrum(const GroupAction& action);

/// Wedderburn data of a fixed subalgebra A ≅ ⊕_j M_{m_j}: the minimal
/// central projections z_j (as elements of the parent algebra) and the
/// abstract block sizes m_j.
struct WedderburnData {
    std::vector<AlgebraElement> central_projections;
    std::vector<int> block_sizes;
};

WedderburnData wedderburn_decomposition(const FixedSubalgebra& sub, double tol = 1e-9);

// Common action constructors.

/// Trivial action of the group on an algebra.
GroupAction trivial_action(const FiniteGroup& group, const AlgebraPtr& algebra);

/// Action on a commutative algebra ℂ^k by coordinate permutations;
/// perms[g][i] is the destination of coordinate i under g.
GroupAction permutation_action(const FiniteGroup& group, const AlgebraPtr& algebra,
                               const std::vector<std::vector<int>>& perms);

/// Action by conjugation: α_g = Ad(u_g) blockwise, no block permutation.
GroupAction conjugation_action(const FiniteGroup& group, const AlgebraPtr& algebra,
                               const std::vector<std::vector<Mat>>& unitaries);

/// Free action of G on ℂ^{|G|·copies}: coordinate (o, h) ↦ (o, gh).
GroupAction free_translation_action(const FiniteGroup& group, int copies);

}  // namespace ncb
