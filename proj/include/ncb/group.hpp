#pragma once

#include <vector>

namespace ncb {

/// A finite group given by its full multiplication table.
/// table[g][h] is the index of gh.  Orders are capped at 64 so the group
/// laws can be checked exhaustively on construction.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverses;

    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const { return inverses[g]; }
};

inline constexpr int kMaxGroupOrder = 64;

/// Validates closure, associativity, identity and inverses; throws
/// std::invalid_argument on any violation.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);

/// ℤ_k with canonical generator index 1.
FiniteGroup make_cyclic_group(int k);

/// Direct product with lexicographic element indexing:
/// (a, b) ↦ a·|G2| + b.
FiniteGroup product_group(const FiniteGroup& g1, const FiniteGroup& g2);

/// Smallest e >= 1 with g^e = identity.
int element_order(const FiniteGroup& group, int g);

}  // namespace ncb
