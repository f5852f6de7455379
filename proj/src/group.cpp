#include "ncb/group.hpp"

#include <stdexcept>
#include <string>

namespace ncb {

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0 || n > kMaxGroupOrder)
        throw std::invalid_argument("group_from_table: order must be in [1, 64]");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group_from_table: table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("group_from_table: entry out of range");
    }
    // Identity: the unique e with eg = ge = g for all g.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            ok = table[e][g] == g && table[g][e] == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("group_from_table: no identity element");
    // Associativity, exhaustively.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument(
                        "group_from_table: associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    std::vector<int> inverses(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (table[g][h] == identity && table[h][g] == identity) {
                inverses[g] = h;
                break;
            }
        if (inverses[g] < 0)
            throw std::invalid_argument("group_from_table: element " + std::to_string(g) +
                                        " has no inverse");
    }
    FiniteGroup grp;
    grp.order = n;
    grp.table = table;
    grp.identity = identity;
    grp.inverses = std::move(inverses);
    return grp;
}

FiniteGroup make_cyclic_group(int k) {
    if (k < 1) throw std::invalid_argument("make_cyclic_group: order must be >= 1");
    if (k > kMaxGroupOrder) throw std::invalid_argument("make_cyclic_group: order exceeds 64");
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) table[a][b] = (a + b) % k;
    return group_from_table(table);
}

FiniteGroup product_group(const FiniteGroup& g1, const FiniteGroup& g2) {
    long long n = static_cast<long long>(g1.order) * g2.order;
    if (n > kMaxGroupOrder)
        throw std::invalid_argument("product_group: combined order exceeds 64");
    int n2 = g2.order;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a1 = 0; a1 < g1.order; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < g1.order; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    table[a1 * n2 + a2][b1 * n2 + b2] =
                        g1.table[a1][b1] * n2 + g2.table[a2][b2];
    return group_from_table(table);
}

int element_order(const FiniteGroup& group, int g) {
    int e = 1;
    int cur = g;
    while (cur != group.identity) {
        cur = group.mul(cur, g);
        ++e;
    }
    return e;
}

}  // namespace ncb
