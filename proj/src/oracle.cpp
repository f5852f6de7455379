#include "ncb/oracle.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace ncb {

OracleResult oracle_cotensor_dim(const GModuleRight& m, const GModuleLeft& n) {
    if (m.dim > 64 || n.dim > 64)
        throw std::invalid_argument("oracle_cotensor_dim: dims must be <= 64");
    int N = m.group.order;
    int dm = m.dim, dn = n.dim;
    long rows = static_cast<long>(N) * dm * dn;
    long cols = static_cast<long>(dm) * dn;
    Mat a = Mat::Zero(rows, cols);
    for (int g = 0; g < N; ++g)
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) {
                long row = (static_cast<long>(g) * dm + i) * dn + j;
                for (int k = 0; k < dm; ++k) a(row, static_cast<long>(k) * dn + j) += m.ops[g](i, k);
                for (int k = 0; k < dn; ++k) a(row, static_cast<long>(i) * dn + k) -= n.ops[g](j, k);
            }

    // Row reduction with partial pivoting; pivot threshold 1e-7 of the
    // largest entry, looser than the main path by design.
    double maxabs = 0.0;
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) maxabs = std::max(maxabs, std::abs(a(r, c)));
    double threshold = 1e-7 * std::max(maxabs, 1.0);

    long rank = 0;
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pivot = -1;
        double best = threshold;
        for (long r = row; r < rows; ++r)
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                pivot = r;
            }
        if (pivot < 0) continue;
        a.row(pivot).swap(a.row(row));
        for (long r = 0; r < rows; ++r) {
            if (r == row) continue;
            cdouble f = a(r, col) / a(row, col);
            if (f != cdouble(0.0)) a.row(r) -= f * a.row(row);
        }
        ++rank;
        ++row;
    }
    return {"cotensor_dimension", cols - rank,
            "stacked constraints, Gaussian elimination, pivot threshold 1e-7"};
}

OracleResult oracle_borel_orbits(const GSet& x_right, const GSet& y_left) {
    long total = static_cast<long>(x_right.size) * y_left.size;
    if (total > 10000)
        throw std::invalid_argument("oracle_borel_orbits: |X|*|Y| must be <= 10000");
    const FiniteGroup& G = x_right.group;
    int ny = y_left.size;
    std::vector<char> visited(total, 0);
    long orbits = 0;
    for (long start = 0; start < total; ++start) {
        if (visited[start]) continue;
        ++orbits;
        std::deque<long> queue{start};
        visited[start] = 1;
        while (!queue.empty()) {
            long cur = queue.front();
            queue.pop_front();
            int x = static_cast<int>(cur / ny);
            int y = static_cast<int>(cur % ny);
            for (int g = 0; g < G.order; ++g) {
                long next = static_cast<long>(x_right.act[g][x]) * ny + y_left.act[G.inv(g)][y];
                if (!visited[next]) {
                    visited[next] = 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return {"borel_orbit_count", orbits, "breadth-first closure of (xg, y) ~ (x, g^-1 y)"};
}

}  // namespace ncb
