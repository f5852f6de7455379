#pragma once

#include <string>

#include "ncb/cotensor.hpp"

namespace ncb {

/// Brute-force cross-check results.  Oracles are implemented on code paths
/// independent of the main library (row reduction instead of SVD, BFS
/// closure instead of union-find) so agreement is evidence, not tautology.
struct OracleResult {
    std::string quantity;
    long value = 0;
    std::string method;
};

/// Cotensor dimension by dense Gaussian elimination over the stacked
/// constraint system, with a deliberately looser pivot threshold (1e-7).
OracleResult oracle_cotensor_dim(const GModuleRight& m, const GModuleLeft& n);

/// Borel orbit count by breadth-first closure of the relation
/// (x·g, y) ≈ (x, g⁻¹·y).
OracleResult oracle_borel_orbits(const GSet& x_right, const GSet& y_left);

}  // namespace ncb
