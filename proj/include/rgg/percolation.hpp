#pragma once

#include <cstdint>
#include <vector>

#include "rgg/estimate.hpp"
#include "rgg/rng.hpp"

namespace rgg {

// Square-lattice bond configuration. The per-bond uniforms are retained so
// that re-thresholding at p' >= p yields a superset of open bonds.
struct LatticeConfig {
    int side = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> horizontal_u;  // L*(L-1): (row, col)->(row, col+1)
    std::vector<double> vertical_u;    // (L-1)*L: (row, col)->(row+1, col)

    bool horizontal_open(int row, int col) const { return horizontal_u[row * (side - 1) + col] < p; }
    bool vertical_open(int row, int col) const { return vertical_u[row * side + col] < p; }
    std::size_t open_count() const;
    void rethreshold(double new_p);  // same uniforms, new p
};

struct ClusterStats {
    std::vector<std::uint64_t> sizes;  // one entry per cluster, sums to L^2
    std::uint64_t largest = 0;
    bool spanning = false;  // some cluster touches both the left and right columns
    std::uint64_t cluster_of_center = 0;  // size of the center vertex's cluster
    bool center_touches_boundary = false;
};

LatticeConfig sample_bonds(int L, double p, RandomState& rng);
ClusterStats cluster_stats(const LatticeConfig& c);

// Finite-size proxy for theta(p): fraction of trials where the center
// vertex's cluster reaches the lattice boundary. Binomial standard error.
Estimate theta_hat(int L, double p, std::uint64_t trials, RandomState& rng);

// Mean size of the center vertex's cluster.
Estimate mean_cluster_size(int L, double p, std::uint64_t trials, RandomState& rng);

// 1/(2d-1), valid for d >= 2.
double pc_lower_bound(int d);

}  // namespace rgg
