#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rgg/estimate.hpp"
#include "rgg/graph.hpp"

namespace rgg {

struct ExperimentConfig {
    std::shared_ptr<const Domain> domain;
    ConnectionModel model;
    std::vector<double> rho_grid;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    bool respect_visibility = true;
    int jobs = 1;  // worker threads; results are independent of this value
};

// Fraction of trials whose graph is one component, one Estimate per rho.
// Graphs with n <= 1 vertices count as connected.
std::vector<Estimate> estimate_pfc(const ExperimentConfig& cfg);

// Betweenness profile over probe displacements from the disk center. Each
// trial inserts one probe vertex per eps (plus an anchor probe at eps = 0),
// builds the soft graph, and records the probes' Brandes betweenness. The
// returned means are normalized by the anchor bin. Disk domains only.
std::vector<Estimate> betweenness_profile(const ExperimentConfig& cfg,
                                          const std::vector<double>& eps_grid);

struct GeodesicEstimate {
    double r = 0.0;
    Estimate optimal_count;   // paths of exactly the minimum admissible hop count
    Estimate geodesic_count;  // shortest-path count whatever the hop length
};

// Two conditioned terminals at separation r in a padded window, hard unit-range
// graph over a PPP of intensity rho. d = 2 only.
std::vector<GeodesicEstimate> geodesic_experiment(int d, double rho,
                                                  const std::vector<double>& r_grid,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  int jobs = 1);

struct SigmaDistribution {
    std::vector<double> pmf;  // index k = optimal-path count
    double mean = 0.0;
    double dispersion = 0.0;  // variance / mean
    std::uint64_t trials = 0;
};

// Empirical distribution of the optimal-hop path count at separation r.
SigmaDistribution sigma_distribution(double rho, double r, std::uint64_t trials,
                                     std::uint64_t seed, int jobs = 1);

struct IsolationResult {
    Estimate fraction_with_isolated;  // among disconnected trials
    std::uint64_t disconnected_trials = 0;
};

// Among disconnected trials, how often an isolated vertex is present.
std::vector<IsolationResult> isolated_vs_disconnected(const ExperimentConfig& cfg);

}  // namespace rgg
