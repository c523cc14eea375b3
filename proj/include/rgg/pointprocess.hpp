#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "rgg/geometry.hpp"
#include "rgg/rng.hpp"

namespace rgg {

struct PointSet {
    std::vector<Point> points;
    std::shared_ptr<const Domain> domain;
    std::uint64_t seed = 0;

    std::size_t size() const { return points.size(); }
};

// CSV with header x0,x1[,x2...], one point per row, 17 significant digits.
void write_points_csv(std::ostream& os, const PointSet& ps);

// N ~ Poisson(rho * |domain|), positions i.i.d. uniform.
PointSet sample_poisson(std::shared_ptr<const Domain> domain, double rho, RandomState& rng);

// Exactly n i.i.d. uniform points.
PointSet sample_binomial(std::shared_ptr<const Domain> domain, std::size_t n, RandomState& rng);

struct StraussParams {
    double omega = 0.5;          // repulsion strength, in [0,1]
    double capital_omega = 0.1;  // interaction range
    std::uint64_t steps = 0;
    // displacement length is beta(a,b)-distributed, scaled to the domain diameter
    double beta_a = 2.0;
    double beta_b = 2.0;
};

// min(1, omega^(n_new - n_old)); omega = 0 handled as the degenerate limit.
double strauss_acceptance(double omega, double n_new, double n_old);

// Metropolis-Hastings over configurations of n points: random vertex, uniform
// angle, beta-distributed displacement; moves leaving the domain rejected.
PointSet strauss_mcmc(std::shared_ptr<const Domain> domain, std::size_t n,
                      const StraussParams& params, RandomState& rng);

// Interaction statistic n_v = sum_{i != v} 1{|i-v| < Omega} * Omega / |i-v|.
double strauss_statistic(const std::vector<Point>& points, const Point& v, std::size_t skip,
                         double capital_omega);

int poisson_count(double mean, RandomState& rng);
double beta_variate(double a, double b, RandomState& rng);

}  // namespace rgg
