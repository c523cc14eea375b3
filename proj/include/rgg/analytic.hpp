#pragma once

#include <vector>

#include "rgg/geometry.hpp"
#include "rgg/graph.hpp"
#include "rgg/special.hpp"

namespace rgg {

// g*(eps) = (2/pi)(1 - eps^2) E(eps), eps in units of the disk radius.
double continuum_betweenness(double eps);

// Integral of the connection function over the region visible to x.
// Rayleigh models integrate exp(-beta r^eta); hard models integrate the
// indicator of the visible ball of radius r0.
double connectivity_mass(const Domain& domain, const ConnectionModel& model, const Point& x);

// rho * Integral exp(-rho * mass(x)) dx over the domain; expected number of
// isolated vertices. Radially symmetric domains use a 1-D outer quadrature.
double expected_isolated(const Domain& domain, const ConnectionModel& model, double rho);

// Closed-form full-connection probability of each derived regime.
struct PfcDomainSpec {
    enum class Variant { Disk, AnnulusSmall, AnnulusLarge, AnnulusLargeLimit, ShellSmall, ShellLarge, SquareObstacles };
    Variant variant = Variant::Disk;
    double inner = 0.0;  // obstacle radius r
    double outer = 1.0;  // enclosing radius R, or square side L
    std::vector<double> obstacle_radii;  // SquareObstacles only
    double rho = 1.0;
    double beta = 1.0;  // Rayleigh exponent is fixed at eta = 2 here
};

struct PfcValue {
    double value = 0.0;  // clamped to [0,1]
    double raw = 0.0;    // formula value before clamping
    bool clamped = false;
};

PfcValue pfc_closed_form(const PfcDomainSpec& spec);

struct GeodesicQuery {
    int d = 2;
    double rho = 1.0;
    double r_xy = 0.0;
};

// rho * intersection_volume(d, r_xy) for r_xy in [1,2): expected 2-hop count.
double expected_two_hop_exact(const GeodesicQuery& q);

// Leading-order closed form for the expected number of ceil(r)-hop paths.
double expected_geodesic_cardinality(const GeodesicQuery& q);

// Nested quadrature of E(sigma_r) = rho * Int_{r-1}^{floor(r)} l_lambda E(sigma_lambda) dlambda,
// base case rho * V(d, r) on [1,2). d in {2,3}, r < 6.
double geodesic_recursion_numeric(const GeodesicQuery& q, double tol = 1e-10);

// Expected geodesic count on [1,2) including the beta-optimal (3-hop) correction.
double beta_optimal_correction(double rho, double r_xy);

struct NegBinParams {
    double p = 0.0;
    double r = 0.0;
};

// Moment fit of the negative binomial: p = mean/var, r = mean p/(1-p).
// Throws if the sample is not over-dispersed (variance <= mean).
NegBinParams negbin_fit(double mean, double second_moment);

}  // namespace rgg
