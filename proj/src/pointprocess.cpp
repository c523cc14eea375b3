#include "rgg/pointprocess.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rgg {

void write_points_csv(std::ostream& os, const PointSet& ps) {
    const std::size_t d = ps.domain ? ps.domain->dim() : (ps.points.empty() ? 2 : ps.points[0].dim());
    for (std::size_t i = 0; i < d; ++i) os << (i ? ",x" : "x") << i;
    os << "\n";
    char buf[32];
    for (const auto& p : ps.points) {
        for (std::size_t i = 0; i < d; ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", p[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
}

int poisson_count(double mean, RandomState& rng) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson_count: mean must be >= 0");
    // exponential inter-arrival sum; exact for any mean
    double acc = 0.0;
    int n = -1;
    do {
        acc += -std::log1p(-rng.next_double());
        ++n;
    } while (acc <= mean);
    return n;
}

namespace {

double normal_variate(RandomState& rng) {
    // Box-Muller, one value per call
    const double u1 = 1.0 - rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang
double gamma_variate(double a, RandomState& rng) {
    if (a < 1.0) {
        const double u = rng.next_double();
        return gamma_variate(a + 1.0, rng) * std::pow(u, 1.0 / a);
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal_variate(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_double();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double beta_variate(double a, double b, RandomState& rng) {
    const double x = gamma_variate(a, rng);
    const double y = gamma_variate(b, rng);
    return x / (x + y);
}

PointSet sample_poisson(std::shared_ptr<const Domain> domain, double rho, RandomState& rng) {
    if (!(rho >= 0.0)) throw std::invalid_argument("sample_poisson: rho must be >= 0");
    if (!std::isfinite(rho)) throw std::invalid_argument("sample_poisson: rho must be finite");
    const int n = poisson_count(rho * domain->measure(), rng);
    PointSet ps;
    ps.domain = domain;
    ps.seed = rng.key;
    ps.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ps.points.push_back(domain->sample_uniform(rng));
    return ps;
}

PointSet sample_binomial(std::shared_ptr<const Domain> domain, std::size_t n, RandomState& rng) {
    PointSet ps;
    ps.domain = domain;
    ps.seed = rng.key;
    ps.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ps.points.push_back(domain->sample_uniform(rng));
    return ps;
}

double strauss_acceptance(double omega, double n_new, double n_old) {
    if (!(omega >= 0.0 && omega <= 1.0))
        throw std::invalid_argument("strauss_acceptance: omega must be in [0,1]");
    const double delta = n_new - n_old;
    if (omega == 0.0) return delta > 0.0 ? 0.0 : 1.0;
    return std::min(1.0, std::pow(omega, delta));
}

double strauss_statistic(const std::vector<Point>& points, const Point& v, std::size_t skip,
                         double capital_omega) {
    double s = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i == skip) continue;
        const double d = euclidean_distance(points[i], v);
        if (d < capital_omega && d > 0.0) s += capital_omega / d;
    }
    return s;
}

PointSet strauss_mcmc(std::shared_ptr<const Domain> domain, std::size_t n,
                      const StraussParams& params, RandomState& rng) {
    if (!(params.omega >= 0.0 && params.omega <= 1.0))
        throw std::invalid_argument("strauss_mcmc: omega must be in [0,1]");
    if (!(params.capital_omega > 0.0))
        throw std::invalid_argument("strauss_mcmc: capital_omega must be > 0");
    PointSet ps = sample_binomial(domain, n, rng);
    if (n == 0) return ps;
    const double scale = domain->diameter();
    const std::size_t d = domain->dim();
    for (std::uint64_t step = 0; step < params.steps; ++step) {
        const std::size_t v = static_cast<std::size_t>(rng.next_below(n));
        const double len = scale * beta_variate(params.beta_a, params.beta_b, rng);
        Point mu = ps.points[v];
        if (d == 1) {
            mu[0] += (rng.next_double() < 0.5 ? -len : len);
        } else if (d == 2) {
            const double theta = 2.0 * M_PI * rng.next_double();
            mu[0] += len * std::cos(theta);
            mu[1] += len * std::sin(theta);
        } else {
            const double z = 2.0 * rng.next_double() - 1.0;
            const double phi = 2.0 * M_PI * rng.next_double();
            const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
            mu[0] += len * s * std::cos(phi);
            mu[1] += len * s * std::sin(phi);
            mu[2] += len * z;
        }
        if (!domain->contains(mu)) continue;
        const double n_v = strauss_statistic(ps.points, ps.points[v], v, params.capital_omega);
        const double n_mu = strauss_statistic(ps.points, mu, v, params.capital_omega);
        const double accept = strauss_acceptance(params.omega, n_mu, n_v);
        if (accept >= 1.0 || rng.next_double() < accept) ps.points[v] = mu;
    }
    return ps;
}

}  // namespace rgg
