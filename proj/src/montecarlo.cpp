#include "rgg/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rgg/centrality.hpp"
#include "rgg/pointprocess.hpp"

namespace rgg {

namespace {

// Fill results[t] = fn(t) for t in [0, trials); worker count never affects
// the values, only the schedule.
template <typename T, typename Fn>
std::vector<T> run_trials(std::uint64_t trials, int jobs, Fn fn) {
    std::vector<T> results(trials);
    const int workers = std::max(1, jobs);
    if (workers == 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) results[t] = fn(t);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += workers) results[t] = fn(t);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

Estimate binomial_estimate(const std::vector<std::uint8_t>& hits) {
    Estimate e;
    e.trials = hits.size();
    std::uint64_t sum = 0;
    for (std::uint8_t h : hits) sum += h;
    const double n = static_cast<double>(hits.size());
    e.mean = static_cast<double>(sum) / n;
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / n);
    return e;
}

Estimate mean_estimate(const std::vector<double>& xs) {
    Estimate e;
    e.trials = xs.size();
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    e.mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.std_error = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return e;
}

// minimum admissible hop count for terminals at separation r (unit range)
int optimal_hops(double r) { return r < 1.0 ? 1 : static_cast<int>(std::floor(r)) + 1; }

struct PathCounts {
    std::uint64_t optimal = 0;   // 0 when no path of exactly optimal_hops(r) exists
    std::uint64_t shortest = 0;  // sigma whatever the hop length; 0 if disconnected
};

PathCounts count_paths(int /*d*/, double rho, double r, RandomState& rng) {
    const double pad = 1.5;
    const double side = std::max(r, 0.0) + 2.0 * pad;
    auto dom = std::make_shared<Domain>(Domain::square(side));
    PointSet ps = sample_poisson(dom, rho, rng);
    const std::uint32_t a = static_cast<std::uint32_t>(ps.size());
    ps.points.emplace_back(pad, side / 2.0);
    ps.points.emplace_back(pad + r, side / 2.0);
    const std::uint32_t b = a + 1;
    GraphInstance g = build_graph(std::move(ps), ConnectionModel::hard(1.0), false, rng);
    GeodesicCount gc = geodesic_count(g, a, b);
    PathCounts out;
    if (!gc.reachable) return out;
    out.shortest = gc.count;
    if (gc.length_hops == optimal_hops(r)) out.optimal = gc.count;
    return out;
}

}  // namespace

std::vector<Estimate> estimate_pfc(const ExperimentConfig& cfg) {
    if (!cfg.domain) throw std::invalid_argument("estimate_pfc: domain required");
    if (cfg.trials < 1) throw std::invalid_argument("estimate_pfc: trials must be >= 1");
    std::vector<Estimate> out;
    out.reserve(cfg.rho_grid.size());
    for (std::size_t gi = 0; gi < cfg.rho_grid.size(); ++gi) {
        const double rho = cfg.rho_grid[gi];
        auto hits = run_trials<std::uint8_t>(cfg.trials, cfg.jobs, [&](std::uint64_t t) {
            RandomState rng(RandomState::hash3(cfg.master_seed, gi, t));
            PointSet ps = sample_poisson(cfg.domain, rho, rng);
            GraphInstance g = build_graph(std::move(ps), cfg.model, cfg.respect_visibility, rng);
            return static_cast<std::uint8_t>(is_connected(g) ? 1 : 0);
        });
        out.push_back(binomial_estimate(hits));
    }
    return out;
}

std::vector<Estimate> betweenness_profile(const ExperimentConfig& cfg,
                                          const std::vector<double>& eps_grid) {
    if (!cfg.domain || cfg.domain->kind() != Domain::Kind::Disk)
        throw std::invalid_argument("betweenness_profile: disk domain required");
    const double R = cfg.domain->outer_radius();
    for (double e : eps_grid)
        if (!(e >= 0.0 && e <= R))
            throw std::invalid_argument("betweenness_profile: eps outside [0,R]");
    if (cfg.rho_grid.size() != 1)
        throw std::invalid_argument("betweenness_profile: exactly one rho required");
    const double rho = cfg.rho_grid[0];
    const std::size_t bins = eps_grid.size();

    // per trial: probe betweenness at every grid eps plus the center anchor
    auto rows = run_trials<std::vector<double>>(cfg.trials, cfg.jobs, [&](std::uint64_t t) {
        RandomState rng(RandomState::hash2(cfg.master_seed, t));
        PointSet ps = sample_poisson(cfg.domain, rho, rng);
        const std::uint32_t first_probe = static_cast<std::uint32_t>(ps.size());
        // distinct angles keep probes from stacking on one radius
        for (std::size_t k = 0; k < bins; ++k) {
            const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(bins + 1);
            ps.points.emplace_back(eps_grid[k] * std::cos(ang), eps_grid[k] * std::sin(ang));
        }
        ps.points.emplace_back(0.0, 0.0);  // anchor
        GraphInstance g = build_graph(std::move(ps), cfg.model, cfg.respect_visibility, rng);
        CentralityVector bc = brandes_betweenness(g, true);
        std::vector<double> row(bins + 1);
        for (std::size_t k = 0; k <= bins; ++k) row[k] = bc.values[first_probe + k];
        return row;
    });

    std::vector<double> mean(bins + 1, 0.0), ss(bins + 1, 0.0);
    for (const auto& row : rows)
        for (std::size_t k = 0; k <= bins; ++k) mean[k] += row[k];
    for (double& m : mean) m /= static_cast<double>(cfg.trials);
    for (const auto& row : rows)
        for (std::size_t k = 0; k <= bins; ++k) ss[k] += (row[k] - mean[k]) * (row[k] - mean[k]);

    const double anchor = mean[bins];
    if (!(anchor > 0.0))
        throw std::runtime_error("betweenness_profile: center anchor has zero betweenness");
    std::vector<Estimate> out(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        out[k].trials = cfg.trials;
        out[k].mean = mean[k] / anchor;
        const double n = static_cast<double>(cfg.trials);
        out[k].std_error =
            cfg.trials > 1 ? std::sqrt(ss[k] / (n - 1.0) / n) / anchor : 0.0;
    }
    return out;
}

std::vector<GeodesicEstimate> geodesic_experiment(int d, double rho,
                                                  const std::vector<double>& r_grid,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  int jobs) {
    if (d != 2) throw std::invalid_argument("geodesic_experiment: only d = 2 is supported");
    if (trials < 1) throw std::invalid_argument("geodesic_experiment: trials must be >= 1");
    std::vector<GeodesicEstimate> out;
    out.reserve(r_grid.size());
    for (std::size_t gi = 0; gi < r_grid.size(); ++gi) {
        const double r = r_grid[gi];
        if (!(r >= 0.0)) throw std::invalid_argument("geodesic_experiment: r must be >= 0");
        auto counts = run_trials<PathCounts>(trials, jobs, [&](std::uint64_t t) {
            RandomState rng(RandomState::hash3(seed, gi, t));
            return count_paths(d, rho, r, rng);
        });
        std::vector<double> opt(trials), sp(trials);
        for (std::uint64_t t = 0; t < trials; ++t) {
            opt[t] = static_cast<double>(counts[t].optimal);
            sp[t] = static_cast<double>(counts[t].shortest);
        }
        GeodesicEstimate ge;
        ge.r = r;
        ge.optimal_count = mean_estimate(opt);
        ge.geodesic_count = mean_estimate(sp);
        out.push_back(ge);
    }
    return out;
}

SigmaDistribution sigma_distribution(double rho, double r, std::uint64_t trials,
                                     std::uint64_t seed, int jobs) {
    if (!(r >= 0.0)) throw std::invalid_argument("sigma_distribution: r must be >= 0");
    if (trials < 1) throw std::invalid_argument("sigma_distribution: trials must be >= 1");
    auto counts = run_trials<std::uint64_t>(trials, jobs, [&](std::uint64_t t) {
        RandomState rng(RandomState::hash2(seed, t));
        return count_paths(2, rho, r, rng).optimal;
    });
    SigmaDistribution out;
    out.trials = trials;
    const std::uint64_t kmax = *std::max_element(counts.begin(), counts.end());
    out.pmf.assign(kmax + 1, 0.0);
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t c : counts) {
        out.pmf[c] += 1.0;
        const double x = static_cast<double>(c);
        sum += x;
        sum_sq += x * x;
    }
    for (double& p : out.pmf) p /= static_cast<double>(trials);
    const double n = static_cast<double>(trials);
    out.mean = sum / n;
    const double var = (sum_sq - n * out.mean * out.mean) / std::max(1.0, n - 1.0);
    out.dispersion = out.mean > 0.0 ? var / out.mean : 0.0;
    return out;
}

std::vector<IsolationResult> isolated_vs_disconnected(const ExperimentConfig& cfg) {
    if (!cfg.domain) throw std::invalid_argument("isolated_vs_disconnected: domain required");
    std::vector<IsolationResult> out;
    out.reserve(cfg.rho_grid.size());
    for (std::size_t gi = 0; gi < cfg.rho_grid.size(); ++gi) {
        const double rho = cfg.rho_grid[gi];
        // 0 connected, 1 disconnected w/o isolated vertex, 2 disconnected with
        auto states = run_trials<std::uint8_t>(cfg.trials, cfg.jobs, [&](std::uint64_t t) {
            RandomState rng(RandomState::hash3(cfg.master_seed, gi, t));
            PointSet ps = sample_poisson(cfg.domain, rho, rng);
            GraphInstance g = build_graph(std::move(ps), cfg.model, cfg.respect_visibility, rng);
            if (is_connected(g)) return std::uint8_t{0};
            return static_cast<std::uint8_t>(isolated_count(g) > 0 ? 2 : 1);
        });
        IsolationResult res;
        std::uint64_t disconnected = 0, with_iso = 0;
        for (std::uint8_t s : states) {
            if (s > 0) ++disconnected;
            if (s == 2) ++with_iso;
        }
        res.disconnected_trials = disconnected;
        if (disconnected > 0) {
            const double n = static_cast<double>(disconnected);
            res.fraction_with_isolated.trials = disconnected;
            res.fraction_with_isolated.mean = static_cast<double>(with_iso) / n;
            res.fraction_with_isolated.std_error =
                std::sqrt(res.fraction_with_isolated.mean *
                          (1.0 - res.fraction_with_isolated.mean) / n);
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace rgg
