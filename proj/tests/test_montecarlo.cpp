#include <doctest.h>

#include <cmath>
#include <memory>

#include "rgg/analytic.hpp"
#include "rgg/montecarlo.hpp"

using namespace rgg;

TEST_CASE("pfc estimation conventions") {
    ExperimentConfig cfg;
    cfg.domain = std::make_shared<Domain>(Domain::disk(2.0));
    cfg.trials = 50;
    cfg.master_seed = 1;

    // connection range triple the domain diameter: always fully connected
    cfg.model = ConnectionModel::hard(3.0 * cfg.domain->diameter());
    cfg.rho_grid = {3.0};
    CHECK(estimate_pfc(cfg)[0].mean == 1.0);

    // vanishing density: graphs of <= 1 vertex count as connected
    cfg.model = ConnectionModel::rayleigh(1.0);
    cfg.rho_grid = {1e-6};
    CHECK(estimate_pfc(cfg)[0].mean == 1.0);
}

TEST_CASE("pfc estimate brackets the disk closed form") {
    ExperimentConfig cfg;
    cfg.domain = std::make_shared<Domain>(Domain::disk(5.0));
    cfg.model = ConnectionModel::rayleigh(1.0);
    cfg.rho_grid = {5.0};
    cfg.trials = 1000;
    cfg.master_seed = 99;
    const Estimate e = estimate_pfc(cfg)[0];
    PfcDomainSpec spec;
    spec.variant = PfcDomainSpec::Variant::Disk;
    spec.outer = 5.0;
    spec.beta = 1.0;
    spec.rho = 5.0;
    CHECK(std::fabs(e.mean - pfc_closed_form(spec).value) < 0.02);
}

TEST_CASE("results do not depend on the worker count") {
    ExperimentConfig cfg;
    cfg.domain = std::make_shared<Domain>(Domain::disk(3.0));
    cfg.model = ConnectionModel::rayleigh(1.0);
    cfg.rho_grid = {3.0, 5.0};
    cfg.trials = 200;
    cfg.master_seed = 7;
    cfg.jobs = 1;
    const auto serial = estimate_pfc(cfg);
    cfg.jobs = 4;
    const auto parallel = estimate_pfc(cfg);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].mean == parallel[i].mean);
        CHECK(serial[i].std_error == parallel[i].std_error);
    }

    const auto g1 = geodesic_experiment(2, 8.0, {1.4}, 100, 5, 1);
    const auto g4 = geodesic_experiment(2, 8.0, {1.4}, 100, 5, 4);
    CHECK(g1[0].optimal_count.mean == g4[0].optimal_count.mean);
    CHECK(g1[0].geodesic_count.mean == g4[0].geodesic_count.mean);
}

TEST_CASE("betweenness profile anchors at the center and falls to the rim") {
    ExperimentConfig cfg;
    cfg.domain = std::make_shared<Domain>(Domain::disk(1.0));
    cfg.model = ConnectionModel::rayleigh(40.0);
    cfg.rho_grid = {300.0};
    cfg.trials = 20;
    cfg.master_seed = 12;
    const auto prof = betweenness_profile(cfg, {0.0, 0.5, 0.97});
    CHECK(std::fabs(prof[0].mean - 1.0) < 0.1);
    CHECK(prof[1].mean < prof[0].mean);
    CHECK(prof[2].mean < 0.25);

    ExperimentConfig bad = cfg;
    bad.domain = std::make_shared<Domain>(Domain::square(1.0));
    CHECK_THROWS_AS(betweenness_profile(bad, {0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(betweenness_profile(cfg, {-0.1}), std::invalid_argument);
}

TEST_CASE("geodesic experiment base cases") {
    const auto direct = geodesic_experiment(2, 10.0, {0.5}, 50, 3);
    CHECK(direct[0].optimal_count.mean == 1.0);
    CHECK(direct[0].optimal_count.std_error == 0.0);

    const auto two_hop = geodesic_experiment(2, 10.0, {1.5}, 2000, 21);
    const double exact = expected_two_hop_exact({2, 10.0, 1.5});
    CHECK(std::fabs(two_hop[0].optimal_count.mean - exact) <
          3.0 * two_hop[0].optimal_count.std_error);
    CHECK_THROWS_AS(geodesic_experiment(3, 10.0, {1.5}, 10, 1), std::invalid_argument);
}

TEST_CASE("geodesic counts rise and fall across hop intervals") {
    const auto curve = geodesic_experiment(2, 20.0, {0.5, 2.5, 2.98}, 400, 77);
    CHECK(curve[1].optimal_count.mean > curve[0].optimal_count.mean);
    CHECK(curve[2].optimal_count.mean < curve[1].optimal_count.mean);
}

TEST_CASE("sigma distribution") {
    // below one hop the terminals are adjacent: exactly one optimal path
    const SigmaDistribution direct = sigma_distribution(10.0, 0.5, 50, 4);
    REQUIRE(direct.pmf.size() == 2);
    CHECK(direct.pmf[1] == doctest::Approx(1.0));
    CHECK(direct.dispersion == doctest::Approx(0.0));

    const SigmaDistribution poissonish = sigma_distribution(15.0, 1.6, 2000, 6);
    CHECK(poissonish.dispersion > 0.8);
    CHECK(poissonish.dispersion < 1.2);
}

TEST_CASE("isolated vertices dominate disconnection") {
    ExperimentConfig cfg;
    cfg.domain = std::make_shared<Domain>(Domain::disk(5.0));
    cfg.trials = 200;
    cfg.master_seed = 15;

    cfg.model = ConnectionModel::hard(100.0);
    cfg.rho_grid = {2.0};
    CHECK(isolated_vs_disconnected(cfg)[0].disconnected_trials == 0);

    // edgeless regime: every disconnection comes with isolated vertices
    cfg.model = ConnectionModel::rayleigh(1e9);
    const auto res = isolated_vs_disconnected(cfg)[0];
    CHECK(res.disconnected_trials > 0);
    CHECK(res.fraction_with_isolated.mean == 1.0);
}

TEST_CASE("standard errors shrink like one over root trials") {
    const auto small = geodesic_experiment(2, 10.0, {1.5}, 400, 33);
    const auto large = geodesic_experiment(2, 10.0, {1.5}, 1600, 33);
    const double ratio = large[0].optimal_count.std_error / small[0].optimal_count.std_error;
    CHECK(ratio > 0.4);
    CHECK(ratio < 0.6);
}
