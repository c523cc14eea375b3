#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rgg/analytic.hpp"
#include "rgg/centrality.hpp"
#include "rgg/montecarlo.hpp"
#include "rgg/percolation.hpp"
#include "rgg/pointprocess.hpp"

using nlohmann::json;

namespace {

// flag/syntax problems exit 2; parameter-regime violations (library
// invalid_argument) exit 3; convergence failures exit 4
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// grid syntax start:stop:count, endpoints inclusive
std::vector<double> parse_grid(const std::string& s) {
    double start, stop;
    long count;
    char c1, c2, tail;
    std::istringstream in(s);
    if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || (in >> tail))
        throw UsageError("bad grid '" + s + "': expected start:stop:count");
    if (count < 1) throw UsageError("bad grid '" + s + "': count must be >= 1");
    std::vector<double> g(count);
    for (long i = 0; i < count; ++i)
        g[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1);
    return g;
}

double parse_kv(const std::string& body, const std::string& key) {
    // body looks like "r=2,R=20"; find key= and read the number after it
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find(',', pos);
        if (end == std::string::npos) end = body.size();
        const std::string tok = body.substr(pos, end - pos);
        const std::size_t eq = tok.find('=');
        if (eq != std::string::npos && tok.substr(0, eq) == key)
            return std::stod(tok.substr(eq + 1));
        pos = end + 1;
    }
    throw UsageError("domain string missing '" + key + "=' in '" + body + "'");
}

struct DomainSpec {
    std::shared_ptr<const rgg::Domain> domain;
    std::string kind;
    double inner = 0.0, outer = 0.0;
    std::vector<double> obstacle_radii;
};

DomainSpec parse_domain(const std::string& s) {
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("bad domain '" + s + "': expected kind:params");
    DomainSpec d;
    d.kind = s.substr(0, colon);
    const std::string body = s.substr(colon + 1);
    try {
        if (d.kind == "disk") {
            d.outer = parse_kv(body, "R");
            d.domain = std::make_shared<rgg::Domain>(rgg::Domain::disk(d.outer));
        } else if (d.kind == "annulus") {
            d.inner = parse_kv(body, "r");
            d.outer = parse_kv(body, "R");
            d.domain = std::make_shared<rgg::Domain>(rgg::Domain::annulus(d.inner, d.outer));
        } else if (d.kind == "shell") {
            d.inner = parse_kv(body, "r");
            d.outer = parse_kv(body, "R");
            d.domain = std::make_shared<rgg::Domain>(rgg::Domain::spherical_shell(d.inner, d.outer));
        } else if (d.kind == "sphere") {
            d.outer = parse_kv(body, "R");
            d.domain = std::make_shared<rgg::Domain>(rgg::Domain::sphere(d.outer));
        } else if (d.kind == "square") {
            d.outer = parse_kv(body, "L");
            std::vector<rgg::ObstacleSpec> obs;
            const std::size_t opos = body.find("obstacles=");
            if (opos != std::string::npos) {
                // obstacles=x;y;r|x;y;r
                std::istringstream in(body.substr(opos + 10));
                std::string triple;
                while (std::getline(in, triple, '|')) {
                    double x, y, r;
                    char s1, s2;
                    std::istringstream tin(triple);
                    if (!(tin >> x >> s1 >> y >> s2 >> r) || s1 != ';' || s2 != ';')
                        throw UsageError("bad obstacle triple '" + triple + "': expected x;y;r");
                    obs.push_back({rgg::Point(x, y), r});
                    d.obstacle_radii.push_back(r);
                }
            }
            d.domain = std::make_shared<rgg::Domain>(rgg::Domain::square(d.outer, std::move(obs)));
        } else {
            throw UsageError("unknown domain kind '" + d.kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad domain '") + s + "': " + e.what());
    }
    return d;
}

std::uint64_t resolve_seed(const CLI::App* sub, std::uint64_t flag_value) {
    if (sub->count("--seed") > 0) return flag_value;
    if (const char* env = std::getenv("RGGLAB_SEED")) return std::strtoull(env, nullptr, 10);
    return flag_value;
}

void write_manifest(const std::string& out_path, const std::string& subcommand,
                    const std::vector<std::string>& argv, std::uint64_t seed,
                    const std::string& started, const json& config) {
    json m;
    m["subcommand"] = subcommand;
    m["argv"] = argv;
    m["seed"] = seed;
    m["started"] = started;
    m["finished"] = iso_now();
    m["outputs"] = json::array({out_path});
    m["config"] = config;
    std::ofstream os(out_path + ".manifest.json");
    os << m.dump(2) << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // LF endings regardless of platform
    if (!os) throw UsageError("cannot open output file '" + path + "'");
    return os;
}

// analytic P_fc prediction matching the Monte Carlo domain; picks the obstacle
// regime from the inner radius relative to r0 = 1/sqrt(beta)
rgg::PfcValue analytic_pfc(const DomainSpec& d, double rho, double beta) {
    rgg::PfcDomainSpec spec;
    spec.inner = d.inner;
    spec.outer = d.outer;
    spec.rho = rho;
    spec.beta = beta;
    const double r0 = 1.0 / std::sqrt(beta);
    using V = rgg::PfcDomainSpec::Variant;
    if (d.kind == "disk") {
        spec.variant = V::Disk;
    } else if (d.kind == "annulus") {
        spec.variant = d.inner < r0 / 3.0 ? V::AnnulusSmall : V::AnnulusLarge;
    } else if (d.kind == "shell") {
        spec.variant = d.inner < r0 / 3.0 ? V::ShellSmall : V::ShellLarge;
    } else if (d.kind == "square") {
        spec.variant = V::SquareObstacles;
        spec.obstacle_radii = d.obstacle_radii;
    } else {
        throw UsageError("no closed-form prediction for domain kind '" + d.kind + "'");
    }
    return rgg::pfc_closed_form(spec);
}

int run_cli(const std::vector<std::string>& args);

void add_rerun(CLI::App& app) {
    auto* sub = app.add_subcommand("rerun", "replay an experiment from its run manifest");
    auto manifest = std::make_shared<std::string>();
    sub->add_option("--manifest", *manifest, "manifest JSON written by a previous run")->required();
    sub->callback([manifest] {
        std::ifstream in(*manifest);
        if (!in) throw UsageError("cannot read manifest '" + *manifest + "'");
        json m = json::parse(in, nullptr, false);
        if (m.is_discarded() || !m.contains("argv"))
            throw UsageError("manifest '" + *manifest + "' is not a valid run manifest");
        const int rc = run_cli(m["argv"].get<std::vector<std::string>>());
        if (rc != 0) throw UsageError("replayed command failed");
    });
}

struct CommonFlags {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    int jobs = 1;
    std::string out;
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_trials = true) {
    sub->add_option("--seed", f.seed, "master seed (env RGGLAB_SEED used when omitted)");
    if (with_trials) sub->add_option("--trials", f.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", f.jobs, "worker threads (never changes output bytes)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", f.out, "output CSV path (stdout when omitted)");
    sub->set_config("--config", "", "key = value config file; flags override");
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"random geometric graph experiments"};
    app.require_subcommand(1);

    // connectivity -------------------------------------------------------
    auto c_flags = std::make_shared<CommonFlags>();
    auto c_domain = std::make_shared<std::string>();
    auto c_beta = std::make_shared<double>();
    auto c_rho_grid = std::make_shared<std::string>();
    auto* conn = app.add_subcommand("connectivity", "full-connection probability sweep over rho");
    conn->add_option("--domain", *c_domain, "disk:R=5 | annulus:r=2,R=20 | shell:r=2,R=5 | square:L=10[,obstacles=x;y;r|...]")
        ->required();
    conn->add_option("--beta", *c_beta, "Rayleigh stretch (eta = 2)")->required();
    conn->add_option("--rho-grid", *c_rho_grid, "start:stop:count, inclusive")->required();
    add_common(conn, *c_flags);
    conn->callback([=, &app] {
        const DomainSpec dom = parse_domain(*c_domain);
        rgg::ExperimentConfig cfg;
        cfg.domain = dom.domain;
        cfg.model = rgg::ConnectionModel::rayleigh(*c_beta);
        cfg.rho_grid = parse_grid(*c_rho_grid);
        cfg.trials = c_flags->trials;
        cfg.master_seed = resolve_seed(app.get_subcommand("connectivity"), c_flags->seed);
        cfg.jobs = c_flags->jobs;
        const std::string started = iso_now();
        auto est = rgg::estimate_pfc(cfg);
        std::ostringstream csv;
        csv << "rho,pfc_mc,se,pfc_analytic\n";
        for (std::size_t i = 0; i < cfg.rho_grid.size(); ++i) {
            const rgg::PfcValue a = analytic_pfc(dom, cfg.rho_grid[i], *c_beta);
            csv << fmt(cfg.rho_grid[i]) << ',' << fmt(est[i].mean) << ',' << fmt(est[i].std_error)
                << ',' << fmt(a.value) << '\n';
        }
        if (c_flags->out.empty()) {
            std::cout << csv.str();
        } else {
            open_out(c_flags->out) << csv.str();
            write_manifest(c_flags->out, "connectivity", args, cfg.master_seed, started,
                           {{"domain", *c_domain}, {"beta", *c_beta}, {"rho_grid", *c_rho_grid},
                            {"trials", cfg.trials}, {"jobs", cfg.jobs}});
        }
    });

    // betweenness ---------------------------------------------------------
    auto b_flags = std::make_shared<CommonFlags>();
    auto b_rho = std::make_shared<double>(500.0);
    auto b_beta = std::make_shared<double>(1.0);
    auto b_eps_grid = std::make_shared<std::string>();
    auto b_analytic_only = std::make_shared<bool>(false);
    auto* betw = app.add_subcommand("betweenness", "betweenness profile across the unit disk");
    betw->add_option("--rho", *b_rho, "point density");
    betw->add_option("--beta", *b_beta, "Rayleigh stretch");
    betw->add_option("--eps-grid", *b_eps_grid, "probe displacements, start:stop:count in [0,1]")
        ->required();
    betw->add_flag("--analytic-only", *b_analytic_only, "emit the continuum curve without simulation");
    add_common(betw, *b_flags);
    betw->callback([=, &app] {
        const std::vector<double> eps = parse_grid(*b_eps_grid);
        for (double e : eps)
            if (!(e >= 0.0 && e <= 1.0)) throw UsageError("eps grid must lie in [0,1]");
        const std::string started = iso_now();
        std::ostringstream csv;
        std::uint64_t seed = 0;
        if (*b_analytic_only) {
            csv << "eps,g_analytic\n";
            for (double e : eps) csv << fmt(e) << ',' << fmt(rgg::continuum_betweenness(e)) << '\n';
        } else {
            rgg::ExperimentConfig cfg;
            cfg.domain = std::make_shared<rgg::Domain>(rgg::Domain::disk(1.0));
            cfg.model = rgg::ConnectionModel::rayleigh(*b_beta);
            cfg.rho_grid = {*b_rho};
            cfg.trials = b_flags->trials;
            cfg.master_seed = resolve_seed(app.get_subcommand("betweenness"), b_flags->seed);
            cfg.jobs = b_flags->jobs;
            seed = cfg.master_seed;
            auto prof = rgg::betweenness_profile(cfg, eps);
            csv << "eps,g_mc,se,g_analytic\n";
            for (std::size_t i = 0; i < eps.size(); ++i)
                csv << fmt(eps[i]) << ',' << fmt(prof[i].mean) << ',' << fmt(prof[i].std_error)
                    << ',' << fmt(rgg::continuum_betweenness(eps[i])) << '\n';
        }
        if (b_flags->out.empty()) {
            std::cout << csv.str();
        } else {
            open_out(b_flags->out) << csv.str();
            write_manifest(b_flags->out, "betweenness", args, seed, started,
                           {{"rho", *b_rho}, {"beta", *b_beta}, {"eps_grid", *b_eps_grid},
                            {"trials", b_flags->trials}, {"analytic_only", *b_analytic_only}});
        }
    });

    // geodesics -----------------------------------------------------------
    auto g_flags = std::make_shared<CommonFlags>();
    auto g_d = std::make_shared<int>(2);
    auto g_rho = std::make_shared<double>();
    auto g_r_grid = std::make_shared<std::string>();
    auto g_pmf_out = std::make_shared<std::string>();
    auto* geo = app.add_subcommand("geodesics", "optimal-hop path counts vs terminal separation");
    geo->add_option("--d", *g_d, "dimension (2)");
    geo->add_option("--rho", *g_rho, "point density")->required();
    geo->add_option("--r-grid", *g_r_grid, "terminal separations, start:stop:count")->required();
    geo->add_option("--pmf-out", *g_pmf_out,
                    "also write the count distribution (k,prob) for a single-point r grid");
    add_common(geo, *g_flags);
    geo->callback([=, &app] {
        const std::vector<double> rs = parse_grid(*g_r_grid);
        const std::uint64_t seed = resolve_seed(app.get_subcommand("geodesics"), g_flags->seed);
        const std::string started = iso_now();
        auto est = rgg::geodesic_experiment(*g_d, *g_rho, rs, g_flags->trials, seed, g_flags->jobs);
        std::ostringstream csv;
        csv << "r,count_mc,se,count_analytic\n";
        for (const auto& e : est) {
            rgg::GeodesicQuery q{*g_d, *g_rho, e.r};
            const double analytic = e.r < 6.0 ? rgg::geodesic_recursion_numeric(q, 1e-8)
                                              : rgg::expected_geodesic_cardinality(q);
            csv << fmt(e.r) << ',' << fmt(e.optimal_count.mean) << ','
                << fmt(e.optimal_count.std_error) << ',' << fmt(analytic) << '\n';
        }
        if (!g_pmf_out->empty()) {
            if (rs.size() != 1) throw UsageError("--pmf-out needs an r grid with exactly one point");
            auto dist = rgg::sigma_distribution(*g_rho, rs[0], g_flags->trials, seed, g_flags->jobs);
            auto os = open_out(*g_pmf_out);
            os << "k,prob\n";
            for (std::size_t k = 0; k < dist.pmf.size(); ++k)
                os << k << ',' << fmt(dist.pmf[k]) << '\n';
        }
        if (g_flags->out.empty()) {
            std::cout << csv.str();
        } else {
            open_out(g_flags->out) << csv.str();
            write_manifest(g_flags->out, "geodesics", args, seed, started,
                           {{"d", *g_d}, {"rho", *g_rho}, {"r_grid", *g_r_grid},
                            {"trials", g_flags->trials}});
        }
    });

    // percolation ---------------------------------------------------------
    auto p_flags = std::make_shared<CommonFlags>();
    auto p_L = std::make_shared<int>(50);
    auto p_grid = std::make_shared<std::string>();
    auto* perc = app.add_subcommand("percolation", "coupled bond-percolation sweep on the square lattice");
    perc->add_option("--L", *p_L, "lattice side")->check(CLI::Range(2, 100000));
    perc->add_option("--p-grid", *p_grid, "bond probabilities, start:stop:count")->required();
    add_common(perc, *p_flags);
    perc->callback([=, &app] {
        const std::vector<double> ps = parse_grid(*p_grid);
        for (double p : ps)
            if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p grid must lie in [0,1]");
        const std::uint64_t seed = resolve_seed(app.get_subcommand("percolation"), p_flags->seed);
        const std::string started = iso_now();
        const std::size_t np = ps.size();
        std::vector<double> theta(np, 0.0), mean_cl(np, 0.0), largest(np, 0.0), span(np, 0.0);
        // one uniform field per trial, re-thresholded across the whole sweep
        for (std::uint64_t t = 0; t < p_flags->trials; ++t) {
            rgg::RandomState sub(rgg::RandomState::hash2(seed, t));
            rgg::LatticeConfig cfg = rgg::sample_bonds(*p_L, 0.0, sub);
            for (std::size_t i = 0; i < np; ++i) {
                cfg.rethreshold(ps[i]);
                const rgg::ClusterStats s = rgg::cluster_stats(cfg);
                theta[i] += s.center_touches_boundary ? 1.0 : 0.0;
                mean_cl[i] += static_cast<double>(s.cluster_of_center);
                largest[i] += static_cast<double>(s.largest) /
                              (static_cast<double>(*p_L) * static_cast<double>(*p_L));
                span[i] += s.spanning ? 1.0 : 0.0;
            }
        }
        const double n = static_cast<double>(p_flags->trials);
        std::ostringstream csv;
        csv << "p,theta_hat,se,mean_cluster,largest_fraction,spanning_prob\n";
        for (std::size_t i = 0; i < np; ++i) {
            const double th = theta[i] / n;
            csv << fmt(ps[i]) << ',' << fmt(th) << ',' << fmt(std::sqrt(th * (1.0 - th) / n)) << ','
                << fmt(mean_cl[i] / n) << ',' << fmt(largest[i] / n) << ',' << fmt(span[i] / n)
                << '\n';
        }
        if (p_flags->out.empty()) {
            std::cout << csv.str();
        } else {
            open_out(p_flags->out) << csv.str();
            write_manifest(p_flags->out, "percolation", args, seed, started,
                           {{"L", *p_L}, {"p_grid", *p_grid}, {"trials", p_flags->trials}});
        }
    });

    // strauss ---------------------------------------------------------------
    auto s_flags = std::make_shared<CommonFlags>();
    auto s_n = std::make_shared<std::uint64_t>(250);
    auto s_omega = std::make_shared<double>();
    auto s_range = std::make_shared<double>();
    auto s_steps = std::make_shared<std::uint64_t>(100000);
    auto s_domain = std::make_shared<std::string>("square:L=1");
    auto* str = app.add_subcommand("strauss", "repulsive point set via Metropolis-Hastings");
    str->add_option("--n", *s_n, "number of points")->check(CLI::PositiveNumber);
    str->add_option("--omega", *s_omega, "repulsion strength in [0,1]")->required();
    str->add_option("--interaction-range", *s_range, "interaction radius")->required();
    str->add_option("--steps", *s_steps, "MCMC steps");
    str->add_option("--domain", *s_domain, "sampling domain");
    add_common(str, *s_flags, false);
    str->callback([=, &app] {
        if (!(*s_omega >= 0.0 && *s_omega <= 1.0)) throw UsageError("--omega must be in [0,1]");
        if (!(*s_range > 0.0)) throw UsageError("--interaction-range must be > 0");
        const DomainSpec dom = parse_domain(*s_domain);
        const std::uint64_t seed = resolve_seed(app.get_subcommand("strauss"), s_flags->seed);
        const std::string started = iso_now();
        rgg::RandomState rng(seed);
        rgg::StraussParams params;
        params.omega = *s_omega;
        params.capital_omega = *s_range;
        params.steps = *s_steps;
        rgg::PointSet ps = rgg::strauss_mcmc(dom.domain, *s_n, params, rng);
        // nearest-neighbor summary
        double nn_sum = 0.0, nn_min = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (j != i) best = std::min(best, rgg::euclidean_distance(ps.points[i], ps.points[j]));
            nn_sum += best;
            nn_min = std::min(nn_min, best);
        }
        std::cerr << "nn_mean=" << fmt(nn_sum / static_cast<double>(ps.size()))
                  << " nn_min=" << fmt(nn_min) << "\n";
        if (s_flags->out.empty()) {
            rgg::write_points_csv(std::cout, ps);
        } else {
            auto os = open_out(s_flags->out);
            rgg::write_points_csv(os, ps);
            write_manifest(s_flags->out, "strauss", args, seed, started,
                           {{"n", *s_n}, {"omega", *s_omega}, {"interaction_range", *s_range},
                            {"steps", *s_steps}, {"domain", *s_domain}});
        }
    });

    add_rerun(app);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "regime violation: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args);
}
