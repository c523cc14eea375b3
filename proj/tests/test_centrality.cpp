#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "rgg/centrality.hpp"
#include "rgg/rng.hpp"

using namespace rgg;

namespace {

GraphInstance random_graph(std::size_t n, double p, RandomState& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.push_back({i, j});
    return graph_from_edges(n, edges);
}

GraphInstance random_tree(std::size_t n, RandomState& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 1; v < n; ++v)
        edges.push_back({static_cast<std::uint32_t>(rng.next_below(v)), v});
    return graph_from_edges(n, edges);
}

std::vector<int> bfs_dist(const GraphInstance& g, std::uint32_t s) {
    std::vector<int> dist(g.size(), -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t w : g.adjacency[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// exhaustive shortest-path enumeration: every path of minimum length between
// s and t, recorded as vertex sequences
void dfs_paths(const GraphInstance& g, std::uint32_t t, int budget,
               std::vector<std::uint32_t>& path, std::vector<std::vector<std::uint32_t>>& out) {
    const std::uint32_t v = path.back();
    if (v == t) {
        out.push_back(path);
        return;
    }
    if (budget == 0) return;
    for (std::uint32_t w : g.adjacency[v]) {
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        dfs_paths(g, t, budget - 1, path, out);
        path.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> all_shortest_paths(const GraphInstance& g,
                                                           std::uint32_t s, std::uint32_t t) {
    const auto dist = bfs_dist(g, s);
    if (dist[t] < 0) return {};
    std::vector<std::uint32_t> path{s};
    std::vector<std::vector<std::uint32_t>> out;
    dfs_paths(g, t, dist[t], path, out);
    return out;
}

std::vector<double> brute_betweenness(const GraphInstance& g) {
    std::vector<double> bc(g.size(), 0.0);
    for (std::uint32_t i = 0; i < g.size(); ++i)
        for (std::uint32_t j = i + 1; j < g.size(); ++j) {
            const auto paths = all_shortest_paths(g, i, j);
            if (paths.empty()) continue;
            for (const auto& p : paths)
                for (std::size_t k = 1; k + 1 < p.size(); ++k)
                    bc[p[k]] += 1.0 / static_cast<double>(paths.size());
        }
    return bc;
}

// pseudo-inverse current-flow oracle, same pair-averaged convention
std::vector<double> pinv_current_flow(const GraphInstance& g) {
    auto comps = connected_components(g);
    std::vector<std::uint32_t> comp;
    for (const auto& c : comps)
        if (c.size() > comp.size()) comp = c;
    const std::size_t m = comp.size();
    std::vector<double> out(g.size(), 0.0);
    if (m < 3) return out;
    std::vector<std::int64_t> local(g.size(), -1);
    for (std::size_t a = 0; a < m; ++a) local[comp[a]] = static_cast<std::int64_t>(a);
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        lap(a, a) = static_cast<double>(g.degree(comp[a]));
        for (std::uint32_t w : g.adjacency[comp[a]]) lap(a, local[w]) -= 1.0;
    }
    Eigen::MatrixXd pinv = lap.completeOrthogonalDecomposition().pseudoInverse();
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t) {
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
            rhs(s) = 1.0;
            rhs(t) = -1.0;
            Eigen::VectorXd v = pinv * rhs;
            for (std::size_t a = 0; a < m; ++a) {
                if (a == s || a == t) continue;
                double through = 0.0;
                for (std::uint32_t w : g.adjacency[comp[a]]) through += std::fabs(v(a) - v(local[w]));
                out[comp[a]] += 0.5 * through;
            }
        }
    const double pairs = 0.5 * m * (m - 1.0);
    for (double& x : out) x /= pairs;
    return out;
}

}  // namespace

TEST_CASE("brandes on small fixtures") {
    GraphInstance path = graph_from_edges(3, {{0, 1}, {1, 2}});
    CentralityVector bc = brandes_betweenness(path, false);
    CHECK(bc.values[0] == doctest::Approx(0.0));
    CHECK(bc.values[1] == doctest::Approx(1.0));
    CHECK(bc.values[2] == doctest::Approx(0.0));

    GraphInstance star = graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CentralityVector sn = brandes_betweenness(star, true);
    CHECK(sn.values[0] == doctest::Approx(1.0));
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(sn.values[leaf] == doctest::Approx(0.0));
}

TEST_CASE("brandes equals brute-force enumeration on random graphs") {
    RandomState rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 4 + rng.next_below(9);  // up to 12
        GraphInstance g = random_graph(n, 0.35, rng);
        const auto expect = brute_betweenness(g);
        const CentralityVector got = brandes_betweenness(g, false);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(got.values[v] == doctest::Approx(expect[v]).epsilon(1e-10));
    }
}

TEST_CASE("brandes is invariant under vertex relabeling") {
    RandomState rng(31337);
    GraphInstance g = random_graph(10, 0.4, rng);
    std::vector<std::uint32_t> perm(10);
    for (std::uint32_t i = 0; i < 10; ++i) perm[i] = i;
    for (std::uint32_t i = 9; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> relabeled;
    for (auto [i, j] : g.edges()) relabeled.push_back({perm[i], perm[j]});
    GraphInstance h = graph_from_edges(10, relabeled);
    const auto bg = brandes_betweenness(g, false).values;
    const auto bh = brandes_betweenness(h, false).values;
    for (std::uint32_t v = 0; v < 10; ++v)
        CHECK(bg[v] == doctest::Approx(bh[perm[v]]).epsilon(1e-12));
}

TEST_CASE("geodesic counting") {
    GraphInstance pair = graph_from_edges(2, {{0, 1}});
    GeodesicCount adj = geodesic_count(pair, 0, 1);
    CHECK(adj.reachable);
    CHECK(adj.length_hops == 1);
    CHECK(adj.count == 1);

    GraphInstance cyc = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    GeodesicCount opp = geodesic_count(cyc, 0, 2);
    CHECK(opp.length_hops == 2);
    CHECK(opp.count == 2);

    GraphInstance split = graph_from_edges(3, {{0, 1}});
    CHECK_FALSE(geodesic_count(split, 0, 2).reachable);
    CHECK_THROWS_AS(geodesic_count(cyc, 1, 1), std::invalid_argument);
}

TEST_CASE("geodesic counting matches enumeration and is symmetric") {
    RandomState rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng.next_below(9);
        GraphInstance g = random_graph(n, 0.3, rng);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) {
                const auto paths = all_shortest_paths(g, i, j);
                const GeodesicCount fwd = geodesic_count(g, i, j);
                const GeodesicCount rev = geodesic_count(g, j, i);
                CHECK(fwd.reachable == !paths.empty());
                CHECK(fwd.count == rev.count);
                CHECK(fwd.length_hops == rev.length_hops);
                if (!paths.empty()) {
                    CHECK(fwd.count == paths.size());
                    CHECK(fwd.length_hops == static_cast<int>(paths.front().size()) - 1);
                }
            }
    }
}

TEST_CASE("pair dependencies") {
    GraphInstance path = graph_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(pair_dependency(path, 0, 2, 1) == doctest::Approx(1.0));
    GraphInstance cyc = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(pair_dependency(cyc, 0, 2, 1) == doctest::Approx(0.5));
    CHECK(pair_dependency(cyc, 0, 2, 3) == doctest::Approx(0.5));
    GraphInstance split = graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK(pair_dependency(split, 0, 2, 1) == 0.0);
    CHECK_THROWS_AS(pair_dependency(cyc, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair_dependency(cyc, 0, 2, 2), std::invalid_argument);
}

TEST_CASE("pair dependencies sum to the brandes values") {
    RandomState rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 5 + rng.next_below(6);
        GraphInstance g = random_graph(n, 0.4, rng);
        const auto bc = brandes_betweenness(g, false).values;
        for (std::uint32_t z = 0; z < n; ++z) {
            double sum = 0.0;
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j)
                    if (i != z && j != z) sum += pair_dependency(g, i, j, z);
            CHECK(sum == doctest::Approx(bc[z]).epsilon(1e-9));
        }
    }
}

TEST_CASE("current flow on series and parallel fixtures") {
    // path 1-2-3: the single (s,t) = (0,2) pair pushes its whole ampere
    // through the middle; averaging over the 3 pairs gives 1/3
    GraphInstance path = graph_from_edges(3, {{0, 1}, {1, 2}});
    CentralityVector cf = current_flow_betweenness(path);
    CHECK(cf.values[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_FALSE(cf.restricted_to_largest_component);

    // 4-cycle: for opposite (s,t) each side vertex carries half the current
    GraphInstance cyc = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CentralityVector cc = current_flow_betweenness(cyc);
    // vertex 1 carries: 0.5 for pair (0,2), 0.25 for (0,3) and (2,3) each... use oracle
    const auto oracle = pinv_current_flow(cyc);
    for (int v = 0; v < 4; ++v) CHECK(cc.values[v] == doctest::Approx(oracle[v]).epsilon(1e-12));
}

TEST_CASE("current flow equals the pseudo-inverse oracle on random graphs") {
    RandomState rng(909);
    int done = 0;
    while (done < 20) {
        const std::size_t n = 5 + rng.next_below(6);  // up to 10
        GraphInstance g = random_graph(n, 0.45, rng);
        const CentralityVector got = current_flow_betweenness(g);
        const auto expect = pinv_current_flow(g);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(got.values[v] == doctest::Approx(expect[v]).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("disconnected input restricts to the largest component") {
    GraphInstance g = graph_from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    const CentralityVector cf = current_flow_betweenness(g);
    CHECK(cf.restricted_to_largest_component);
    CHECK(cf.values[3] == 0.0);
    CHECK(cf.values[4] == 0.0);
    CHECK(cf.values[1] > 0.0);
}

TEST_CASE("per-pair vertex current never exceeds the unit injection") {
    RandomState rng(111);
    GraphInstance g = random_graph(9, 0.5, rng);
    const auto cf = current_flow_betweenness(g).values;
    // averaged value is a mean of per-pair throughputs each bounded by 1
    for (double v : cf) CHECK(v <= 1.0 + 1e-12);
}

TEST_CASE("trees: current flow equals shortest-path dependencies") {
    RandomState rng(717);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4 + rng.next_below(9);
        GraphInstance g = random_tree(n, rng);
        const auto cf = current_flow_betweenness(g).values;
        const auto bc = brandes_betweenness(g, false).values;
        const double pairs = 0.5 * n * (n - 1.0);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(cf[v] == doctest::Approx(bc[v] / pairs).epsilon(1e-9));
    }
}

TEST_CASE("dissipated energy") {
    GraphInstance path = graph_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(dissipated_energy(path, {1.0, 1.0}) == doctest::Approx(2.0));
    GraphInstance cyc = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(dissipated_energy(cyc, {0.5, 0.5, 0.5, 0.5}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(dissipated_energy(path, {1.0}), std::invalid_argument);
}

TEST_CASE("kirchhoff flow minimizes energy among conserving flows") {
    // two parallel 2-edge routes between s and t; conserving flows put alpha
    // on one route and 1 - alpha on the other; the balanced split wins
    RandomState rng(13);
    const double best = 1.0;  // 4 * 0.5^2
    for (int i = 0; i < 1000; ++i) {
        const double alpha = rng.next_double();
        const double energy = 2.0 * alpha * alpha + 2.0 * (1.0 - alpha) * (1.0 - alpha);
        CHECK(energy >= best - 1e-12);
    }
}
