#include "rgg/centrality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace rgg {

namespace {

struct BfsResult {
    std::vector<int> dist;       // -1 unreachable
    std::vector<double> sigma;   // shortest-path counts
    std::vector<std::vector<std::uint32_t>> pred;
    std::vector<std::uint32_t> order;  // vertices in non-decreasing distance
};

BfsResult bfs_count(const GraphInstance& g, std::uint32_t s, bool keep_pred) {
    const std::size_t n = g.size();
    BfsResult r;
    r.dist.assign(n, -1);
    r.sigma.assign(n, 0.0);
    if (keep_pred) r.pred.assign(n, {});
    r.order.reserve(n);
    r.dist[s] = 0;
    r.sigma[s] = 1.0;
    std::queue<std::uint32_t> q;
    q.push(s);
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        r.order.push_back(v);
        for (std::uint32_t w : g.adjacency[v]) {
            if (r.dist[w] < 0) {
                r.dist[w] = r.dist[v] + 1;
                q.push(w);
            }
            if (r.dist[w] == r.dist[v] + 1) {
                r.sigma[w] += r.sigma[v];
                if (keep_pred) r.pred[w].push_back(v);
            }
        }
    }
    return r;
}

}  // namespace

CentralityVector brandes_betweenness(const GraphInstance& g, bool normalized) {
    const std::size_t n = g.size();
    CentralityVector out;
    out.kind = CentralityVector::Kind::ShortestPath;
    out.normalized = normalized;
    out.values.assign(n, 0.0);
    std::vector<double> delta(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        BfsResult r = bfs_count(g, s, true);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
            const std::uint32_t w = *it;
            for (std::uint32_t v : r.pred[w])
                delta[v] += r.sigma[v] / r.sigma[w] * (1.0 + delta[w]);
            // source loop double-counts unordered pairs; halve
            if (w != s) out.values[w] += 0.5 * delta[w];
        }
    }
    if (normalized && n > 2) {
        const double scale = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
        for (double& v : out.values) v *= scale;
    }
    return out;
}

GeodesicCount geodesic_count(const GraphInstance& g, std::uint32_t i, std::uint32_t j) {
    if (i == j) throw std::invalid_argument("geodesic_count: endpoints must differ");
    BfsResult r = bfs_count(g, i, false);
    GeodesicCount out;
    if (r.dist[j] < 0) return out;
    out.reachable = true;
    out.length_hops = r.dist[j];
    out.count = static_cast<std::uint64_t>(std::llround(r.sigma[j]));
    return out;
}

double pair_dependency(const GraphInstance& g, std::uint32_t i, std::uint32_t j, std::uint32_t z) {
    if (i == j || i == z || j == z)
        throw std::invalid_argument("pair_dependency: vertices must be distinct");
    BfsResult from_i = bfs_count(g, i, false);
    if (from_i.dist[j] < 0) return 0.0;
    BfsResult from_j = bfs_count(g, j, false);
    if (from_i.dist[z] < 0 || from_i.dist[z] + from_j.dist[z] != from_i.dist[j]) return 0.0;
    return from_i.sigma[z] * from_j.sigma[z] / from_i.sigma[j];
}

CentralityVector current_flow_betweenness(const GraphInstance& g) {
    const std::size_t n = g.size();
    CentralityVector out;
    out.kind = CentralityVector::Kind::CurrentFlow;
    out.values.assign(n, 0.0);
    if (n > 2000) throw std::invalid_argument("current_flow_betweenness: n > 2000 not supported");
    auto comps = connected_components(g);
    std::vector<std::uint32_t> comp;
    for (const auto& c : comps)
        if (c.size() > comp.size()) comp = c;
    out.restricted_to_largest_component = comps.size() > 1;
    const std::size_t m = comp.size();
    if (m < 3) return out;

    std::vector<std::int64_t> local(n, -1);
    for (std::size_t a = 0; a < m; ++a) local[comp[a]] = static_cast<std::int64_t>(a);

    // grounded Laplacian (last component vertex removed), factor once
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m - 1, m - 1);
    for (std::size_t a = 0; a + 1 < m; ++a) {
        const std::uint32_t v = comp[a];
        lap(a, a) = static_cast<double>(g.degree(v));
        for (std::uint32_t w : g.adjacency[v]) {
            const std::int64_t b = local[w];
            if (b >= 0 && static_cast<std::size_t>(b) + 1 < m) lap(a, b) -= 1.0;
        }
    }
    Eigen::LDLT<Eigen::MatrixXd> solver(lap);

    std::vector<double> potential(m);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = s + 1; t < m; ++t) {
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m - 1);
            if (s + 1 < m) rhs(s) = 1.0;
            if (t + 1 < m) rhs(t) = -1.0;
            Eigen::VectorXd sol = solver.solve(rhs);
            for (std::size_t a = 0; a + 1 < m; ++a) potential[a] = sol(a);
            potential[m - 1] = 0.0;
            for (std::size_t a = 0; a < m; ++a) {
                if (a == s || a == t) continue;
                const std::uint32_t v = comp[a];
                double through = 0.0;
                for (std::uint32_t w : g.adjacency[v])
                    through += std::fabs(potential[a] - potential[static_cast<std::size_t>(local[w])]);
                out.values[v] += 0.5 * through;
            }
        }
    }
    const double pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    for (double& v : out.values) v /= pairs;
    return out;
}

double dissipated_energy(const GraphInstance& g, const std::vector<double>& edge_currents) {
    if (edge_currents.size() != g.edge_count)
        throw std::invalid_argument("dissipated_energy: one current per edge required");
    double e = 0.0;
    for (double c : edge_currents) e += c * c;
    return e;
}

}  // namespace rgg
