#include "rgg/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace rgg {

ConnectionModel ConnectionModel::hard(double r0) {
    if (!(r0 > 0.0)) throw std::invalid_argument("ConnectionModel::hard: r0 must be > 0");
    ConnectionModel m;
    m.kind = Kind::Hard;
    m.r0 = r0;
    return m;
}

ConnectionModel ConnectionModel::rayleigh(double beta, double eta) {
    if (!(beta > 0.0 && eta > 0.0))
        throw std::invalid_argument("ConnectionModel::rayleigh: beta, eta must be > 0");
    ConnectionModel m;
    m.kind = Kind::Rayleigh;
    m.beta = beta;
    m.eta = eta;
    return m;
}

double ConnectionModel::range() const {
    return kind == Kind::Hard ? r0 : std::pow(beta, -1.0 / eta);
}

double connection_probability(const ConnectionModel& model, double dist) {
    if (model.kind == ConnectionModel::Kind::Hard) return dist < model.r0 ? 1.0 : 0.0;
    return std::exp(-model.beta * std::pow(dist, model.eta));
}

bool GraphInstance::has_edge(std::uint32_t i, std::uint32_t j) const {
    const auto& nb = adjacency[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> GraphInstance::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    es.reserve(edge_count);
    for (std::uint32_t i = 0; i < adjacency.size(); ++i)
        for (std::uint32_t j : adjacency[i])
            if (i < j) es.emplace_back(i, j);
    return es;
}

namespace {

struct CellGrid {
    std::array<double, 3> lo{};
    std::array<int, 3> dims{};
    double cell = 1.0;
    std::size_t ndim = 2;
    bool wrap = false;
    std::vector<std::vector<std::uint32_t>> cells;

    std::size_t index_of(const Point& p) const {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < ndim; ++k) {
            int c = static_cast<int>((p[k] - lo[k]) / cell);
            c = std::clamp(c, 0, dims[k] - 1);
            idx = idx * dims[k] + static_cast<std::size_t>(c);
        }
        return idx;
    }
};

bool make_grid(const Domain& dom, const std::vector<Point>& pts, double cutoff, CellGrid& grid) {
    grid.ndim = dom.dim();
    grid.wrap = dom.kind() == Domain::Kind::Torus;
    double lo = 0.0, hi = 0.0;
    switch (dom.kind()) {
        case Domain::Kind::Disk:
        case Domain::Kind::Annulus:
        case Domain::Kind::Sphere:
        case Domain::Kind::SphericalShell:
            lo = -dom.outer_radius();
            hi = dom.outer_radius();
            break;
        default:
            lo = 0.0;
            hi = dom.side();
            break;
    }
    grid.cell = cutoff;
    std::size_t total = 1;
    for (std::size_t k = 0; k < grid.ndim; ++k) {
        grid.lo[k] = lo;
        const int n = static_cast<int>(std::floor((hi - lo) / cutoff));
        if (n < 4) return false;  // brute force is cheaper / wrap would alias
        grid.dims[k] = n;
        grid.cell = std::max(grid.cell, (hi - lo) / n);
        total *= static_cast<std::size_t>(n);
    }
    if (total > 50'000'000) return false;
    grid.cells.assign(total, {});
    for (std::uint32_t i = 0; i < pts.size(); ++i) grid.cells[grid.index_of(pts[i])].push_back(i);
    return true;
}

}  // namespace

GraphInstance build_graph(PointSet points, const ConnectionModel& model, bool respect_visibility,
                          RandomState& rng) {
    GraphInstance g;
    g.model = model;
    const auto& dom = *points.domain;
    const std::vector<Point>& pts = points.points;
    const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
    g.adjacency.assign(n, {});
    const bool soft = model.kind == ConnectionModel::Kind::Rayleigh;
    const double cutoff = soft ? 3.0 * model.range() : model.r0;
    const bool need_vis = respect_visibility && !dom.convex() && dom.has_boundary();
    const std::uint64_t key = rng.key;

    auto try_edge = [&](std::uint32_t i, std::uint32_t j) {
        const double d = dom.distance(pts[i], pts[j]);
        if (d >= cutoff) return;
        if (soft) {
            const double p = connection_probability(model, d);
            if (pair_uniform(key, i, j) >= p) return;
        }
        if (need_vis && !visibility(dom, pts[i], pts[j])) return;
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
        ++g.edge_count;
    };

    CellGrid grid;
    if (n > 64 && make_grid(dom, pts, cutoff, grid)) {
        const std::size_t nd = grid.ndim;
        std::array<int, 3> c{};
        auto for_cell = [&](std::size_t idx) {
            // decode cell coordinates
            std::size_t rem = idx;
            for (std::size_t k = nd; k-- > 0;) {
                c[k] = static_cast<int>(rem % grid.dims[k]);
                rem /= grid.dims[k];
            }
            const auto& mine = grid.cells[idx];
            if (mine.empty()) return;
            std::array<int, 3> o{};
            const int span = 1;
            for (o[0] = -span; o[0] <= span; ++o[0])
                for (o[1] = -span; o[1] <= (nd > 1 ? span : -span); ++o[1])
                    for (o[2] = -span; o[2] <= (nd > 2 ? span : -span); ++o[2]) {
                        std::size_t nidx = 0;
                        bool ok = true;
                        for (std::size_t k = 0; k < nd; ++k) {
                            int cc = c[k] + o[k];
                            if (grid.wrap) {
                                cc = (cc + grid.dims[k]) % grid.dims[k];
                            } else if (cc < 0 || cc >= grid.dims[k]) {
                                ok = false;
                                break;
                            }
                            nidx = nidx * grid.dims[k] + static_cast<std::size_t>(cc);
                        }
                        if (!ok || nidx < idx) continue;
                        for (std::uint32_t i : mine)
                            for (std::uint32_t j : grid.cells[nidx]) {
                                if (nidx == idx && j <= i) continue;
                                try_edge(i, j);
                            }
                    }
        };
        for (std::size_t idx = 0; idx < grid.cells.size(); ++idx) for_cell(idx);
    } else {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) try_edge(i, j);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    g.points = std::move(points);
    return g;
}

GraphInstance graph_from_edges(std::size_t n,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    GraphInstance g;
    g.points.points.resize(n);
    g.adjacency.assign(n, {});
    for (auto [i, j] : edges) {
        if (i == j) throw std::invalid_argument("graph_from_edges: self-loop");
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
        ++g.edge_count;
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<std::vector<std::uint32_t>> connected_components(const GraphInstance& g) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.adjacency.size());
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint32_t w : g.adjacency[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

bool is_connected(const GraphInstance& g) {
    if (g.size() <= 1) return true;
    return connected_components(g).size() == 1;
}

std::size_t isolated_count(const GraphInstance& g) {
    std::size_t c = 0;
    for (const auto& nb : g.adjacency)
        if (nb.empty()) ++c;
    return c;
}

double component_euclidean_diameter(const GraphInstance& g,
                                    const std::vector<std::uint32_t>& component) {
    if (component.empty())
        throw std::invalid_argument("component_euclidean_diameter: empty component");
    double best = 0.0;
    for (std::size_t a = 0; a < component.size(); ++a)
        for (std::size_t b = a + 1; b < component.size(); ++b)
            best = std::max(best, euclidean_distance(g.points.points[component[a]],
                                                     g.points.points[component[b]]));
    return best;
}

void write_edges_csv(std::ostream& os, const GraphInstance& g) {
    os << "i,j\n";
    for (auto [i, j] : g.edges()) os << i << "," << j << "\n";
}

}  // namespace rgg
