#include "rgg/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rgg {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

std::size_t LatticeConfig::open_count() const {
    auto count = [&](const std::vector<double>& u) {
        return static_cast<std::size_t>(std::count_if(u.begin(), u.end(), [&](double x) { return x < p; }));
    };
    return count(horizontal_u) + count(vertical_u);
}

void LatticeConfig::rethreshold(double new_p) {
    if (!(new_p >= 0.0 && new_p <= 1.0))
        throw std::invalid_argument("rethreshold: p must be in [0,1]");
    p = new_p;
}

LatticeConfig sample_bonds(int L, double p, RandomState& rng) {
    if (L < 2) throw std::invalid_argument("sample_bonds: L must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_bonds: p must be in [0,1]");
    LatticeConfig c;
    c.side = L;
    c.p = p;
    c.seed = rng.key;
    c.horizontal_u.resize(static_cast<std::size_t>(L) * (L - 1));
    c.vertical_u.resize(static_cast<std::size_t>(L - 1) * L);
    for (double& u : c.horizontal_u) u = rng.next_double();
    for (double& u : c.vertical_u) u = rng.next_double();
    return c;
}

ClusterStats cluster_stats(const LatticeConfig& c) {
    const int L = c.side;
    const std::size_t n = static_cast<std::size_t>(L) * L;
    UnionFind uf(n);
    auto idx = [L](int row, int col) { return static_cast<std::uint32_t>(row * L + col); };
    for (int row = 0; row < L; ++row)
        for (int col = 0; col + 1 < L; ++col)
            if (c.horizontal_open(row, col)) uf.unite(idx(row, col), idx(row, col + 1));
    for (int row = 0; row + 1 < L; ++row)
        for (int col = 0; col < L; ++col)
            if (c.vertical_open(row, col)) uf.unite(idx(row, col), idx(row + 1, col));

    ClusterStats out;
    std::vector<std::uint8_t> touches_left(n, 0), touches_right(n, 0), touches_any(n, 0);
    for (int row = 0; row < L; ++row) {
        touches_left[uf.find(idx(row, 0))] = 1;
        touches_right[uf.find(idx(row, L - 1))] = 1;
    }
    for (int row = 0; row < L; ++row)
        for (int col = 0; col < L; ++col)
            if (row == 0 || col == 0 || row == L - 1 || col == L - 1)
                touches_any[uf.find(idx(row, col))] = 1;

    for (std::uint32_t v = 0; v < n; ++v) {
        if (uf.find(v) != v) continue;
        out.sizes.push_back(uf.size[v]);
        out.largest = std::max<std::uint64_t>(out.largest, uf.size[v]);
        if (touches_left[v] && touches_right[v]) out.spanning = true;
    }
    const std::uint32_t center_root = uf.find(idx(L / 2, L / 2));
    out.cluster_of_center = uf.size[center_root];
    out.center_touches_boundary = touches_any[center_root] != 0;
    return out;
}

Estimate theta_hat(int L, double p, std::uint64_t trials, RandomState& rng) {
    if (trials < 1) throw std::invalid_argument("theta_hat: trials must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomState sub = rng.substream(t);
        const ClusterStats s = cluster_stats(sample_bonds(L, p, sub));
        if (s.center_touches_boundary) ++hits;
    }
    Estimate e;
    e.trials = trials;
    e.mean = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    return e;
}

Estimate mean_cluster_size(int L, double p, std::uint64_t trials, RandomState& rng) {
    if (trials < 1) throw std::invalid_argument("mean_cluster_size: trials must be >= 1");
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomState sub = rng.substream(t);
        const ClusterStats s = cluster_stats(sample_bonds(L, p, sub));
        const double x = static_cast<double>(s.cluster_of_center);
        sum += x;
        sum_sq += x * x;
    }
    Estimate e;
    e.trials = trials;
    const double n = static_cast<double>(trials);
    e.mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * e.mean * e.mean) / std::max(1.0, n - 1.0));
    e.std_error = std::sqrt(var / n);
    return e;
}

double pc_lower_bound(int d) {
    if (d < 2) throw std::invalid_argument("pc_lower_bound: d must be >= 2");
    return 1.0 / (2.0 * d - 1.0);
}

}  // namespace rgg
