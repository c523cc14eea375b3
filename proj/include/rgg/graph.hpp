#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "rgg/pointprocess.hpp"

namespace rgg {

// Hard: edge iff distance < r0 (strict). Rayleigh: edge w.p. exp(-beta * r^eta).
struct ConnectionModel {
    enum class Kind { Hard, Rayleigh };
    Kind kind = Kind::Hard;
    double r0 = 1.0;
    double beta = 1.0;
    double eta = 2.0;

    static ConnectionModel hard(double r0);
    static ConnectionModel rayleigh(double beta, double eta = 2.0);

    // typical connection length scale; r0 for hard, beta^(-1/eta) for Rayleigh
    double range() const;
};

double connection_probability(const ConnectionModel& model, double dist);

struct GraphInstance {
    PointSet points;
    ConnectionModel model;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted neighbor lists
    std::size_t edge_count = 0;

    std::size_t size() const { return points.size(); }
    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    std::size_t degree(std::uint32_t i) const { return adjacency[i].size(); }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

// Soft edges use one uniform per unordered pair, keyed by (rng.key, i, j),
// so raising beta on the same point set and key never adds an edge.
// Rayleigh interactions beyond 3 * range() are truncated to non-edges.
GraphInstance build_graph(PointSet points, const ConnectionModel& model, bool respect_visibility,
                          RandomState& rng);

// Build from an explicit edge list (test helper / non-geometric graphs).
GraphInstance graph_from_edges(std::size_t n,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

std::vector<std::vector<std::uint32_t>> connected_components(const GraphInstance& g);
bool is_connected(const GraphInstance& g);  // n <= 1 counts as connected
std::size_t isolated_count(const GraphInstance& g);
double component_euclidean_diameter(const GraphInstance& g,
                                    const std::vector<std::uint32_t>& component);

// CSV `i,j` sorted lexicographically.
void write_edges_csv(std::ostream& os, const GraphInstance& g);

}  // namespace rgg
