#pragma once

#include <cstdint>
#include <vector>

#include "rgg/graph.hpp"

namespace rgg {

struct CentralityVector {
    enum class Kind { ShortestPath, CurrentFlow };
    std::vector<double> values;
    bool normalized = false;
    Kind kind = Kind::ShortestPath;
    // current-flow only: input was disconnected, values computed on the
    // largest component and zero elsewhere
    bool restricted_to_largest_component = false;
};

struct GeodesicCount {
    bool reachable = false;
    int length_hops = 0;  // >= 1 when reachable
    std::uint64_t count = 0;
};

// Shortest-path betweenness, unordered pairs counted once. Normalization
// divides by (n-1)(n-2)/2. Pairs with z as an endpoint contribute 0.
CentralityVector brandes_betweenness(const GraphInstance& g, bool normalized);

// Hop length and number of shortest paths between i and j via BFS layering.
GeodesicCount geodesic_count(const GraphInstance& g, std::uint32_t i, std::uint32_t j);

// sigma_ij(z) / sigma_ij; 0 when i and j are disconnected.
double pair_dependency(const GraphInstance& g, std::uint32_t i, std::uint32_t j, std::uint32_t z);

// Unit-resistor current-flow betweenness: for each source-sink pair solve the
// Kirchhoff system, vertex throughput is half the summed absolute incident
// currents (zero at the pair's own endpoints), averaged over pairs.
CentralityVector current_flow_betweenness(const GraphInstance& g);

// Sum of squared edge currents (unit resistances). Currents are indexed by
// g.edges() order.
double dissipated_energy(const GraphInstance& g, const std::vector<double>& edge_currents);

}  // namespace rgg
