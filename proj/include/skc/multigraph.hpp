#pragma once

#include <cstdint>
#include <vector>

#include "skc/hypergraph.hpp"
#include "skc/partition.hpp"

namespace skc {

// Ordinary multigraph with individually addressable edge instances.
// Instance ids are dense 0..|E^(n)|-1 and stable: copies are emitted
// copy-major (outer loop over the n copies, inner loop over the input edge
// list, multiplicity copies consecutive).
class Multigraph {
public:
    struct Edge {
        int u, v; // 1-indexed, u < v
    };

    Multigraph(int m, std::vector<Edge> edges);

    // Requires a 2-uniform hypergraph.
    static Multigraph from_graph(const Hypergraph& graph);

    int terminals() const { return m_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool connected() const;

    // Edges with endpoints in different blocks of the partition.
    long crossing_count(const Partition& partition) const;

    // Instance ids incident to a terminal, ascending.
    std::vector<int> incident(int terminal) const;

    std::uint64_t incident_mask(int terminal) const;

private:
    int m_;
    std::vector<Edge> edges_;
};

// n-fold blow-up of a 2-uniform PIN graph; |E^(n)| must stay within 64 so
// edge-bit vectors fit one machine word.
Multigraph expand(const Hypergraph& graph, int n);

// Spanning tree packing number of the multigraph: the Tutte/Nash-Williams
// value min over partitions of floor(crossing / (|P|-1)). Cross-validated
// against pack_trees by the test suite. Requires connected, m <= 10.
long nash_williams_sigma(const Multigraph& g);

// Fractional packing rate min over partitions of crossing / (|P|-1), exact.
Value sigma_rate(const Multigraph& g);

// sigma edge-disjoint spanning trees, found by depth-first backtracking
// over edge ids with the Nash-Williams value as feasibility certificate.
// Each tree is a list of edge instance ids. Disjointness and spanning are
// verified before returning.
std::vector<std::vector<int>> pack_trees(const Multigraph& g);

} // namespace skc
