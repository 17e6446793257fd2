#pragma once

#include <cstdint>
#include <vector>

#include "skc/terminal_set.hpp"

namespace skc {

// Multiset of hyperedges over terminals 1..m. Identical member sets are
// merged; `multiplicity` carries the copy count.
struct Hyperedge {
    TerminalSet members;
    long multiplicity = 1;
};

class Hypergraph {
public:
    Hypergraph(int m, std::vector<Hyperedge> edges);

    int terminals() const { return m_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    // Sum of multiplicities, i.e. |E| counted as a multiset.
    long edge_count() const;

    // True when every hyperedge has exactly t members.
    bool uniform(int t) const;
    // Uniform cardinality, or -1 when edge sizes differ.
    int uniformity() const;

    bool connected() const;

    // Minimum number of hyperedges (with multiplicity) meeting both sides
    // of a vertex bipartition. Enumerates all cuts up to m = 12; switches
    // to max-flow beyond that (graphs only). The explicit modes exist so
    // tests can compare both paths on the overlap range.
    enum class CutMode { Auto, Enumerate, MaxFlow };
    long edge_connectivity(CutMode mode = CutMode::Auto) const;

private:
    int m_;
    std::vector<Hyperedge> edges_;
};

} // namespace skc
