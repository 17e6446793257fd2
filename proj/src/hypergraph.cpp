#include "skc/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "skc/errors.hpp"

namespace skc {

Hypergraph::Hypergraph(int m, std::vector<Hyperedge> edges) : m_(m) {
    if (m < 1 || m > kMaxTerminals)
        throw DomainError("terminal count must be in 1.." + std::to_string(kMaxTerminals));
    // Merge duplicate member sets into multiplicities, keeping the first
    // occurrence's position so documents round-trip in order.
    std::map<std::uint32_t, std::size_t> position;
    for (const auto& e : edges) {
        if (e.members.empty()) throw DomainError("empty hyperedge");
        if (e.members.m != m) throw DomainError("hyperedge terminal count mismatch");
        if (e.multiplicity <= 0) throw DomainError("hyperedge multiplicity must be positive");
        auto it = position.find(e.members.bits);
        if (it == position.end()) {
            position[e.members.bits] = edges_.size();
            edges_.push_back(e);
        } else {
            edges_[it->second].multiplicity += e.multiplicity;
        }
    }
}

long Hypergraph::edge_count() const {
    long total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
}

bool Hypergraph::uniform(int t) const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [t](const Hyperedge& e) { return e.members.count() == t; });
}

int Hypergraph::uniformity() const {
    if (edges_.empty()) return -1;
    int t = edges_.front().members.count();
    return uniform(t) ? t : -1;
}

bool Hypergraph::connected() const {
    if (m_ == 1) return true;
    std::uint32_t reached = 1u; // terminal 1
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : edges_) {
            if ((e.members.bits & reached) && (e.members.bits & ~reached)) {
                reached |= e.members.bits;
                grew = true;
            }
        }
    }
    return reached == (1u << m_) - 1;
}

namespace {

// Min s-t cut by Edmonds-Karp on the unit-capacity (well, multiplicity-
// capacity) graph. Only used for 2-uniform hypergraphs.
long max_flow_st(int m, const std::vector<Hyperedge>& edges, int s, int t) {
    std::vector<std::vector<long>> cap(m + 1, std::vector<long>(m + 1, 0));
    for (const auto& e : edges) {
        auto mem = e.members.members();
        cap[mem[0]][mem[1]] += e.multiplicity;
        cap[mem[1]][mem[0]] += e.multiplicity;
    }
    long flow = 0;
    while (true) {
        std::vector<int> parent(m + 1, 0);
        parent[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && !parent[t]) {
            int u = q.front();
            q.pop();
            for (int v = 1; v <= m; ++v) {
                if (!parent[v] && cap[u][v] > 0) {
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
        if (!parent[t]) break;
        long aug = std::numeric_limits<long>::max();
        for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
    return flow;
}

} // namespace

long Hypergraph::edge_connectivity(CutMode mode) const {
    if (m_ < 2) throw DomainError("edge connectivity needs at least 2 terminals");
    if (!connected()) return 0;
    if (mode == CutMode::MaxFlow && uniformity() != 2)
        throw DomainError("max-flow cut computation requires a graph");
    bool enumerate = mode == CutMode::Enumerate ||
                     (mode == CutMode::Auto && (m_ <= 12 || uniformity() != 2));
    if (enumerate) {
        // Enumerate all 2^(m-1)-1 bipartitions (terminal 1 pinned to one side).
        const std::uint32_t all = (1u << m_) - 1;
        long best = -1;
        for (std::uint32_t side = 1; side < (1u << (m_ - 1)); ++side) {
            std::uint32_t part = side << 1; // nonempty subset of {2..m}
            long crossing = 0;
            for (const auto& e : edges_) {
                bool in_a = (e.members.bits & part) != 0;
                bool in_b = (e.members.bits & (all & ~part)) != 0;
                if (in_a && in_b) crossing += e.multiplicity;
            }
            if (best < 0 || crossing < best) best = crossing;
        }
        return best;
    }
    // Graph case, larger m: global min cut = min over t of maxflow(1, t).
    long best = -1;
    for (int t = 2; t <= m_; ++t) {
        long f = max_flow_st(m_, edges_, 1, t);
        if (best < 0 || f < best) best = f;
    }
    return best;
}

std::vector<TerminalSet> omega_sets(int m) {
    std::vector<TerminalSet> out;
    for (int size = 1; size <= m - 2; ++size) {
        // Combinations of {1..m} in lexicographic member order.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i + 1;
        while (true) {
            std::uint32_t bits = 0;
            for (int v : idx) bits |= 1u << (v - 1);
            out.emplace_back(bits, m);
            int i = size - 1;
            while (i >= 0 && idx[i] == m - (size - 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

} // namespace skc
