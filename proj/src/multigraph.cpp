#include "skc/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <numeric>

#include "skc/errors.hpp"

namespace skc {

Multigraph::Multigraph(int m, std::vector<Edge> edges) : m_(m), edges_(std::move(edges)) {
    if (m < 2 || m > kMaxTerminals) throw DomainError("multigraph needs 2 <= m <= 20");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > m || e.u == e.v) throw DomainError("bad edge endpoints");
    }
}

Multigraph Multigraph::from_graph(const Hypergraph& graph) {
    if (graph.uniformity() != 2)
        throw DomainError("operation requires a 2-uniform PIN model (a graph)");
    std::vector<Edge> edges;
    for (const auto& e : graph.edges()) {
        auto mem = e.members.members();
        for (long c = 0; c < e.multiplicity; ++c)
            edges.push_back({mem[0], mem[1]});
    }
    return Multigraph(graph.terminals(), std::move(edges));
}

bool Multigraph::connected() const {
    std::vector<int> root(m_ + 1);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    int components = m_;
    for (const auto& e : edges_) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            root[a] = b;
            --components;
        }
    }
    return components == 1;
}

long Multigraph::crossing_count(const Partition& partition) const {
    std::vector<int> block_of(m_ + 1, -1);
    for (std::size_t bi = 0; bi < partition.blocks.size(); ++bi)
        for (int v : partition.blocks[bi].members()) block_of[v] = static_cast<int>(bi);
    long crossing = 0;
    for (const auto& e : edges_)
        if (block_of[e.u] != block_of[e.v]) ++crossing;
    return crossing;
}

std::vector<int> Multigraph::incident(int terminal) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == terminal || edges_[i].v == terminal) out.push_back(static_cast<int>(i));
    return out;
}

std::uint64_t Multigraph::incident_mask(int terminal) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == terminal || edges_[i].v == terminal) mask |= std::uint64_t{1} << i;
    return mask;
}

Multigraph expand(const Hypergraph& graph, int n) {
    if (n < 1) throw DomainError("expansion factor must be >= 1");
    Multigraph base = Multigraph::from_graph(graph);
    if (base.edge_count() * static_cast<std::size_t>(n) > 64)
        throw DomainError("expansion exceeds 64 edge instances");
    std::vector<Multigraph::Edge> edges;
    for (int copy = 0; copy < n; ++copy)
        for (const auto& e : base.edges()) edges.push_back(e);
    return Multigraph(graph.terminals(), std::move(edges));
}

namespace {

void check_packing_pre(const Multigraph& g) {
    if (g.terminals() > 10) throw DomainError("tree packing capped at m = 10");
}

} // namespace

long nash_williams_sigma(const Multigraph& g) {
    check_packing_pre(g);
    long best = -1;
    for_each_partition(g.terminals(), [&](const Partition& p) {
        long value = g.crossing_count(p) / (static_cast<long>(p.size()) - 1);
        if (best < 0 || value < best) best = value;
    });
    return best;
}

Value sigma_rate(const Multigraph& g) {
    check_packing_pre(g);
    bool have = false;
    Value best;
    for_each_partition(g.terminals(), [&](const Partition& p) {
        Value value = Value::rational(g.crossing_count(p), static_cast<long>(p.size()) - 1);
        if (!have || value < best) {
            best = value;
            have = true;
        }
    });
    return best;
}

namespace {

// Union-find over the m terminals, one copy per tree under construction.
struct Forest {
    std::vector<int> root;
    int edges_used = 0;

    explicit Forest(int m) : root(m + 1) { std::iota(root.begin(), root.end(), 0); }

    int find(int x) const {
        while (root[x] != x) x = root[x];
        return x;
    }
};

class PackSearch {
public:
    PackSearch(const Multigraph& g, long sigma)
        : g_(g),
          need_(g.terminals() - 1),
          forests_(static_cast<std::size_t>(sigma), Forest(g.terminals())),
          assignment_(static_cast<std::size_t>(sigma)) {}

    bool run() { return place(0); }

    std::vector<std::vector<int>> trees() const { return assignment_; }

private:
    // Sorted masks of the nontrivial components; forests with equal
    // signatures are interchangeable, so only the first is branched on.
    std::vector<std::uint32_t> signature(const Forest& f) const {
        std::vector<std::uint32_t> mask(static_cast<std::size_t>(g_.terminals()) + 1, 0);
        for (int v = 1; v <= g_.terminals(); ++v)
            mask[static_cast<std::size_t>(f.find(v))] |= 1u << (v - 1);
        std::vector<std::uint32_t> sig;
        for (auto m : mask)
            if (m && (m & (m - 1))) sig.push_back(m);
        std::sort(sig.begin(), sig.end());
        return sig;
    }

    // Every unfinished forest must still be connectable by the edges that
    // have not been decided yet (a forest needing k more edges has exactly
    // k+1 components, so connectability is the whole requirement).
    bool completable(std::size_t next_edge) const {
        for (const auto& f : forests_) {
            if (f.edges_used == need_) continue;
            std::vector<int> root(f.root);
            std::function<int(int)> find = [&](int x) {
                while (root[x] != x) x = root[x] = root[root[x]];
                return x;
            };
            int components = g_.terminals() - f.edges_used;
            for (std::size_t id = next_edge; id < g_.edge_count() && components > 1; ++id) {
                int a = find(g_.edges()[id].u), b = find(g_.edges()[id].v);
                if (a != b) {
                    root[a] = b;
                    --components;
                }
            }
            if (components > 1) return false;
        }
        return true;
    }

    bool place(std::size_t edge) {
        std::size_t total_needed = 0;
        for (const auto& f : forests_) total_needed += static_cast<std::size_t>(need_ - f.edges_used);
        if (total_needed == 0) return true;
        if (edge >= g_.edge_count() || g_.edge_count() - edge < total_needed) return false;

        // Forest order does not matter, so a failed state is identified by
        // its sorted signature multiset and never explored twice.
        std::string key = state_key(edge);
        if (failed_.count(key)) return false;
        bool ok = explore(edge, total_needed);
        if (!ok) failed_.insert(std::move(key));
        return ok;
    }

    bool explore(std::size_t edge, std::size_t total_needed) {
        const auto& e = g_.edges()[edge];
        // Emptier forests first: spreading edges finds balanced packings
        // quickly on tight instances.
        std::vector<std::size_t> order(forests_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return forests_[a].edges_used < forests_[b].edges_used;
        });
        std::vector<std::vector<std::uint32_t>> tried;
        for (std::size_t t : order) {
            Forest& f = forests_[t];
            if (f.edges_used == need_) continue;
            int a = f.find(e.u), b = f.find(e.v);
            if (a == b) continue;
            auto sig = signature(f);
            if (std::find(tried.begin(), tried.end(), sig) != tried.end()) continue;
            tried.push_back(std::move(sig));
            f.root[a] = b;
            ++f.edges_used;
            assignment_[t].push_back(static_cast<int>(edge));
            if (completable(edge + 1) && place(edge + 1)) return true;
            assignment_[t].pop_back();
            f.root[a] = a;
            --f.edges_used;
        }
        // Leave this edge unused.
        if (g_.edge_count() - edge == total_needed) return false; // no slack left
        return completable(edge + 1) && place(edge + 1);
    }

    std::string state_key(std::size_t edge) const {
        std::vector<std::vector<std::uint32_t>> sigs;
        sigs.reserve(forests_.size());
        for (const auto& f : forests_) sigs.push_back(signature(f));
        std::sort(sigs.begin(), sigs.end());
        std::string key;
        key.reserve(2 + sigs.size() * 8);
        key.push_back(static_cast<char>(edge & 0xff));
        key.push_back(static_cast<char>(edge >> 8));
        for (const auto& sig : sigs) {
            for (auto m : sig) {
                for (int b = 0; b < 3; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
            }
            key.push_back('|');
        }
        return key;
    }

    const Multigraph& g_;
    int need_;
    std::vector<Forest> forests_;
    std::vector<std::vector<int>> assignment_;
    std::unordered_set<std::string> failed_;
};

} // namespace

std::vector<std::vector<int>> pack_trees(const Multigraph& g) {
    check_packing_pre(g);
    if (!g.connected()) throw DomainError("graph not connected");
    if (g.edge_count() > 64) throw DomainError("tree packing capped at 64 edge instances");
    long sigma = nash_williams_sigma(g);
    if (sigma == 0) throw InternalError("connected graph with packing number 0");

    PackSearch search(g, sigma);
    if (!search.run())
        throw InternalError("tree packing search exhausted despite Nash-Williams certificate");
    auto trees = search.trees();

    // Verify: pairwise disjoint, each spanning.
    std::uint64_t used = 0;
    for (const auto& tree : trees) {
        if (tree.size() != static_cast<std::size_t>(g.terminals() - 1))
            throw InternalError("packed tree has the wrong edge count");
        Forest f(g.terminals());
        for (int id : tree) {
            std::uint64_t bit = std::uint64_t{1} << id;
            if (used & bit) throw InternalError("packed trees share an edge");
            used |= bit;
            const auto& e = g.edges()[static_cast<std::size_t>(id)];
            int a = f.find(e.u), b = f.find(e.v);
            if (a == b) throw InternalError("packed tree contains a cycle");
            f.root[a] = b;
        }
    }
    return trees;
}

} // namespace skc
