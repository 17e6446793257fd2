#include "skc/protocol.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "skc/errors.hpp"

namespace skc {

void Gf2Matrix::add_row(std::uint64_t form) { rows_.push_back(form); }

namespace {

// Echelon basis: basis[b] has leading (highest set) bit b.
struct Echelon {
    std::uint64_t basis[64] = {0};
    int rank = 0;

    // Returns false when the form was already in the span.
    bool insert(std::uint64_t v) {
        while (v) {
            int lead = 63 - std::countl_zero(v);
            if (!basis[lead]) {
                basis[lead] = v;
                ++rank;
                return true;
            }
            v ^= basis[lead];
        }
        return false;
    }

    bool contains(std::uint64_t v) const {
        while (v) {
            int lead = 63 - std::countl_zero(v);
            if (!basis[lead]) return false;
            v ^= basis[lead];
        }
        return true;
    }
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based bit stream: independent of call order, replayable from the
// recorded seed.
int edge_bit(std::uint64_t seed, std::size_t counter) {
    return static_cast<int>(splitmix64(seed ^ splitmix64(counter + 1)) & 1u);
}

} // namespace

int Gf2Matrix::rank() const {
    Echelon e;
    for (auto r : rows_) e.insert(r);
    return e.rank;
}

bool Gf2Matrix::spans(std::uint64_t form) const {
    Echelon e;
    for (auto r : rows_) e.insert(r);
    return e.contains(form);
}

ProtocolRun run_protocol(const Hypergraph& graph, int n, std::uint64_t seed) {
    Multigraph g = expand(graph, n);
    if (!g.connected()) throw DomainError("graph not connected");

    ProtocolRun run;
    run.seed = seed;
    run.m = g.terminals();
    run.trees = pack_trees(g);
    run.edge_bits.resize(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        run.edge_bits[i] = edge_bit(seed, i);

    auto value_of = [&](std::uint64_t form) {
        int v = 0;
        while (form) {
            int i = std::countr_zero(form);
            form &= form - 1;
            v ^= run.edge_bits[static_cast<std::size_t>(i)];
        }
        return v;
    };

    for (std::size_t tj = 0; tj < run.trees.size(); ++tj) {
        const auto& tree = run.trees[tj];
        // Key bit: the tree's lowest edge id.
        int ref = *std::min_element(tree.begin(), tree.end());
        std::uint64_t key_form = std::uint64_t{1} << ref;
        run.key_forms.push_back(key_form);
        run.key_values.push_back(run.edge_bits[static_cast<std::size_t>(ref)]);

        // Each vertex of tree-degree d broadcasts d-1 XORs of its incident
        // tree edges, chained in ascending id order.
        for (int v = 1; v <= g.terminals(); ++v) {
            std::vector<int> inc;
            for (int id : tree) {
                const auto& e = g.edges()[static_cast<std::size_t>(id)];
                if (e.u == v || e.v == v) inc.push_back(id);
            }
            std::sort(inc.begin(), inc.end());
            for (std::size_t k = 0; k + 1 < inc.size(); ++k) {
                TranscriptBit bit;
                bit.form = (std::uint64_t{1} << inc[k]) ^ (std::uint64_t{1} << inc[k + 1]);
                bit.value = value_of(bit.form);
                bit.terminal = v;
                bit.tree = static_cast<int>(tj);
                run.transcript.push_back(bit);
            }
        }
    }

    if (run.transcript.size() !=
        run.trees.size() * static_cast<std::size_t>(g.terminals() - 2))
        throw InternalError("transcript length is not (m-2) * sigma");
    return run;
}

std::vector<bool> verify_agreement(const ProtocolRun& run, const Multigraph& g) {
    if (run.m != g.terminals() || run.edge_bits.size() != g.edge_count())
        throw DomainError("run does not match the graph");
    std::vector<bool> verdicts;
    for (int v = 1; v <= g.terminals(); ++v) {
        Echelon known;
        for (int id : g.incident(v)) known.insert(std::uint64_t{1} << id);
        for (const auto& bit : run.transcript) known.insert(bit.form);
        bool ok = true;
        for (auto key : run.key_forms)
            if (!known.contains(key)) { ok = false; break; }
        verdicts.push_back(ok);
    }
    return verdicts;
}

bool all_agree(const std::vector<bool>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
}

SecrecyAudit verify_secrecy(const ProtocolRun& run) {
    Echelon key, transcript, joint;
    for (auto f : run.key_forms) {
        key.insert(f);
        joint.insert(f);
    }
    for (const auto& bit : run.transcript) {
        transcript.insert(bit.form);
        joint.insert(bit.form);
    }
    SecrecyAudit audit;
    audit.key_rank = key.rank;
    audit.transcript_rank = transcript.rank;
    audit.joint_rank = joint.rank;
    audit.secret = joint.rank == key.rank + transcript.rank;
    return audit;
}

namespace {

std::vector<int> form_indices(std::uint64_t form) {
    std::vector<int> idx;
    while (form) {
        idx.push_back(std::countr_zero(form));
        form &= form - 1;
    }
    return idx;
}

} // namespace

std::string serialize_run(const ProtocolRun& run, const Multigraph& g) {
    nlohmann::json doc;
    doc["seed"] = run.seed;
    doc["m"] = run.m;
    doc["edge_bits"] = run.edge_bits;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    doc["trees"] = run.trees;

    nlohmann::json keys = nlohmann::json::array();
    for (std::size_t i = 0; i < run.key_forms.size(); ++i)
        keys.push_back({{"form", form_indices(run.key_forms[i])}, {"value", run.key_values[i]}});
    doc["key_bits"] = std::move(keys);

    nlohmann::json trans = nlohmann::json::array();
    for (const auto& bit : run.transcript)
        trans.push_back({{"form", form_indices(bit.form)},
                         {"value", bit.value},
                         {"terminal", bit.terminal},
                         {"tree", bit.tree}});
    doc["transcript"] = std::move(trans);

    auto agreement = verify_agreement(run, g);
    auto secrecy = verify_secrecy(run);
    doc["agreement"] = std::vector<bool>(agreement.begin(), agreement.end());
    doc["secrecy"] = {{"exact", secrecy.secret},
                      {"key_rank", secrecy.key_rank},
                      {"transcript_rank", secrecy.transcript_rank},
                      {"joint_rank", secrecy.joint_rank}};
    return doc.dump();
}

} // namespace skc
