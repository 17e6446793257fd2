#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skc/multigraph.hpp"

namespace skc {

// Rows are linear forms over the edge bits (bit i of a row = edge instance
// i participates in the XOR). Width <= 64 by the expansion guard.
class Gf2Matrix {
public:
    explicit Gf2Matrix(int width) : width_(width) {}

    int width() const { return width_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    void add_row(std::uint64_t form);
    int rank() const;

    // True when the form is a GF(2) combination of the rows.
    bool spans(std::uint64_t form) const;

private:
    int width_;
    std::vector<std::uint64_t> rows_;
};

struct TranscriptBit {
    std::uint64_t form = 0; // XOR of two adjacent tree-edge bits
    int value = 0;
    int terminal = 0; // speaker
    int tree = 0;     // tree the bit was derived from
};

// One execution of the spanning-tree XOR protocol: per tree, a reference
// edge bit becomes a key bit and every internal vertex broadcasts the XORs
// of consecutive incident tree edges.
struct ProtocolRun {
    std::uint64_t seed = 0;
    int m = 0;
    std::vector<int> edge_bits;          // sampled values, one per instance
    std::vector<std::vector<int>> trees; // edge instance ids per tree
    std::vector<std::uint64_t> key_forms;
    std::vector<int> key_values;
    std::vector<TranscriptBit> transcript;
};

// Runs the protocol on the n-fold expansion of the graph. Deterministic
// given the seed: edge bit i is a counter-based hash of (seed, i). The
// reference edge of each tree is its lowest edge id; the edges incident to
// a vertex are XOR-chained in ascending id order.
ProtocolRun run_protocol(const Hypergraph& graph, int n, std::uint64_t seed);

// Per-terminal recoverability: terminal i recovers every key bit iff each
// key form lies in the span of its observed edge indicators plus all
// transcript forms. epsilon = 0, checked by rank over GF(2).
std::vector<bool> verify_agreement(const ProtocolRun& run, const Multigraph& g);

bool all_agree(const std::vector<bool>& verdicts);

struct SecrecyAudit {
    bool secret = false; // I(K; F) = 0
    int key_rank = 0;        // = H(K) in bits
    int transcript_rank = 0; // = H(F) in bits
    int joint_rank = 0;
};

// For linear functions of i.i.d. uniform bits, I(K;F) = 0 iff
// rank(K u F) = rank(K) + rank(F); exact, no sampling.
SecrecyAudit verify_secrecy(const ProtocolRun& run);

// JSON report: seed, edge bits, linear forms as index lists, transcript
// attribution, and both verdicts.
std::string serialize_run(const ProtocolRun& run, const Multigraph& g);

} // namespace skc
