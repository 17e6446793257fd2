#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "skc/hypergraph.hpp"
#include "skc/terminal_set.hpp"
#include "skc/value.hpp"

namespace skc {

// Entropy oracle every other module consumes. Implementations are
// immutable after construction; all queries are const and thread-safe.
class Source {
public:
    virtual ~Source() = default;

    virtual int terminals() const = 0;

    // H(X_A) in bits. A must be nonempty.
    virtual Value entropy(TerminalSet A) const = 0;

protected:
    void check_subset(TerminalSet A) const;
};

using SourcePtr = std::shared_ptr<const Source>;

// H(X_A | X_B) = H(X_{A u B}) - H(X_B). A nonempty, disjoint from B.
Value conditional_entropy(const Source& s, TerminalSet A, TerminalSet B);

// I(X_A ; X_B) = H(A) + H(B) - H(A u B). A, B nonempty and disjoint.
Value mutual_information(const Source& s, TerminalSet A, TerminalSet B);

// Hyperedge PIN model: one independent uniform bit per edge copy, seen by
// exactly the edge's members. Entropies are exact integers:
// H(X_A) = sum of multiplicities over edges meeting A.
class PinSource : public Source {
public:
    explicit PinSource(Hypergraph graph);

    int terminals() const override { return graph_.terminals(); }
    Value entropy(TerminalSet A) const override;

    const Hypergraph& graph() const { return graph_; }

private:
    Hypergraph graph_;
};

// Explicit joint pmf over a product alphabet. probs is row-major with the
// last terminal's symbol varying fastest.
class PmfSource : public Source {
public:
    PmfSource(int m, std::vector<int> alphabet_sizes, std::vector<double> probs,
              double tolerance = Value::kDefaultTolerance);

    int terminals() const override { return m_; }
    Value entropy(TerminalSet A) const override;

    const std::vector<int>& alphabet_sizes() const { return alphabets_; }
    const std::vector<double>& probs() const { return probs_; }
    double tolerance() const { return tol_; }

    std::size_t table_size() const { return probs_.size(); }

    // Symbol of terminal i (1-indexed) at joint table index `point`.
    int symbol_at(std::size_t point, int terminal) const;

    // Marginal over A: map from projected key to probability mass.
    // Projected key = symbols of A packed by the same row-major rule.
    std::map<std::uint64_t, double> marginal(TerminalSet A) const;

    std::uint64_t project(std::size_t point, TerminalSet A) const;

private:
    int m_;
    std::vector<int> alphabets_;
    std::vector<double> probs_;
    std::vector<std::size_t> strides_;
    double tol_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::uint32_t, double> entropy_cache_;
};

// Two independent sources observed jointly: Z_i = (X_i, Y_i).
// H_Z(A) = H_X(A) + H_Y(A) for every A.
class ClubbedSource : public Source {
public:
    ClubbedSource(SourcePtr left, SourcePtr right);

    int terminals() const override { return left_->terminals(); }
    Value entropy(TerminalSet A) const override;

    const SourcePtr& left() const { return left_; }
    const SourcePtr& right() const { return right_; }

private:
    SourcePtr left_;
    SourcePtr right_;
};

std::shared_ptr<const ClubbedSource> club(SourcePtr left, SourcePtr right);

// Explodes a PIN model into the equivalent joint pmf. Terminal i's symbol
// packs its incident edge-instance bits, lowest instance id in bit 0 (edge
// instances ordered by edge list position, multiplicity copies consecutive).
// Guarded by product alphabet <= 2^20 entries.
std::shared_ptr<const PmfSource> expand_to_pmf(const PinSource& pin);

// Same source with the float comparison tolerance replaced; pmf sources
// are rebuilt, exact ones pass through.
SourcePtr with_tolerance(const SourcePtr& source, double tolerance);

} // namespace skc
