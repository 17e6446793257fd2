#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "skc/errors.hpp"

namespace skc {

inline constexpr int kMaxTerminals = 20;

// Subset of the terminal set {1..m} as a bitmask (terminal i <-> bit i-1).
// The universal index type for A, B, T throughout the toolkit.
struct TerminalSet {
    std::uint32_t bits = 0;
    int m = 0;

    TerminalSet() = default;
    TerminalSet(std::uint32_t bits_, int m_) : bits(bits_), m(m_) {
        if (m_ < 1 || m_ > kMaxTerminals)
            throw DomainError("terminal count must be in 1.." + std::to_string(kMaxTerminals));
        if (bits_ >= (1u << m_)) throw DomainError("subset out of range for m");
    }

    static TerminalSet full(int m) { return TerminalSet((1u << m) - 1, m); }
    static TerminalSet empty_set(int m) { return TerminalSet(0, m); }
    static TerminalSet single(int terminal, int m) {
        if (terminal < 1 || terminal > m) throw DomainError("terminal index out of range");
        return TerminalSet(1u << (terminal - 1), m);
    }
    static TerminalSet of(std::initializer_list<int> terminals, int m) {
        std::uint32_t b = 0;
        for (int t : terminals) {
            if (t < 1 || t > m) throw DomainError("terminal index out of range");
            b |= 1u << (t - 1);
        }
        return TerminalSet(b, m);
    }

    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int terminal) const { return (bits >> (terminal - 1)) & 1u; }
    bool is_subset_of(TerminalSet o) const { return (bits & ~o.bits) == 0; }
    bool intersects(TerminalSet o) const { return (bits & o.bits) != 0; }
    bool is_full() const { return bits == (1u << m) - 1; }

    TerminalSet complement() const { return TerminalSet(~bits & ((1u << m) - 1), m); }
    TerminalSet unite(TerminalSet o) const { return TerminalSet(bits | o.bits, m); }
    TerminalSet intersect(TerminalSet o) const { return TerminalSet(bits & o.bits, m); }
    TerminalSet minus(TerminalSet o) const { return TerminalSet(bits & ~o.bits, m); }
    TerminalSet with(int terminal) const { return TerminalSet(bits | (1u << (terminal - 1)), m); }
    TerminalSet without(int terminal) const { return TerminalSet(bits & ~(1u << (terminal - 1)), m); }

    // 1-indexed members, ascending.
    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 1; i <= m; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    int min_member() const {
        if (empty()) throw DomainError("min_member of empty set");
        return std::countr_zero(bits) + 1;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : members()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const TerminalSet& o) const { return bits == o.bits && m == o.m; }
    bool operator!=(const TerminalSet& o) const { return !(*this == o); }
    bool operator<(const TerminalSet& o) const { return bits < o.bits; }
};

// All nonempty proper subsets of {1..m}, ascending mask order.
inline std::vector<TerminalSet> proper_subsets(int m) {
    std::vector<TerminalSet> out;
    for (std::uint32_t b = 1; b + 1 < (1u << m); ++b) out.emplace_back(b, m);
    return out;
}

// Omega of the singleton-minimizer test: subsets B with 1 <= |B| <= m-2,
// ordered by cardinality then lexicographically on the member tuple, so
// failure reports are deterministic.
std::vector<TerminalSet> omega_sets(int m);

} // namespace skc
