#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skc/partition.hpp"
#include "skc/source.hpp"

namespace skc {

// SK capacity C(M) = I(X_M), by partition minimization (m <= 12).
Value sk_capacity(const Source& source);

// Minimum omniscience rate R_CO = H(X_M) - I(X_M).
Value r_co(const Source& source);

// The same optimum through the omniscience-region linear program
//   min sum R_i s.t. sum_{i in B} R_i >= H(X_B | X_{B^c}) for B proper.
// Independent of the partition route; strong duality makes them equal.
// Capped at m = 10 (2^m - 2 constraint rows).
Value r_co_lp(const Source& source);

// R_SK for Type S t-uniform PIN models: (m-t)/(m-1) * |E|, which meets the
// omniscience upper bound. Refuses non-Type-S or non-uniform inputs.
Value r_sk_exact_uniform_pin(const PinSource& pin);

enum class Maximality { Maximal, NotMaximal, Unknown };

const char* maximality_name(Maximality m);

struct RskBound {
    Value value;
    std::string origin;
};

struct RskReport {
    Value capacity;
    Value r_co;
    std::optional<Value> r_sk_exact;
    std::string r_sk_justification;
    std::vector<RskBound> upper_bounds;
    Maximality maximality = Maximality::Unknown;
    std::optional<Value> ci_lower_bound; // CI - I, when CI is pinned exactly
    std::string ci_note;
};

// Graph PIN report: capacity = spanning tree packing rate (cross-checked
// against the partition minimum), bounds |E| - sigma and (m-2) sigma, and
// the graph iff: maximal exactly when Type S.
RskReport graph_rsk_report(const PinSource& pin);

// Report for an arbitrary source; claims r_sk_exact only on the graph /
// uniform-Type-S / two-terminal routes.
RskReport rsk_report(const Source& source);

// Single-spokesman protocol: terminal u broadcasts at rate
// max_{i != u} H(X_u | X_i) so everyone recovers X_u, then key extraction
// yields H(X_u) - rate. Returned only when that rate reaches capacity.
struct SpokesmanBound {
    int terminal = 0;
    Value communication_rate;
    Value sk_rate;
};

std::optional<SpokesmanBound> spokesman_bound(const Source& source);

// Upper bound on R_SK of a clubbed source from running per-component
// protocols side by side. Valid only when the split protocol achieves
// capacity, i.e. the component argmin sets intersect; nullopt otherwise.
std::optional<Value> club_split_bound(const ClubbedSource& source);

} // namespace skc
