#pragma once

#include <vector>

#include "skc/linprog.hpp"
#include "skc/source.hpp"

namespace skc {

// Rate region for SK generation with only the terminals in T talking. Variables are (R_i : i in T) in ascending terminal order.
// Full form: one row per B proper in M with B n T nonempty,
//   sum_{i in B n T} R_i >= H(X_{B n T} | X_{B^c});
// duplicate supports are deduplicated keeping the largest right-hand side.
// Reduced form (only for |T| = m-1, T = M \ {u}):
//   sum_{i in B} R_i >= H(X_B | X_{T\B}) for nonempty B proper in T, plus
//   sum_{i in T} R_i >= H(X_T | X_u).
// Float entropies enter the LP through the scaled-rational lift.
LinearProgram rt_constraints(const Source& source, TerminalSet T, bool reduced);

// R_T^(min): the LP optimum over the region above.
Value rt_min(const Source& source, TerminalSet T, bool reduced = false);

// I_T(X_M) = H(X_T) - R_T^(min); the largest SK rate with M\T silent.
Value silent_capacity(const Source& source, TerminalSet T);

// (1/(m-2)) sum_{j in T} H(X_{T\{j}} | X_j); lower-bounds R_T^(min).
// Requires |T| = m-1, m >= 3.
Value rt_min_lower_bound(const Source& source, TerminalSet T);

// Delta_T(S) = (1/(m-2)) [sum_{i in T} H(X_i) - H(X_T)]; upper-bounds
// silent_capacity. Requires |T| = m-1, m >= 3.
Value delta_t_singleton(const Source& source, TerminalSet T);

struct SilentTerminalRow {
    int silent_terminal = 0; // u, with T = M \ {u}
    Value capacity;          // I_T(X_M)
    Value gap;               // I(X_M) - I_T(X_M)
    Value rt_min;            // LP optimum
    Value rt_lower_bound;    // the (1/(m-2)) sum bound
    Value delta_t;           // Delta_T(S)
};

struct SilentReport {
    Value capacity; // I(X_M)
    std::vector<SilentTerminalRow> rows;
    bool omnivocality_required = false;
    std::vector<int> may_stay_silent; // terminals u with zero gap
    bool classification_consistent = true; // strict Type S => omnivocal; iff at m=3
};

// Exact-LP omniscience over all (m-1)-subsets: omnivocality is required
// iff every silent-terminal capacity sits strictly below I(X_M).
// Requires 3 <= m <= 10. For exact sources a violated cross-check against
// the Type S classification throws; float sources record it in the report.
SilentReport omnivocality_report(const Source& source);

} // namespace skc
