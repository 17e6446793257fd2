#pragma once

#include <string>
#include <vector>

#include "skc/partition.hpp"
#include "skc/source.hpp"

namespace skc {

// All t-subsets of {1..m} as ascending tuples in lexicographic order,
// indexed 1..C(m,t).
struct LexOrder {
    int m = 0, t = 0;
    std::vector<std::vector<int>> edges; // edges[j-1] = j-th tuple

    // 1-based index of a tuple; DomainError when absent.
    int index_of(const std::vector<int>& tuple) const;
};

LexOrder lex_index(int m, int t);

// Splits E_i (edges containing i) into E_{>=i} (no member below i) and
// E_{!>i} (some member below i). Returns 1-based edge indices.
struct EdgeClasses {
    std::vector<int> geq; // E_{>=i}
    std::vector<int> ngtr; // E_{!>i}
};

EdgeClasses edge_classes(int m, int t, int i);

// One donated term: the Q_{e_j} produced by row k, handed to receiver R(i).
struct Allocation {
    int receiver = 0;   // i, with m-t+2 <= i <= m
    int edge_index = 0; // j
    int donor = 0;      // k, with 2 <= k <= m-t+1
};

struct AllocationTable {
    int m = 0, t = 0;
    bool error = false;        // the declared ERROR branch was reached
    std::string error_detail;
    std::vector<Allocation> log;
    // Availability tables T(k,j), rows k = 2..m-t+1, columns j = 1..C(m,t).
    std::vector<std::vector<int>> initial_table;
    std::vector<std::vector<int>> final_table;
};

// Literal execution of the allocation algorithm, ERROR branch included:
// receivers in ascending i, edges in ascending j, donor = smallest
// available k.
AllocationTable run_allocation(int m, int t);

struct ClaimsReport {
    int m = 0, t = 0;
    bool no_error = false;
    long total_allocations = 0;
    long expected_total = 0;   // (t-1) C(m-1, t)
    bool per_receiver_ok = false; // each R(i): exactly C(m-1,t) terms, all i not in e
    bool table_exhausted = false; // final availability all zero
    bool passed = false;
};

ClaimsReport verify_claims(int m, int t);

// Renders the allocation as donor -> receiver tables in text.
std::string render_allocation(const AllocationTable& table);

// Checks sum_i I(X_i; L) <= t H(L) for a t-uniform PIN model and a
// function L of the edge bits. `edge_labels` is indexed by the edge-bit
// assignment mask (edge instances in document order, multiplicity copies
// consecutive); needs 2^bits table entries, bits <= 20.
struct MiBoundCheck {
    double lhs = 0.0; // sum_i I(X_i; L)
    double rhs = 0.0; // t H(L)
    bool holds = false;
};

MiBoundCheck mi_bound_check(const PinSource& pin, const std::vector<int>& edge_labels);

// Checks the decomposition
//   I(X_M) = I(X_M|L) + H(L) - sum_B lambda*_B H(L | X_{B^c})
// with lambda* built from the partition attaining the conditional
// multipartite information. Requires m <= 8.
struct CiIdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

CiIdentityCheck ci_identity_check(const PmfSource& source, const FunctionL& L);

} // namespace skc
