#pragma once

#include <functional>
#include <map>
#include <vector>

#include "skc/source.hpp"
#include "skc/terminal_set.hpp"
#include "skc/value.hpp"

namespace skc {

// Partition of {1..m} into nonempty disjoint blocks covering everything.
// Canonical block order: the block containing the smallest terminal not
// yet placed comes first.
struct Partition {
    std::vector<TerminalSet> blocks;
    int m = 0;

    std::size_t size() const { return blocks.size(); }
    bool is_singleton_partition() const { return blocks.size() == static_cast<std::size_t>(m); }
    std::string str() const;

    bool operator==(const Partition& o) const;
};

// Validates the block structure and sorts into canonical order.
Partition make_partition(std::vector<TerminalSet> blocks);

Partition singleton_partition(int m);

// P_B = {B^c} u {{b} : b in B}. Requires B nonempty with |B| <= m-1;
// collapses to the singleton partition when |B| = m-1.
Partition restricted_partition(int m, TerminalSet B);

// Visits every partition with >= 2 blocks exactly once, in restricted-
// growth-string order. The Partition reference is reused between calls;
// copy it to keep it. Requires m <= 12 (Bell numbers explode beyond).
void for_each_partition(int m, const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(int m);

// Delta(P) = [sum_A H(X_A) - H(X_M)] / (|P|-1), the partition functional
// whose minimum is the multipartite information.
Value delta(const Source& source, const Partition& partition);

struct MultiInfoReport {
    Value value;                   // I(X_M) = min Delta(P)
    std::vector<Partition> argmin; // every minimizer, enumeration order
    Value delta_singleton;
    bool tie_sensitive = false;    // float sources: near-misses just outside tolerance
};

// Brute-force minimization over the partition lattice (m <= 12).
MultiInfoReport multipartite_info(const Source& source);

enum class TypeSVerdict { NotTypeS, TypeS, StrictTypeS };

const char* verdict_name(TypeSVerdict v);

struct ClassifyReport {
    TypeSVerdict verdict = TypeSVerdict::NotTypeS;
    Value margin;          // min over Omega of Delta(P_B) - Delta(S)
    bool tie = false;      // float sources: |margin| within tolerance
    TerminalSet worst_b;   // first B attaining the margin (|B| then lex order)
    Value delta_singleton;
};

// Singleton-minimizer test over the 2^m - m - 2 sets of Omega.
// StrictTypeS iff margin > 0, TypeS iff margin = 0, NotTypeS otherwise.
ClassifyReport classify_type_s(const Source& source);

// Same verdict for t-uniform PIN models via the crossing-count form:
// Delta(P_B) = sum_e mult(e)[P_B(e)-1] / |B| against (t-1)|E|/(m-1).
ClassifyReport pin_singleton_check(const PinSource& pin);

// Weights lambda_B >= 0 on proper subsets with sum_{B: i in B} lambda_B = 1
// for every terminal i.
struct FractionalPartition {
    std::map<std::uint32_t, Value> weights;
    int m = 0;

    Value weight(TerminalSet B) const;
};

// lambda^(P): 1/(|P|-1) on complements of blocks, 0 elsewhere.
FractionalPartition fractional_partition_of(const Partition& partition);

// Finite-valued function of the joint outcome of a pmf source, tabulated
// over the joint alphabet (row-major index, same as the probs table).
struct FunctionL {
    std::vector<int> labels;
};

FunctionL constant_function(const PmfSource& s);
FunctionL identity_function(const PmfSource& s);

double entropy_of_function(const PmfSource& s, const FunctionL& L);                    // H(L)
double cond_entropy_given_function(const PmfSource& s, TerminalSet A, const FunctionL& L); // H(X_A|L)
double cond_entropy_of_function(const PmfSource& s, const FunctionL& L, TerminalSet B);    // H(L|X_B)

// Delta(P|L) = [sum_A H(X_A|L) - H(X_M|L)] / (|P|-1).
Value delta_given_function(const PmfSource& s, const Partition& p, const FunctionL& L);

struct ConditionalMultiInfo {
    Value value;        // I(X_M|L): max of Delta(P*|L) over the argmin set
    Partition argmax;   // a P* attaining it (first in enumeration order)
};

// Conditional multipartite information: the inner maximum runs over the
// complete argmin list of the unconditioned problem. Requires m <= 8.
ConditionalMultiInfo conditional_multipartite_info(const PmfSource& s, const FunctionL& L);

} // namespace skc
