#include "skc/certifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "skc/errors.hpp"

namespace skc {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void check_mt(int m, int t, int max_m) {
    if (t < 2 || t > m || m > max_m)
        throw DomainError("need 2 <= t <= m <= " + std::to_string(max_m));
}

} // namespace

int LexOrder::index_of(const std::vector<int>& tuple) const {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < edges.size(); ++j)
        if (edges[j] == sorted) return static_cast<int>(j) + 1;
    throw DomainError("tuple is not a t-subset of {1..m}");
}

LexOrder lex_index(int m, int t) {
    check_mt(m, t, 10);
    LexOrder order;
    order.m = m;
    order.t = t;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i + 1;
    while (true) {
        order.edges.push_back(idx);
        int i = t - 1;
        while (i >= 0 && idx[i] == m - (t - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return order;
}

EdgeClasses edge_classes(int m, int t, int i) {
    check_mt(m, t, 10);
    if (i < 1 || i > m) throw DomainError("terminal out of range");
    LexOrder order = lex_index(m, t);
    EdgeClasses classes;
    for (std::size_t j = 0; j < order.edges.size(); ++j) {
        const auto& e = order.edges[j];
        if (std::find(e.begin(), e.end(), i) == e.end()) continue;
        bool smaller = std::any_of(e.begin(), e.end(), [i](int v) { return v < i; });
        (smaller ? classes.ngtr : classes.geq).push_back(static_cast<int>(j) + 1);
    }
    long expect = (i <= m - t + 1) ? binomial(m - i, t - 1) : 0;
    if (static_cast<long>(classes.geq.size()) != expect)
        throw InternalError("|E_{>=i}| does not match the binomial count");
    return classes;
}

AllocationTable run_allocation(int m, int t) {
    check_mt(m, t, 10);
    LexOrder order = lex_index(m, t);
    const int ncols = static_cast<int>(order.edges.size());
    const int first_donor = 2, last_donor = m - t + 1;
    const int nrows = std::max(0, last_donor - first_donor + 1);

    AllocationTable table;
    table.m = m;
    table.t = t;
    // T(k,j) = 1 iff a Q_{e_j} came from Q(k), i.e. e_j is in E_{!>k}.
    table.initial_table.assign(nrows, std::vector<int>(ncols, 0));
    for (int k = first_donor; k <= last_donor; ++k)
        for (int j : edge_classes(m, t, k).ngtr)
            table.initial_table[k - first_donor][j - 1] = 1;
    auto avail = table.initial_table;

    auto contains = [&](int j, int i) {
        const auto& e = order.edges[static_cast<std::size_t>(j - 1)];
        return std::find(e.begin(), e.end(), i) != e.end();
    };

    // Algorithm, executed literally: receivers in ascending i, edges in
    // ascending j, donor = smallest k with T(k,j) = 1; reaching the bottom
    // row without availability declares ERROR and halts.
    for (int i = m - t + 2; i <= m && !table.error; ++i) {
        for (int j = 1; j <= ncols && !table.error; ++j) {
            if (contains(j, i)) continue;
            bool allocated = false;
            for (int k = first_donor; k <= last_donor; ++k) {
                if (avail[k - first_donor][j - 1] == 1) {
                    avail[k - first_donor][j - 1] = 0;
                    table.log.push_back({i, j, k});
                    allocated = true;
                    break;
                }
                if (avail[k - first_donor][j - 1] == 0 && k == last_donor) {
                    table.error = true;
                    table.error_detail = "no available Q term for receiver R(" +
                                         std::to_string(i) + ") at edge index " +
                                         std::to_string(j);
                }
            }
            if (!allocated && nrows == 0) {
                table.error = true;
                table.error_detail = "no donor rows exist";
            }
        }
    }
    table.final_table = std::move(avail);
    return table;
}

ClaimsReport verify_claims(int m, int t) {
    if (t > m - 1) throw DomainError("claims are stated for 2 <= t <= m-1");
    AllocationTable table = run_allocation(m, t);
    LexOrder order = lex_index(m, t);

    ClaimsReport report;
    report.m = m;
    report.t = t;
    report.no_error = !table.error;
    report.total_allocations = static_cast<long>(table.log.size());
    report.expected_total = static_cast<long>(t - 1) * binomial(m - 1, t);

    std::map<int, long> per_receiver;
    bool membership_ok = true;
    for (const auto& a : table.log) {
        ++per_receiver[a.receiver];
        const auto& e = order.edges[static_cast<std::size_t>(a.edge_index - 1)];
        if (std::find(e.begin(), e.end(), a.receiver) != e.end()) membership_ok = false;
    }
    report.per_receiver_ok = membership_ok;
    for (int i = m - t + 2; i <= m; ++i)
        if (per_receiver[i] != binomial(m - 1, t)) report.per_receiver_ok = false;

    report.table_exhausted = true;
    for (const auto& row : table.final_table)
        for (int v : row)
            if (v != 0) report.table_exhausted = false;

    report.passed = report.no_error && report.total_allocations == report.expected_total &&
                    report.per_receiver_ok && report.table_exhausted;
    return report;
}

std::string render_allocation(const AllocationTable& table) {
    LexOrder order = lex_index(table.m, table.t);
    std::ostringstream os;
    os << "allocation for m=" << table.m << ", t=" << table.t << "\n";
    if (table.error) {
        os << "ERROR: " << table.error_detail << "\n";
        return os.str();
    }
    auto tuple_str = [&](int j) {
        std::string s = "(";
        for (int v : order.edges[static_cast<std::size_t>(j - 1)]) s += std::to_string(v);
        return s + ")";
    };
    for (int i = table.m - table.t + 2; i <= table.m; ++i) {
        os << "R(" << i << ") <-";
        for (const auto& a : table.log)
            if (a.receiver == i)
                os << " Q_" << tuple_str(a.edge_index) << "[from Q(" << a.donor << ")]";
        os << "\n";
    }
    return os.str();
}

namespace {

double entropy_of_counts(const std::map<std::uint64_t, long>& counts, double total) {
    double h = 0.0;
    for (const auto& [key, c] : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

} // namespace

MiBoundCheck mi_bound_check(const PinSource& pin, const std::vector<int>& edge_labels) {
    const auto& g = pin.graph();
    const int t = g.uniformity();
    if (t < 1) throw DomainError("mutual-information bound requires a t-uniform PIN model");

    std::vector<TerminalSet> instances;
    for (const auto& e : g.edges())
        for (long c = 0; c < e.multiplicity; ++c) instances.push_back(e.members);
    const std::size_t bits = instances.size();
    if (bits > 20) throw DomainError("bound check limited to 20 edge bits");
    const std::size_t space = std::size_t{1} << bits;
    if (edge_labels.size() != space)
        throw DomainError("edge function table must cover all 2^bits assignments");

    std::vector<std::uint32_t> incident(static_cast<std::size_t>(g.terminals()) + 1, 0);
    for (std::size_t b = 0; b < bits; ++b)
        for (int i = 1; i <= g.terminals(); ++i)
            if (instances[b].contains(i)) incident[static_cast<std::size_t>(i)] |= 1u << b;

    const double total = static_cast<double>(space);
    std::map<std::uint64_t, long> label_counts;
    for (std::size_t a = 0; a < space; ++a)
        ++label_counts[static_cast<std::uint64_t>(edge_labels[a])];
    const double h_l = entropy_of_counts(label_counts, total);

    MiBoundCheck check;
    check.rhs = t * h_l;
    for (int i = 1; i <= g.terminals(); ++i) {
        const std::uint32_t mask = incident[static_cast<std::size_t>(i)];
        std::map<std::uint64_t, long> joint;
        for (std::size_t a = 0; a < space; ++a) {
            std::uint64_t key = (static_cast<std::uint64_t>(a & mask) << 32) |
                                static_cast<std::uint64_t>(edge_labels[a]);
            ++joint[key];
        }
        double h_xi = static_cast<double>(std::popcount(mask));
        double h_joint = entropy_of_counts(joint, total);
        check.lhs += h_xi + h_l - h_joint;
    }
    check.holds = check.lhs <= check.rhs + 1e-9;
    return check;
}

CiIdentityCheck ci_identity_check(const PmfSource& source, const FunctionL& L) {
    if (source.terminals() > 8) throw DomainError("identity check capped at m = 8");
    CiIdentityCheck check;
    check.lhs = multipartite_info(source).value.to_double();

    ConditionalMultiInfo cond = conditional_multipartite_info(source, L);
    FractionalPartition lambda = fractional_partition_of(cond.argmax);
    double correction = 0.0;
    for (const auto& [bits, weight] : lambda.weights) {
        TerminalSet B(bits, source.terminals());
        correction +=
            weight.to_double() * cond_entropy_of_function(source, L, B.complement());
    }
    check.rhs = cond.value.to_double() + entropy_of_function(source, L) - correction;
    check.residual = check.lhs - check.rhs;
    return check;
}

} // namespace skc
