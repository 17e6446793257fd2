#include "skc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "skc/errors.hpp"

namespace skc {

std::string Partition::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += blocks[i].str();
    }
    return s + "}";
}

bool Partition::operator==(const Partition& o) const {
    if (m != o.m || blocks.size() != o.blocks.size()) return false;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].bits != o.blocks[i].bits) return false;
    return true;
}

Partition make_partition(std::vector<TerminalSet> blocks) {
    if (blocks.empty()) throw DomainError("partition needs at least one block");
    int m = blocks.front().m;
    std::uint32_t seen = 0;
    for (const auto& b : blocks) {
        if (b.m != m) throw DomainError("partition blocks disagree on m");
        if (b.empty()) throw DomainError("partition block is empty");
        if (b.bits & seen) throw DomainError("partition blocks overlap");
        seen |= b.bits;
    }
    if (seen != (1u << m) - 1) throw DomainError("partition does not cover {1..m}");
    std::sort(blocks.begin(), blocks.end(),
              [](const TerminalSet& a, const TerminalSet& b) {
                  return a.min_member() < b.min_member();
              });
    return Partition{std::move(blocks), m};
}

Partition singleton_partition(int m) {
    std::vector<TerminalSet> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back(TerminalSet::single(i, m));
    return Partition{std::move(blocks), m};
}

Partition restricted_partition(int m, TerminalSet B) {
    if (B.empty()) throw DomainError("restricted partition needs nonempty B");
    if (B.m != m) throw DomainError("B built for a different terminal count");
    if (B.count() > m - 1) throw DomainError("restricted partition needs |B| <= m-1");
    std::vector<TerminalSet> blocks;
    blocks.push_back(B.complement());
    for (int b : B.members()) blocks.push_back(TerminalSet::single(b, m));
    return make_partition(std::move(blocks));
}

void for_each_partition(int m, const std::function<void(const Partition&)>& fn) {
    if (m < 1) throw DomainError("need at least one terminal");
    if (m > 12)
        throw DomainError("partition enumeration capped at m = 12 (Bell numbers explode); "
                          "use the singleton-minimizer scan for larger models");
    if (m == 1) return; // no partitions with >= 2 blocks

    // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(m, 0);
    std::vector<int> mx(m, 0); // mx[i] = max(a[0..i-1]); mx[0] = 0 (a[0] fixed)
    Partition scratch;
    scratch.m = m;

    auto emit = [&]() {
        int nblocks = 1 + *std::max_element(a.begin(), a.end());
        if (nblocks < 2) return;
        scratch.blocks.assign(nblocks, TerminalSet::empty_set(m));
        for (int i = 0; i < m; ++i)
            scratch.blocks[a[i]] = scratch.blocks[a[i]].with(i + 1);
        fn(scratch);
    };

    emit();
    while (true) {
        // Advance to the next restricted growth string.
        int i = m - 1;
        while (i > 0 && a[i] == mx[i] + 1) --i;
        if (i == 0) break;
        ++a[i];
        for (int j = i + 1; j < m; ++j) {
            mx[j] = std::max(mx[j - 1], a[j - 1]);
            a[j] = 0;
        }
        emit();
    }
}

std::vector<Partition> enumerate_partitions(int m) {
    std::vector<Partition> out;
    for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace {

// Per-scan memo of subset entropies; partition scans revisit blocks often.
class EntropyMemo {
public:
    explicit EntropyMemo(const Source& s) : source_(s), cache_(1u << s.terminals()) {}

    const Value& get(TerminalSet A) {
        auto& slot = cache_[A.bits];
        if (!slot.second) {
            slot.first = source_.entropy(A);
            slot.second = true;
        }
        return slot.first;
    }

private:
    const Source& source_;
    std::vector<std::pair<Value, bool>> cache_;
};

Value delta_with(EntropyMemo& memo, const Partition& p, const Value& h_full) {
    Value sum;
    for (const auto& block : p.blocks) sum += memo.get(block);
    return (sum - h_full) / Value::rational(static_cast<long>(p.size()) - 1);
}

} // namespace

Value delta(const Source& source, const Partition& partition) {
    if (partition.size() < 2) throw DomainError("delta needs a partition with >= 2 blocks");
    if (partition.m != source.terminals())
        throw DomainError("partition built for a different terminal count");
    EntropyMemo memo(source);
    return delta_with(memo, partition, memo.get(TerminalSet::full(source.terminals())));
}

MultiInfoReport multipartite_info(const Source& source) {
    const int m = source.terminals();
    if (m < 2) throw DomainError("multipartite information needs m >= 2");
    EntropyMemo memo(source);
    const Value h_full = memo.get(TerminalSet::full(m));

    MultiInfoReport report;
    bool have_min = false;
    Value min_value;
    for_each_partition(m, [&](const Partition& p) {
        Value d = delta_with(memo, p, h_full);
        if (!have_min || d < min_value) {
            min_value = d;
            have_min = true;
        }
        if (p.is_singleton_partition()) report.delta_singleton = d;
    });
    if (!have_min) throw InternalError("no partition visited");
    report.value = min_value;

    // Second pass: collect every minimizer (entropies are memoized, so this
    // is cheap) and, for float sources, spot near-misses just outside the
    // tolerance band.
    double near_miss = std::numeric_limits<double>::infinity();
    for_each_partition(m, [&](const Partition& p) {
        Value d = delta_with(memo, p, h_full);
        if (d == min_value) report.argmin.push_back(p);
        else if (!min_value.is_exact())
            near_miss = std::min(near_miss, std::abs(d.to_double() - min_value.to_double()));
    });
    if (!min_value.is_exact()) {
        double tol = min_value.tolerance() > 0 ? min_value.tolerance() : Value::kDefaultTolerance;
        report.tie_sensitive = near_miss <= 2 * tol;
    }
    return report;
}

const char* verdict_name(TypeSVerdict v) {
    switch (v) {
        case TypeSVerdict::NotTypeS: return "NotTypeS";
        case TypeSVerdict::TypeS: return "TypeS";
        case TypeSVerdict::StrictTypeS: return "StrictTypeS";
    }
    return "?";
}

namespace {

ClassifyReport classify_from_deltas(
    int m, const Value& delta_s,
    const std::function<Value(TerminalSet)>& delta_pb) {
    ClassifyReport report;
    report.delta_singleton = delta_s;
    bool have = false;
    for (const auto& B : omega_sets(m)) {
        Value margin = delta_pb(B) - delta_s;
        if (!have || margin < report.margin) {
            report.margin = margin;
            report.worst_b = B;
            have = true;
        }
    }
    if (!have) throw InternalError("empty Omega scan");
    int sign = report.margin.sign();
    report.verdict = sign < 0   ? TypeSVerdict::NotTypeS
                     : sign > 0 ? TypeSVerdict::StrictTypeS
                                : TypeSVerdict::TypeS;
    report.tie = !report.margin.is_exact() && sign == 0;
    return report;
}

} // namespace

ClassifyReport classify_type_s(const Source& source) {
    const int m = source.terminals();
    if (m < 3) throw DomainError("Type S classification needs m >= 3");
    EntropyMemo memo(source);
    const Value h_full = memo.get(TerminalSet::full(m));
    Partition s = singleton_partition(m);
    Value delta_s = delta_with(memo, s, h_full);
    return classify_from_deltas(m, delta_s, [&](TerminalSet B) {
        Partition pb = restricted_partition(m, B);
        return delta_with(memo, pb, h_full);
    });
}

ClassifyReport pin_singleton_check(const PinSource& pin) {
    const int m = pin.terminals();
    if (m < 3) throw DomainError("Type S classification needs m >= 3");
    const auto& g = pin.graph();
    const int t = g.uniformity();
    if (t < 1) throw DomainError("singleton check requires a t-uniform PIN model");

    const long total = g.edge_count();
    Value delta_s = Value::rational(static_cast<long>(t - 1) * total, m - 1);
    return classify_from_deltas(m, delta_s, [&](TerminalSet B) {
        // P_B(e) = blocks of P_B meeting e: the B^c block (if touched) plus
        // one singleton per member of e in B.
        long crossing = 0;
        for (const auto& e : g.edges()) {
            int parts = std::popcount(e.members.bits & B.bits);
            if (e.members.bits & ~B.bits) ++parts;
            crossing += e.multiplicity * (parts - 1);
        }
        return Value::rational(crossing, B.count());
    });
}

Value FractionalPartition::weight(TerminalSet B) const {
    auto it = weights.find(B.bits);
    return it == weights.end() ? Value() : it->second;
}

FractionalPartition fractional_partition_of(const Partition& partition) {
    if (partition.size() < 2)
        throw DomainError("fractional partition needs |P| >= 2");
    FractionalPartition fp;
    fp.m = partition.m;
    Value w = Value::rational(1, static_cast<long>(partition.size()) - 1);
    for (const auto& block : partition.blocks)
        fp.weights[block.complement().bits] = w;
    return fp;
}

FunctionL constant_function(const PmfSource& s) {
    return FunctionL{std::vector<int>(s.table_size(), 0)};
}

FunctionL identity_function(const PmfSource& s) {
    FunctionL L;
    L.labels.resize(s.table_size());
    for (std::size_t i = 0; i < L.labels.size(); ++i) L.labels[i] = static_cast<int>(i);
    return L;
}

namespace {

void check_function(const PmfSource& s, const FunctionL& L) {
    if (L.labels.size() != s.table_size())
        throw DomainError("function table does not match the joint alphabet");
}

double entropy_of_groups(const std::map<std::pair<std::uint64_t, int>, double>& groups) {
    double h = 0.0;
    for (const auto& [key, p] : groups)
        if (p > 0) h -= p * std::log2(p);
    return h;
}

// H(X_A, L) with A allowed to be empty (then it is just H(L)).
double joint_entropy_with_function(const PmfSource& s, TerminalSet A, const FunctionL& L) {
    std::map<std::pair<std::uint64_t, int>, double> groups;
    const auto& probs = s.probs();
    for (std::size_t pt = 0; pt < probs.size(); ++pt) {
        if (probs[pt] <= 0) continue;
        std::uint64_t key = A.empty() ? 0 : s.project(pt, A);
        groups[{key, L.labels[pt]}] += probs[pt];
    }
    return entropy_of_groups(groups);
}

} // namespace

double entropy_of_function(const PmfSource& s, const FunctionL& L) {
    check_function(s, L);
    return joint_entropy_with_function(s, TerminalSet::empty_set(s.terminals()), L);
}

double cond_entropy_given_function(const PmfSource& s, TerminalSet A, const FunctionL& L) {
    check_function(s, L);
    if (A.empty()) throw DomainError("conditional entropy of empty set");
    return joint_entropy_with_function(s, A, L) - entropy_of_function(s, L);
}

double cond_entropy_of_function(const PmfSource& s, const FunctionL& L, TerminalSet B) {
    check_function(s, L);
    if (B.empty()) return entropy_of_function(s, L);
    return joint_entropy_with_function(s, B, L) - s.entropy(B).to_double();
}

Value delta_given_function(const PmfSource& s, const Partition& p, const FunctionL& L) {
    check_function(s, L);
    if (p.size() < 2) throw DomainError("delta needs a partition with >= 2 blocks");
    double sum = 0.0;
    for (const auto& block : p.blocks) sum += cond_entropy_given_function(s, block, L);
    double full = cond_entropy_given_function(s, TerminalSet::full(s.terminals()), L);
    return Value::real((sum - full) / (static_cast<double>(p.size()) - 1), s.tolerance());
}

ConditionalMultiInfo conditional_multipartite_info(const PmfSource& s, const FunctionL& L) {
    check_function(s, L);
    if (s.terminals() > 8)
        throw DomainError("conditional multipartite information capped at m = 8");
    MultiInfoReport mi = multipartite_info(s);
    ConditionalMultiInfo out;
    bool have = false;
    for (const auto& p : mi.argmin) {
        Value d = delta_given_function(s, p, L);
        if (!have || d > out.value) {
            out.value = d;
            out.argmax = p;
            have = true;
        }
    }
    if (!have) throw InternalError("argmin set was empty");
    return out;
}

} // namespace skc
