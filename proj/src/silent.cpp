#include "skc/silent.hpp"

#include <map>

#include "skc/partition.hpp"

namespace skc {

namespace {

// Entropies enter every LP as exact rationals: floats via the 2^40 lift.
Value lift(const Value& v) { return Value::rational(v.lifted()); }

// Matches the result kind to the source: exact stays exact, float sources
// get their tolerance back so comparisons behave as callers expect.
Value match_kind(const Value& exact_result, bool source_exact, double tol) {
    if (source_exact) return exact_result;
    return Value::real(exact_result.to_double(), tol);
}

std::vector<int> var_index(TerminalSet T, int m) {
    std::vector<int> idx(m + 1, -1);
    int next = 0;
    for (int i = 1; i <= m; ++i)
        if (T.contains(i)) idx[i] = next++;
    return idx;
}

} // namespace

LinearProgram rt_constraints(const Source& source, TerminalSet T, bool reduced) {
    const int m = source.terminals();
    if (T.empty()) throw DomainError("T must be nonempty");
    if (T.m != m) throw DomainError("T built for a different terminal count");

    const auto idx = var_index(T, m);
    LinearProgram lp;
    lp.vars = static_cast<std::size_t>(T.count());
    lp.objective.assign(lp.vars, Value::rational(1));

    auto emit = [&](TerminalSet support, Value bound) {
        std::vector<Value> row(lp.vars, Value::rational(0));
        for (int i : support.members()) row[static_cast<std::size_t>(idx[i])] = Value::rational(1);
        lp.add_row(std::move(row), std::move(bound));
    };

    if (reduced) {
        if (T.count() != m - 1)
            throw DomainError("reduced region form is valid only for |T| = m-1");
        int u = T.complement().min_member();
        for (std::uint32_t bits = 1; bits < T.bits; ++bits) {
            if (bits & ~T.bits) continue;
            TerminalSet B(bits, m);
            if (B.bits == T.bits) continue;
            emit(B, lift(conditional_entropy(source, B, T.minus(B))));
        }
        emit(T, lift(conditional_entropy(source, T, TerminalSet::single(u, m))));
        return lp;
    }

    // Full form, deduplicated per support with the strongest bound kept.
    std::map<std::uint32_t, mpq_class> best;
    for (std::uint32_t bits = 1; bits + 1 < (1u << m); ++bits) {
        TerminalSet B(bits, m);
        TerminalSet support = B.intersect(T);
        if (support.empty()) continue;
        mpq_class bound = conditional_entropy(source, support, B.complement()).lifted();
        auto it = best.find(support.bits);
        if (it == best.end() || bound > it->second) best[support.bits] = bound;
    }
    for (const auto& [bits, bound] : best)
        emit(TerminalSet(bits, m), Value::rational(bound));
    return lp;
}

Value rt_min(const Source& source, TerminalSet T, bool reduced) {
    return simplex_min(rt_constraints(source, T, reduced)).optimum;
}

Value silent_capacity(const Source& source, TerminalSet T) {
    bool exact = source.entropy(TerminalSet::full(source.terminals())).is_exact();
    Value h_t = source.entropy(T);
    Value result = lift(h_t) - rt_min(source, T, false);
    return match_kind(result, exact, h_t.tolerance());
}

namespace {

void check_m_minus_one(const Source& source, TerminalSet T, const char* op) {
    const int m = source.terminals();
    if (m < 3) throw DomainError(std::string(op) + " needs m >= 3");
    if (T.m != m || T.count() != m - 1)
        throw DomainError(std::string(op) + " needs |T| = m-1");
}

} // namespace

Value rt_min_lower_bound(const Source& source, TerminalSet T) {
    check_m_minus_one(source, T, "rt_min_lower_bound");
    Value sum;
    for (int j : T.members())
        sum += conditional_entropy(source, T.without(j), TerminalSet::single(j, source.terminals()));
    return sum / Value::rational(source.terminals() - 2);
}

Value delta_t_singleton(const Source& source, TerminalSet T) {
    check_m_minus_one(source, T, "delta_t_singleton");
    Value sum;
    for (int i : T.members()) sum += source.entropy(TerminalSet::single(i, source.terminals()));
    return (sum - source.entropy(T)) / Value::rational(source.terminals() - 2);
}

SilentReport omnivocality_report(const Source& source) {
    const int m = source.terminals();
    if (m < 3) throw DomainError("omnivocality analysis requires m >= 3");
    if (m > 10) throw DomainError("omnivocality analysis capped at m = 10");

    const bool exact = source.entropy(TerminalSet::full(m)).is_exact();
    const double tol = source.entropy(TerminalSet::full(m)).tolerance();

    SilentReport report;
    report.capacity = multipartite_info(source).value;
    Value capacity_lifted = Value::rational(report.capacity.lifted());

    report.omnivocality_required = true;
    for (int u = 1; u <= m; ++u) {
        TerminalSet T = TerminalSet::full(m).without(u);
        SilentTerminalRow row;
        row.silent_terminal = u;
        row.rt_min = match_kind(rt_min(source, T, false), exact, tol);
        row.capacity = silent_capacity(source, T);
        Value gap_exact = capacity_lifted - Value::rational(row.capacity.lifted());
        row.gap = match_kind(gap_exact, exact, tol);
        row.rt_lower_bound = rt_min_lower_bound(source, T);
        row.delta_t = delta_t_singleton(source, T);
        if (row.gap.sign() <= 0) {
            report.omnivocality_required = false;
            report.may_stay_silent.push_back(u);
        }
        report.rows.push_back(std::move(row));
    }

    // Cross-checks against the classification theorems: strict Type S
    // forces omnivocality for every m; at m = 3 the implication is an iff.
    ClassifyReport cls = classify_type_s(source);
    if (cls.verdict == TypeSVerdict::StrictTypeS && !cls.tie &&
        !report.omnivocality_required)
        report.classification_consistent = false;
    if (m == 3 && cls.verdict != TypeSVerdict::StrictTypeS && !cls.tie &&
        report.omnivocality_required)
        report.classification_consistent = false;
    if (!report.classification_consistent && exact)
        throw InternalError("omnivocality verdict contradicts the Type S classification");
    return report;
}

} // namespace skc
