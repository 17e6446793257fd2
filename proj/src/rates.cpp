#include "skc/rates.hpp"

#include <algorithm>

#include "skc/errors.hpp"
#include "skc/linprog.hpp"
#include "skc/multigraph.hpp"
#include "skc/silent.hpp"

namespace skc {

Value sk_capacity(const Source& source) { return multipartite_info(source).value; }

Value r_co(const Source& source) {
    return source.entropy(TerminalSet::full(source.terminals())) - sk_capacity(source);
}

Value r_co_lp(const Source& source) {
    const int m = source.terminals();
    if (m > 10) throw DomainError("omniscience LP capped at m = 10");
    // The omniscience region is R_T with T = M.
    Value optimum = rt_min(source, TerminalSet::full(m), false);
    bool exact = source.entropy(TerminalSet::full(m)).is_exact();
    if (exact) return optimum;
    return Value::real(optimum.to_double(),
                       source.entropy(TerminalSet::full(m)).tolerance());
}

Value r_sk_exact_uniform_pin(const PinSource& pin) {
    const int m = pin.terminals();
    const int t = pin.graph().uniformity();
    if (t < 1) throw DomainError("R_SK formula requires a t-uniform PIN model");
    ClassifyReport cls = pin_singleton_check(pin);
    if (cls.verdict == TypeSVerdict::NotTypeS)
        throw DomainError("R_SK formula requires a Type S model; classification is NotTypeS "
                          "(margin " + cls.margin.str() + " at B = " + cls.worst_b.str() + ")");
    return Value::rational(static_cast<long>(m - t) * pin.graph().edge_count(), m - 1);
}

const char* maximality_name(Maximality m) {
    switch (m) {
        case Maximality::Maximal: return "Maximal";
        case Maximality::NotMaximal: return "NotMaximal";
        case Maximality::Unknown: return "Unknown";
    }
    return "?";
}

RskReport graph_rsk_report(const PinSource& pin) {
    if (pin.graph().uniformity() != 2)
        throw DomainError("graph report requires a 2-uniform PIN model");
    const int m = pin.terminals();
    Multigraph g = Multigraph::from_graph(pin.graph());

    RskReport report;
    Value sigma = sigma_rate(g);
    report.capacity = sk_capacity(pin);
    if (report.capacity != sigma)
        throw InternalError("partition minimum disagrees with the tree packing rate");
    report.r_co = Value::rational(g.edge_count()) - sigma;
    report.upper_bounds.push_back({report.r_co, "omniscience rate |E| - sigma"});
    report.upper_bounds.push_back(
        {Value::rational(m - 2) * sigma, "spanning tree protocol rate (m-2) sigma"});

    if (m == 2) {
        // Both terminals see every edge bit, so no communication is needed.
        report.r_sk_exact = Value::rational(0);
        report.r_sk_justification = "two-terminal one-way protocol rate";
        report.maximality =
            report.r_co.sign() == 0 ? Maximality::Maximal : Maximality::NotMaximal;
        return report;
    }

    ClassifyReport cls = pin_singleton_check(pin);
    if (cls.verdict == TypeSVerdict::NotTypeS) {
        // For graphs the Type S condition is necessary, not just sufficient.
        report.maximality = Maximality::NotMaximal;
        report.r_sk_justification =
            "not Type S: R_SK <= (m-2) sigma < R_CO, exact value open";
    } else {
        report.maximality = Maximality::Maximal;
        report.r_sk_exact = report.r_co;
        report.r_sk_justification = "Type S graph PIN: R_SK = R_CO";
        report.ci_lower_bound = report.r_co;
        report.ci_note = "CI(X_M) = H(X_M) for Type S uniform PIN, so CI - I = R_CO";
    }
    return report;
}

std::optional<SpokesmanBound> spokesman_bound(const Source& source) {
    const int m = source.terminals();
    if (m < 2) return std::nullopt;
    Value capacity = sk_capacity(source);
    std::optional<SpokesmanBound> best;
    for (int u = 1; u <= m; ++u) {
        TerminalSet us = TerminalSet::single(u, m);
        Value rate;
        bool first = true;
        for (int i = 1; i <= m; ++i) {
            if (i == u) continue;
            Value h = conditional_entropy(source, us, TerminalSet::single(i, m));
            if (first || h > rate) rate = h;
            first = false;
        }
        Value sk = source.entropy(us) - rate;
        if (sk >= capacity && (!best || rate < best->communication_rate))
            best = SpokesmanBound{u, rate, sk};
    }
    return best;
}

std::optional<Value> club_split_bound(const ClubbedSource& source) {
    MultiInfoReport left = multipartite_info(*source.left());
    MultiInfoReport right = multipartite_info(*source.right());
    bool intersect = false;
    for (const auto& p : left.argmin) {
        if (std::find(right.argmin.begin(), right.argmin.end(), p) != right.argmin.end()) {
            intersect = true;
            break;
        }
    }
    if (!intersect) return std::nullopt;

    auto component_bound = [](const Source& s) {
        Value bound = r_co(s);
        if (auto spokes = spokesman_bound(s); spokes && spokes->communication_rate < bound)
            bound = spokes->communication_rate;
        if (const auto* nested = dynamic_cast<const ClubbedSource*>(&s))
            if (auto split = club_split_bound(*nested); split && *split < bound) bound = *split;
        return bound;
    };
    return component_bound(*source.left()) + component_bound(*source.right());
}

RskReport rsk_report(const Source& source) {
    const int m = source.terminals();
    if (const auto* pin = dynamic_cast<const PinSource*>(&source)) {
        if (pin->graph().uniformity() == 2) return graph_rsk_report(*pin);
        int t = pin->graph().uniformity();
        if (t >= 1 && m >= 3) {
            RskReport report;
            report.capacity = sk_capacity(source);
            report.r_co = r_co(source);
            report.upper_bounds.push_back({report.r_co, "omniscience rate"});
            ClassifyReport cls = pin_singleton_check(*pin);
            if (cls.verdict != TypeSVerdict::NotTypeS) {
                report.r_sk_exact = r_sk_exact_uniform_pin(*pin);
                report.r_sk_justification = "Type S t-uniform PIN: R_SK = R_CO = (m-t)/(m-1)|E|";
                report.maximality = Maximality::Maximal;
                report.ci_lower_bound = report.r_co;
                report.ci_note =
                    "CI(X_M) = H(X_M) for Type S uniform PIN, so CI - I = R_CO";
            } else {
                // Converse beyond graphs is open: no NotMaximal claim.
                report.maximality = Maximality::Unknown;
                report.r_sk_justification = "not Type S; maximality open for t >= 3";
                report.ci_note = "CI(X_M) not computable in general";
            }
            return report;
        }
    }

    RskReport report;
    report.capacity = sk_capacity(source);
    report.r_co = r_co(source);
    report.upper_bounds.push_back({report.r_co, "omniscience rate"});
    report.ci_note = "CI(X_M) not computable in general";

    if (m == 2) {
        Value one_way = std::min(
            conditional_entropy(source, TerminalSet::single(1, 2), TerminalSet::single(2, 2)),
            conditional_entropy(source, TerminalSet::single(2, 2), TerminalSet::single(1, 2)));
        report.r_sk_exact = one_way;
        report.r_sk_justification =
            "two-terminal one-way protocol rate (upper bound achieving capacity; "
            "not the interactive common information characterization)";
        report.maximality =
            one_way < report.r_co ? Maximality::NotMaximal : Maximality::Unknown;
        report.upper_bounds.push_back({one_way, "one-way protocol"});
        return report;
    }

    if (auto spokes = spokesman_bound(source)) {
        report.upper_bounds.push_back(
            {spokes->communication_rate,
             "single-spokesman protocol (terminal " + std::to_string(spokes->terminal) + ")"});
        if (spokes->communication_rate < report.r_co) report.maximality = Maximality::NotMaximal;
    }
    if (const auto* clubbed = dynamic_cast<const ClubbedSource*>(&source)) {
        if (auto split = club_split_bound(*clubbed)) {
            report.upper_bounds.push_back({*split, "split protocol over the clubbed components"});
            if (*split < report.r_co) report.maximality = Maximality::NotMaximal;
        }
    }
    return report;
}

} // namespace skc
