#include "skc/reports.hpp"

#include "skc/certifier.hpp"
#include "skc/errors.hpp"
#include "skc/model_zoo.hpp"
#include "skc/multigraph.hpp"
#include "skc/partition.hpp"
#include "skc/protocol.hpp"
#include "skc/rates.hpp"
#include "skc/silent.hpp"

namespace skc {

using nlohmann::json;

json value_json(const Value& v) {
    json out;
    out["value"] = v.to_double();
    out["exact"] = v.is_exact();
    out["str"] = v.str();
    if (v.is_exact()) {
        const mpq_class& q = v.rational_payload();
        out["num"] = q.get_num().get_str();
        out["den"] = q.get_den().get_str();
    } else {
        out["tol"] = v.tolerance();
    }
    return out;
}

namespace {

json partition_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back(b.members());
    return blocks;
}

constexpr std::size_t kArgminListLimit = 64;

} // namespace

json info_report(const Source& source) {
    const int m = source.terminals();
    json out;
    out["m"] = m;
    json per_terminal = json::array();
    for (int i = 1; i <= m; ++i)
        per_terminal.push_back(value_json(source.entropy(TerminalSet::single(i, m))));
    out["terminal_entropies"] = std::move(per_terminal);
    out["joint_entropy"] = value_json(source.entropy(TerminalSet::full(m)));

    MultiInfoReport mi = multipartite_info(source);
    out["multipartite_info"] = value_json(mi.value);
    out["capacity"] = value_json(mi.value);
    out["r_co"] = value_json(source.entropy(TerminalSet::full(m)) - mi.value);
    out["delta_singleton"] = value_json(mi.delta_singleton);
    out["argmin_count"] = mi.argmin.size();
    json argmin = json::array();
    for (std::size_t i = 0; i < mi.argmin.size() && i < kArgminListLimit; ++i)
        argmin.push_back(partition_json(mi.argmin[i]));
    out["argmin"] = std::move(argmin);
    out["argmin_truncated"] = mi.argmin.size() > kArgminListLimit;
    if (!mi.value.is_exact()) out["tie_sensitive"] = mi.tie_sensitive;
    return out;
}

json classify_report(const Source& source) {
    ClassifyReport cls = classify_type_s(source);
    json out;
    out["verdict"] = verdict_name(cls.verdict);
    out["margin"] = value_json(cls.margin);
    out["tie"] = cls.tie;
    out["worst_b"] = cls.worst_b.members();
    out["delta_singleton"] = value_json(cls.delta_singleton);
    out["exit_code"] = cls.verdict == TypeSVerdict::StrictTypeS ? 0
                       : cls.verdict == TypeSVerdict::TypeS     ? 1
                                                                : 2;
    if (const auto* pin = dynamic_cast<const PinSource*>(&source)) {
        if (pin->graph().uniformity() >= 1) {
            ClassifyReport fast = pin_singleton_check(*pin);
            out["pin_singleton_check"] = {{"verdict", verdict_name(fast.verdict)},
                                          {"margin", value_json(fast.margin)}};
            if (fast.verdict != cls.verdict)
                throw InternalError("uniform-PIN classification path disagrees");
        }
    }
    return out;
}

json rsk_report_json(const Source& source) {
    RskReport report = rsk_report(source);
    json out;
    out["capacity"] = value_json(report.capacity);
    out["r_co"] = value_json(report.r_co);
    out["maximality"] = maximality_name(report.maximality);
    if (report.r_sk_exact) {
        out["r_sk_exact"] = value_json(*report.r_sk_exact);
        out["r_sk_justification"] = report.r_sk_justification;
    } else if (!report.r_sk_justification.empty()) {
        out["r_sk_justification"] = report.r_sk_justification;
    }
    json bounds = json::array();
    for (const auto& b : report.upper_bounds)
        bounds.push_back({{"value", value_json(b.value)}, {"origin", b.origin}});
    out["upper_bounds"] = std::move(bounds);
    if (report.ci_lower_bound)
        out["lower_bound_ci"] = value_json(*report.ci_lower_bound);
    out["ci_note"] = report.ci_note;
    return out;
}

json omnivocality_report_json(const Source& source) {
    SilentReport report = omnivocality_report(source);
    json out;
    out["capacity"] = value_json(report.capacity);
    out["verdict"] = report.omnivocality_required ? "OmnivocalityRequired" : "SilencePossible";
    out["may_stay_silent"] = report.may_stay_silent;
    out["classification_consistent"] = report.classification_consistent;
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"silent_terminal", row.silent_terminal},
                        {"silent_capacity", value_json(row.capacity)},
                        {"gap", value_json(row.gap)},
                        {"rt_min", value_json(row.rt_min)},
                        {"rt_min_lower_bound", value_json(row.rt_lower_bound)},
                        {"delta_t_singleton", value_json(row.delta_t)}});
    out["terminals"] = std::move(rows);
    return out;
}

json protocol_report(const Source& source, int n, std::uint64_t seed) {
    const auto* pin = dynamic_cast<const PinSource*>(&source);
    if (!pin) throw DomainError("protocol requires a PIN model");
    const Hypergraph& graph = pin->graph();
    Multigraph expanded = expand(graph, n);
    if (!expanded.connected()) throw DomainError("graph not connected");

    ProtocolRun run = run_protocol(graph, n, seed);
    auto agreement = verify_agreement(run, expanded);
    auto secrecy = verify_secrecy(run);

    json out;
    out["n"] = n;
    out["seed"] = seed;
    out["sigma"] = run.trees.size();
    out["sigma_rate"] = value_json(sigma_rate(Multigraph::from_graph(graph)));
    out["key_bits"] = run.key_forms.size();
    out["transcript_bits"] = run.transcript.size();
    out["agreement_ok"] = all_agree(agreement);
    out["secrecy_exact"] = secrecy.secret;
    out["run"] = json::parse(serialize_run(run, expanded));
    return out;
}

json allocation_report(int m, int t) {
    AllocationTable table = run_allocation(m, t);
    LexOrder order = lex_index(m, t);
    json out;
    out["m"] = m;
    out["t"] = t;
    out["error"] = table.error;
    if (table.error) out["error_detail"] = table.error_detail;
    json log = json::array();
    for (const auto& a : table.log)
        log.push_back({{"receiver", a.receiver},
                       {"edge_index", a.edge_index},
                       {"edge", order.edges[static_cast<std::size_t>(a.edge_index - 1)]},
                       {"donor", a.donor}});
    out["allocations"] = std::move(log);
    out["rendered"] = render_allocation(table);
    if (t <= m - 1) {
        ClaimsReport claims = verify_claims(m, t);
        out["claims"] = {{"passed", claims.passed},
                         {"total", claims.total_allocations},
                         {"expected_total", claims.expected_total},
                         {"per_receiver_ok", claims.per_receiver_ok},
                         {"table_exhausted", claims.table_exhausted}};
    }
    return out;
}

SourcePtr generate_model(const std::string& family, const json& params) {
    auto get_int = [&](const char* key) {
        if (!params.contains(key) || !params[key].is_number_integer())
            throw DomainError(std::string("generator needs integer parameter \"") + key + "\"");
        return params[key].get<int>();
    };
    if (family == "complete") return gen_complete_uniform(get_int("m"), get_int("t"));
    if (family == "cycle") return gen_cycle(get_int("m"));
    if (family == "harary") return gen_harary(get_int("m"), get_int("k"));
    if (family == "sts") return gen_sts(get_int("m"));
    if (family == "chan") return gen_chan(get_int("m"));
    if (family == "omni") {
        if (!params.contains("p") || !params["p"].is_number())
            throw DomainError("generator needs numeric parameter \"p\"");
        return gen_omni_example(get_int("m"), params["p"].get<double>());
    }
    throw DomainError("unknown model family \"" + family +
                      "\" (known: complete, cycle, harary, sts, chan, omni)");
}

} // namespace skc
