// skc: batch analysis of multiterminal source models over the C API.
//
// Exit codes: 0 success (for `classify`: StrictTypeS), 1/2 classification
// verdicts, 3 input/domain errors, 4 internal errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skc.h"

namespace {

using nlohmann::json;

constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

[[noreturn]] void fail(skc_status status) {
    std::cerr << "error: " << skc_last_error() << "\n";
    std::exit(status == SKC_ERROR_INTERNAL ? kExitInternal : kExitInput);
}

struct SourceHandle {
    skc_source* ptr = nullptr;
    ~SourceHandle() { skc_source_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { skc_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

void load_model(const std::string& path, double tolerance, SourceHandle& out) {
    skc_status status = skc_source_read_file(path.c_str(), &out.ptr);
    if (status != SKC_OK) fail(status);
    if (tolerance > 0) {
        skc_source* adjusted = nullptr;
        status = skc_source_with_tolerance(out.ptr, tolerance, &adjusted);
        if (status != SKC_OK) fail(status);
        skc_source_free(out.ptr);
        out.ptr = adjusted;
    }
}

std::string value_str(const json& v) { return v.at("str").get<std::string>(); }

std::string partition_str(const json& blocks) {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += "{";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks[i][j].get<int>());
        }
        s += "}";
    }
    return s + "}";
}

void print_info(const json& r) {
    std::cout << "m = " << r.at("m").get<int>() << "\n";
    std::cout << "terminal entropies:";
    for (const auto& h : r.at("terminal_entropies")) std::cout << " " << value_str(h);
    std::cout << "\n";
    std::cout << "H(X_M) = " << value_str(r.at("joint_entropy")) << "\n";
    std::cout << "I(X_M) = C(M) = " << value_str(r.at("multipartite_info")) << "\n";
    std::cout << "R_CO   = " << value_str(r.at("r_co")) << "\n";
    std::cout << "argmin partitions (" << r.at("argmin_count").get<std::size_t>() << "):";
    for (const auto& p : r.at("argmin")) std::cout << " " << partition_str(p);
    if (r.at("argmin_truncated").get<bool>()) std::cout << " ...";
    std::cout << "\n";
}

int print_classify(const json& r) {
    std::cout << r.at("verdict").get<std::string>()
              << " margin=" << value_str(r.at("margin"));
    if (r.at("tie").get<bool>()) std::cout << " (tie within tolerance)";
    std::cout << " worst B=" << partition_str(json::array({r.at("worst_b")})) << "\n";
    return r.at("exit_code").get<int>();
}

void print_omnivocal(const json& r) {
    std::cout << r.at("verdict").get<std::string>()
              << "; I(X_M) = " << value_str(r.at("capacity")) << "\n";
    for (const auto& row : r.at("terminals")) {
        std::cout << "  terminal " << row.at("silent_terminal").get<int>()
                  << " silent: I_T = " << value_str(row.at("silent_capacity"))
                  << ", gap = " << value_str(row.at("gap"))
                  << ", R_T^min = " << value_str(row.at("rt_min"))
                  << " (>= " << value_str(row.at("rt_min_lower_bound"))
                  << "), Delta_T(S) = " << value_str(row.at("delta_t_singleton")) << "\n";
    }
    const auto& silent = r.at("may_stay_silent");
    if (!silent.empty()) {
        std::cout << "may stay silent:";
        for (const auto& u : silent) std::cout << " " << u.get<int>();
        std::cout << "\n";
    }
}

void print_rsk(const json& r) {
    std::cout << "capacity C(M) = " << value_str(r.at("capacity")) << "\n";
    std::cout << "R_CO = " << value_str(r.at("r_co")) << "\n";
    if (r.contains("r_sk_exact"))
        std::cout << "R_SK = " << value_str(r.at("r_sk_exact")) << "  ["
                  << r.at("r_sk_justification").get<std::string>() << "]\n";
    else if (r.contains("r_sk_justification"))
        std::cout << "R_SK: " << r.at("r_sk_justification").get<std::string>() << "\n";
    for (const auto& b : r.at("upper_bounds"))
        std::cout << "  upper bound " << value_str(b.at("value")) << "  ["
                  << b.at("origin").get<std::string>() << "]\n";
    if (r.contains("lower_bound_ci"))
        std::cout << "  lower bound " << value_str(r.at("lower_bound_ci")) << "  [CI - I]\n";
    std::cout << "maximality: " << r.at("maximality").get<std::string>() << "\n";
    std::cout << "note: " << r.at("ci_note").get<std::string>() << "\n";
}

void print_protocol(const json& r) {
    std::cout << "sigma=" << r.at("sigma").get<std::size_t>()
              << " key=" << r.at("key_bits").get<std::size_t>() << "b"
              << " transcript=" << r.at("transcript_bits").get<std::size_t>() << "b"
              << " secrecy=" << (r.at("secrecy_exact").get<bool>() ? "EXACT" : "BROKEN")
              << " agreement=" << (r.at("agreement_ok").get<bool>() ? "OK" : "FAILED") << "\n";
    std::cout << "sigma rate = " << value_str(r.at("sigma_rate"))
              << ", seed = " << r.at("seed").get<std::uint64_t>() << "\n";
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        std::exit(kExitInput);
    }
    out << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secret-key capacity toolkit for multiterminal source models"};
    app.require_subcommand(1);

    std::string model_path, out_path, family;
    std::vector<std::string> params;
    bool as_json = false;
    double tolerance = 0.0;
    int n = 1;
    std::uint64_t seed = 0;
    int alloc_m = 0, alloc_t = 0;
    std::string emit_run;

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("model", model_path, "model document (JSON)")->required();
        cmd->add_flag("--json", as_json, "emit the JSON report");
        cmd->add_option("--tolerance", tolerance, "float comparison tolerance");
    };

    CLI::App* info = app.add_subcommand("info", "entropies, capacity and R_CO");
    add_model_flags(info);
    CLI::App* classify = app.add_subcommand("classify", "Type S classification");
    add_model_flags(classify);
    CLI::App* omnivocal = app.add_subcommand("omnivocal", "silent-terminal analysis");
    add_model_flags(omnivocal);
    CLI::App* rsk = app.add_subcommand("rsk", "communication-complexity report");
    add_model_flags(rsk);

    CLI::App* protocol = app.add_subcommand("protocol", "run the spanning-tree XOR protocol");
    add_model_flags(protocol);
    protocol->add_option("--n", n, "expansion factor")->check(CLI::PositiveNumber);
    protocol->add_option("--seed", seed, "PRNG seed");
    protocol->add_option("--emit-run", emit_run, "write the full run JSON to a file");

    CLI::App* allocate = app.add_subcommand("allocate", "hyperedge allocation certification");
    allocate->add_option("m", alloc_m, "terminal count")->required();
    allocate->add_option("t", alloc_t, "hyperedge size")->required();
    allocate->add_flag("--json", as_json, "emit the JSON report");

    CLI::App* gen = app.add_subcommand("gen", "generate a model document");
    gen->add_option("family", family, "complete|cycle|harary|sts|chan|omni")->required();
    gen->add_option("params", params, "family parameters (e.g. m [t|k|p])");
    gen->add_option("--out", out_path, "output file (stdout otherwise)");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        json p = json::object();
        auto need = [&](std::size_t count) {
            if (params.size() != count) {
                std::cerr << "error: family \"" << family << "\" takes " << count
                          << " parameter(s)\n";
                std::exit(kExitInput);
            }
        };
        try {
            if (family == "complete") { need(2); p["m"] = std::stoi(params[0]); p["t"] = std::stoi(params[1]); }
            else if (family == "harary") { need(2); p["m"] = std::stoi(params[0]); p["k"] = std::stoi(params[1]); }
            else if (family == "omni") { need(2); p["m"] = std::stoi(params[0]); p["p"] = std::stod(params[1]); }
            else { need(1); p["m"] = std::stoi(params[0]); }
        } catch (const std::exception&) {
            std::cerr << "error: parameters must be numeric\n";
            std::exit(kExitInput);
        }
        SourceHandle src;
        skc_status status = skc_source_generate(family.c_str(), p.dump().c_str(), &src.ptr);
        if (status != SKC_OK) fail(status);
        StringHandle doc;
        status = skc_source_serialize(src.ptr, &doc.ptr);
        if (status != SKC_OK) fail(status);
        write_or_print(doc.str(), out_path);
        return 0;
    }

    if (allocate->parsed()) {
        StringHandle report;
        skc_status status = skc_allocation_report(alloc_m, alloc_t, &report.ptr);
        if (status != SKC_OK) fail(status);
        json r = json::parse(report.str());
        if (as_json) {
            std::cout << r.dump(2) << "\n";
        } else {
            std::cout << r.at("rendered").get<std::string>();
            if (r.contains("claims")) {
                const auto& c = r.at("claims");
                std::cout << "claims: " << (c.at("passed").get<bool>() ? "PASS" : "FAIL")
                          << " (" << c.at("total").get<long>() << " of "
                          << c.at("expected_total").get<long>() << " terms)\n";
            }
        }
        return 0;
    }

    SourceHandle src;
    load_model(model_path, tolerance, src);
    StringHandle report;
    skc_status status = SKC_OK;

    if (info->parsed()) status = skc_info_report(src.ptr, &report.ptr);
    else if (classify->parsed()) status = skc_classify_report(src.ptr, &report.ptr);
    else if (omnivocal->parsed()) status = skc_omnivocality_report(src.ptr, &report.ptr);
    else if (rsk->parsed()) status = skc_rsk_report(src.ptr, &report.ptr);
    else if (protocol->parsed()) status = skc_protocol_report(src.ptr, n, seed, &report.ptr);
    if (status != SKC_OK) fail(status);

    json r = json::parse(report.str());
    if (protocol->parsed() && !emit_run.empty())
        write_or_print(r.at("run").dump(2), emit_run);

    if (as_json) {
        std::cout << r.dump(2) << "\n";
        return classify->parsed() ? r.at("exit_code").get<int>() : 0;
    }
    if (info->parsed()) print_info(r);
    else if (classify->parsed()) return print_classify(r);
    else if (omnivocal->parsed()) print_omnivocal(r);
    else if (rsk->parsed()) print_rsk(r);
    else if (protocol->parsed()) print_protocol(r);
    return 0;
}
