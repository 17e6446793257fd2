#include "skc.h"

#include <cstring>
#include <string>

#include "skc/errors.hpp"
#include "skc/linprog.hpp"
#include "skc/model_io.hpp"
#include "skc/reports.hpp"
#include "skc/source.hpp"

namespace {

thread_local std::string g_last_error;

struct skc_source_impl {
    skc::SourcePtr source;
};

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const skc::Source& unwrap(const skc_source* source) {
    if (!source) throw skc::DomainError("null source handle");
    return *reinterpret_cast<const skc_source_impl*>(source)->source;
}

skc_source* wrap(skc::SourcePtr source) {
    return reinterpret_cast<skc_source*>(new skc_source_impl{std::move(source)});
}

template <typename Fn>
skc_status guarded(Fn&& fn) {
    try {
        fn();
        return SKC_OK;
    } catch (const skc::ParseError& e) {
        g_last_error = e.what();
        return SKC_ERROR_PARSE;
    } catch (const skc::IoError& e) {
        g_last_error = e.what();
        return SKC_ERROR_IO;
    } catch (const skc::DomainError& e) {
        g_last_error = e.what();
        return SKC_ERROR_DOMAIN;
    } catch (const skc::LpInfeasible& e) {
        g_last_error = e.what();
        return SKC_ERROR_INTERNAL;
    } catch (const skc::LpUnbounded& e) {
        g_last_error = e.what();
        return SKC_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SKC_ERROR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* skc_version(void) { return "1.0.0"; }

const char* skc_last_error(void) { return g_last_error.c_str(); }

void skc_string_free(char* s) { delete[] s; }

void skc_source_free(skc_source* source) {
    delete reinterpret_cast<skc_source_impl*>(source);
}

skc_status skc_source_parse(const char* json_text, skc_source** out) {
    return guarded([&] {
        if (!json_text || !out) throw skc::DomainError("null argument");
        *out = wrap(skc::parse_model(json_text));
    });
}

skc_status skc_source_read_file(const char* path, skc_source** out) {
    return guarded([&] {
        if (!path || !out) throw skc::DomainError("null argument");
        *out = wrap(skc::load_model_file(path));
    });
}

skc_status skc_source_serialize(const skc_source* source, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::serialize_model(unwrap(source)));
    });
}

skc_status skc_source_generate(const char* family, const char* params_json,
                               skc_source** out) {
    return guarded([&] {
        if (!family || !out) throw skc::DomainError("null argument");
        nlohmann::json params = nlohmann::json::object();
        if (params_json && *params_json) {
            try {
                params = nlohmann::json::parse(params_json);
            } catch (const nlohmann::json::parse_error& e) {
                throw skc::ParseError(std::string("invalid parameter JSON: ") + e.what(), "");
            }
        }
        *out = wrap(skc::generate_model(family, params));
    });
}

int skc_source_terminal_count(const skc_source* source) {
    try {
        return unwrap(source).terminals();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

skc_status skc_source_entropy(const skc_source* source, uint32_t subset_mask,
                              double* out_bits) {
    return guarded([&] {
        if (!out_bits) throw skc::DomainError("null argument");
        const skc::Source& s = unwrap(source);
        *out_bits = s.entropy(skc::TerminalSet(subset_mask, s.terminals())).to_double();
    });
}

skc_status skc_source_with_tolerance(const skc_source* source, double tolerance,
                                     skc_source** out) {
    return guarded([&] {
        if (!source || !out) throw skc::DomainError("null argument");
        const auto* impl = reinterpret_cast<const skc_source_impl*>(source);
        *out = wrap(skc::with_tolerance(impl->source, tolerance));
    });
}

skc_status skc_info_report(const skc_source* source, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::info_report(unwrap(source)).dump());
    });
}

skc_status skc_classify_report(const skc_source* source, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::classify_report(unwrap(source)).dump());
    });
}

skc_status skc_rsk_report(const skc_source* source, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::rsk_report_json(unwrap(source)).dump());
    });
}

skc_status skc_omnivocality_report(const skc_source* source, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::omnivocality_report_json(unwrap(source)).dump());
    });
}

skc_status skc_protocol_report(const skc_source* source, int n, uint64_t seed,
                               char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::protocol_report(unwrap(source), n, seed).dump());
    });
}

skc_status skc_allocation_report(int m, int t, char** json_out) {
    return guarded([&] {
        if (!json_out) throw skc::DomainError("null argument");
        *json_out = dup_string(skc::allocation_report(m, t).dump());
    });
}

} // extern "C"
