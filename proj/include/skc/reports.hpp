#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "skc/source.hpp"
#include "skc/value.hpp"

namespace skc {

// JSON building blocks behind the C API's report strings. Schemas are
// stable; the CLI renders human text from exactly these documents.

nlohmann::json value_json(const Value& v);

nlohmann::json info_report(const Source& source);
nlohmann::json classify_report(const Source& source);
nlohmann::json rsk_report_json(const Source& source);
nlohmann::json omnivocality_report_json(const Source& source);
nlohmann::json protocol_report(const Source& source, int n, std::uint64_t seed);
nlohmann::json allocation_report(int m, int t);

// Generator dispatch: family in {complete, cycle, harary, sts, chan, omni},
// params like {"m":7,"t":3,"k":2,"p":0.5} as each family requires.
SourcePtr generate_model(const std::string& family, const nlohmann::json& params);

} // namespace skc
