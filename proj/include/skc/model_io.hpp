#pragma once

#include <string>

#include "skc/source.hpp"

namespace skc {

// Model document grammar (UTF-8 JSON):
//   {"type":"pin", "m":int, "edges":[{"members":[int...], "mult":int?}...]}
//   {"type":"pmf", "m":int, "alphabets":[int...], "probs":[float...]}
//   {"type":"club","m":int, "left":{...}, "right":{...}}
// Terminals are 1-indexed; pmf probs are row-major, last terminal fastest;
// mult defaults to 1.
SourcePtr parse_model(const std::string& text);

std::string serialize_model(const Source& source);

SourcePtr load_model_file(const std::string& path);

} // namespace skc
