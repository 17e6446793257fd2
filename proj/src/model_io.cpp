#include "skc/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skc/errors.hpp"

namespace skc {

using nlohmann::json;

namespace {

int require_int(const json& doc, const char* key, const std::string& where) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", where);
    if (!doc[key].is_number_integer())
        throw ParseError(std::string("field \"") + key + "\" must be an integer", where);
    return doc[key].get<int>();
}

SourcePtr parse_doc(const json& doc, const std::string& where) {
    if (!doc.is_object()) throw ParseError("model document must be a JSON object", where);
    if (!doc.contains("type") || !doc["type"].is_string())
        throw ParseError("missing string field \"type\"", where);
    const std::string type = doc["type"].get<std::string>();
    const int m = require_int(doc, "m", where);
    if (m < 1) throw ParseError("m must be positive", where);
    if (m > kMaxTerminals)
        throw ParseError("m = " + std::to_string(m) + " exceeds the supported maximum of " +
                             std::to_string(kMaxTerminals),
                         where);

    if (type == "pin") {
        if (!doc.contains("edges") || !doc["edges"].is_array())
            throw ParseError("pin model needs an \"edges\" array", where);
        std::vector<Hyperedge> edges;
        int idx = 0;
        for (const auto& ej : doc["edges"]) {
            const std::string ewhere = where + "edges[" + std::to_string(idx++) + "]";
            if (!ej.is_object() || !ej.contains("members") || !ej["members"].is_array())
                throw ParseError("edge needs a \"members\" array", ewhere);
            std::uint32_t bits = 0;
            for (const auto& mj : ej["members"]) {
                if (!mj.is_number_integer())
                    throw ParseError("edge members must be integers", ewhere);
                int v = mj.get<int>();
                if (v < 1 || v > m)
                    throw ParseError("edge member " + std::to_string(v) + " outside 1..m", ewhere);
                bits |= 1u << (v - 1);
            }
            if (bits == 0) throw ParseError("empty hyperedge", ewhere);
            long mult = 1;
            if (ej.contains("mult")) {
                if (!ej["mult"].is_number_integer() || ej["mult"].get<long>() < 1)
                    throw ParseError("mult must be a positive integer", ewhere);
                mult = ej["mult"].get<long>();
            }
            edges.push_back({TerminalSet(bits, m), mult});
        }
        return std::make_shared<PinSource>(Hypergraph(m, std::move(edges)));
    }

    if (type == "pmf") {
        if (!doc.contains("alphabets") || !doc["alphabets"].is_array())
            throw ParseError("pmf model needs an \"alphabets\" array", where);
        if (!doc.contains("probs") || !doc["probs"].is_array())
            throw ParseError("pmf model needs a \"probs\" array", where);
        std::vector<int> alphabets;
        for (const auto& aj : doc["alphabets"]) {
            if (!aj.is_number_integer() || aj.get<int>() < 1)
                throw ParseError("alphabet sizes must be positive integers", where + "alphabets");
            alphabets.push_back(aj.get<int>());
        }
        std::vector<double> probs;
        double mass = 0.0;
        for (const auto& pj : doc["probs"]) {
            if (!pj.is_number()) throw ParseError("probs must be numbers", where + "probs");
            double p = pj.get<double>();
            if (p < -1e-12) throw ParseError("negative probability", where + "probs");
            probs.push_back(p);
            mass += p;
        }
        if (std::abs(mass - 1.0) > 1e-12) {
            std::ostringstream os;
            os << "pmf mass " << mass << " != 1";
            throw ParseError(os.str(), where + "probs");
        }
        try {
            return std::make_shared<PmfSource>(m, std::move(alphabets), std::move(probs));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), where);
        }
    }

    if (type == "club") {
        if (!doc.contains("left") || !doc.contains("right"))
            throw ParseError("club model needs \"left\" and \"right\" documents", where);
        auto left = parse_doc(doc["left"], where + "left/");
        auto right = parse_doc(doc["right"], where + "right/");
        try {
            return club(std::move(left), std::move(right));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), where);
        }
    }

    throw ParseError("unknown model type \"" + type + "\"", where);
}

json serialize_doc(const Source& source) {
    json doc;
    if (const auto* pin = dynamic_cast<const PinSource*>(&source)) {
        doc["type"] = "pin";
        doc["m"] = pin->terminals();
        json edges = json::array();
        for (const auto& e : pin->graph().edges()) {
            json ej;
            ej["members"] = e.members.members();
            if (e.multiplicity != 1) ej["mult"] = e.multiplicity;
            edges.push_back(std::move(ej));
        }
        doc["edges"] = std::move(edges);
        return doc;
    }
    if (const auto* pmf = dynamic_cast<const PmfSource*>(&source)) {
        doc["type"] = "pmf";
        doc["m"] = pmf->terminals();
        doc["alphabets"] = pmf->alphabet_sizes();
        doc["probs"] = pmf->probs();
        return doc;
    }
    if (const auto* cl = dynamic_cast<const ClubbedSource*>(&source)) {
        doc["type"] = "club";
        doc["m"] = cl->terminals();
        doc["left"] = serialize_doc(*cl->left());
        doc["right"] = serialize_doc(*cl->right());
        return doc;
    }
    throw DomainError("source kind has no document form");
}

} // namespace

SourcePtr parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Recover a line number from the byte offset for the diagnostic.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         "line " + std::to_string(line));
    }
    return parse_doc(doc, "");
}

std::string serialize_model(const Source& source) { return serialize_doc(source).dump(); }

SourcePtr load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), path);
    }
}

} // namespace skc
