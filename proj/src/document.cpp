#include "gaingraph/document.hpp"

#include <json.hpp>

namespace gaingraph {

namespace {

using nlohmann::json;

Unit parse_gain(const json& j, size_t edge_index) {
    std::string where = "edge " + std::to_string(edge_index);
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, where + ": gain must be an object");
    if (j.contains("turns")) {
        if (!j["turns"].is_string())
            throw Error(ErrorCode::ParseError, where + ": turns must be a string");
        std::string s = j["turns"].get<std::string>();
        size_t slash = s.find('/');
        try {
            long long p, q;
            if (slash == std::string::npos) {
                p = std::stoll(s);
                q = 1;
            } else {
                p = std::stoll(s.substr(0, slash));
                q = std::stoll(s.substr(slash + 1));
            }
            if (q <= 0)
                throw Error(ErrorCode::ParseError,
                            where + ": turns denominator must be positive");
            return Unit::turns(p, q);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::ParseError, where + ": malformed turns '" + s + "'");
        } catch (const std::out_of_range&) {
            throw Error(ErrorCode::ParseError, where + ": turns out of range '" + s + "'");
        }
    }
    if (j.contains("re") && j.contains("im")) {
        if (!j["re"].is_number() || !j["im"].is_number())
            throw Error(ErrorCode::ParseError, where + ": re/im must be numbers");
        return Unit::cartesian(j["re"].get<double>(), j["im"].get<double>());
    }
    throw Error(ErrorCode::ParseError,
                where + ": gain needs either turns or re/im");
}

}  // namespace

GainGraph parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(ErrorCode::ParseError, "document needs an integer field 'n'");
    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw Error(ErrorCode::ParseError, "'edges' must be an array");
        for (size_t i = 0; i < doc["edges"].size(); ++i) {
            const json& je = doc["edges"][i];
            std::string where = "edge " + std::to_string(i);
            if (!je.is_object() || !je.contains("u") || !je.contains("v") ||
                !je.contains("gain"))
                throw Error(ErrorCode::ParseError, where + ": needs u, v and gain");
            if (!je["u"].is_number_integer() || !je["v"].is_number_integer())
                throw Error(ErrorCode::ParseError, where + ": u and v must be integers");
            int u = je["u"].get<int>();
            int v = je["v"].get<int>();
            if (u >= v)
                throw Error(ErrorCode::ParseError,
                            where + ": requires u < v, got (" + std::to_string(u) +
                                "," + std::to_string(v) + ")");
            try {
                edges.push_back({u, v, parse_gain(je["gain"], i)});
            } catch (const Error& err) {
                if (err.code() == ErrorCode::NonUnitGain)
                    throw Error(ErrorCode::NonUnitGain,
                                where + ": " + err.what());
                throw;
            }
        }
    }
    return GainGraph(n, std::move(edges));
}

std::string write_document(const GainGraph& g) {
    json doc;
    doc["n"] = g.n();
    doc["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        json je;
        je["u"] = e.u;
        je["v"] = e.v;
        if (e.gain.exact_turns()) {
            const Turns& t = *e.gain.exact_turns();
            je["gain"] = {{"turns", std::to_string(t.num) + "/" + std::to_string(t.den)}};
        } else {
            je["gain"] = {{"re", e.gain.re()}, {"im", e.gain.im()}};
        }
        doc["edges"].push_back(je);
    }
    return doc.dump(2) + "\n";
}

std::string document_digest(const GainGraph& g) {
    std::string text = write_document(g);
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace gaingraph
