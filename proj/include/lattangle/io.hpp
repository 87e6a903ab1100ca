#pragma once

// Canonical JSON serialization for the core value types, plus data-file
// loading with checksum verification.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lattangle/cyclo.hpp"
#include "lattangle/mpoly.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

using Json = nlohmann::json;  // keys are kept sorted -> deterministic dumps

inline Json to_json(const RootOfUnity& r) { return Json{{"num", r.num}, {"den", r.den}}; }

inline RootOfUnity ru_from_json(const Json& j) {
    return RootOfUnity(j.at("num").get<long>(), j.at("den").get<long>());
}

inline Json to_json(const Cyclo& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(format_rational(c));
    return Json{{"order", x.order()}, {"coords", coords}};
}

inline Cyclo cyclo_from_json(const Json& j) {
    QVec coords;
    for (const auto& c : j.at("coords")) coords.push_back(parse_rational(c.get<std::string>()));
    return Cyclo::from_coords(j.at("order").get<long>(), std::move(coords));
}

inline Json to_json(const MPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

inline MPoly mpoly_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MPoly p;
    for (const auto& t : j.at("terms")) {
        MPoly::Exps e = t.at("exps").get<MPoly::Exps>();
        p += MPoly::monomial(cyclo_from_json(t.at("coeff")), vars, e);
    }
    return p;
}

/// FNV-1a 64-bit hash, rendered as 16 hex digits.
inline std::string fnv64_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Load a JSON data file and verify its embedded "checksum" field, which
/// covers the canonical dump of the "payload" field.
inline Json load_checked_data(const std::string& path) {
    Json j = Json::parse(read_file(path));
    std::string expect = j.at("checksum").get<std::string>();
    std::string actual = fnv64_hex(j.at("payload").dump());
    if (expect != actual)
        throw std::runtime_error("checksum mismatch in " + path + ": " + actual);
    return j.at("payload");
}

}  // namespace lattangle
