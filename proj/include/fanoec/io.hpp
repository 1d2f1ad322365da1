#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fanoec/fan.hpp"

namespace fanoec {

// Canonical fan record:
//   { "dim": d, "index": q, "rays": [[..d ints..], ...], "max_cones": [[..ray indices..], ...] }
// Collection files are newline-delimited records in ascending index order.

inline nlohmann::ordered_json to_json(const VarietyRecord& v) {
    nlohmann::ordered_json j;
    j["dim"] = v.dim;
    j["index"] = v.index;
    j["rays"] = v.fan.rays;
    j["max_cones"] = v.fan.max_cones;
    return j;
}

inline VarietyRecord parse_variety_json(const nlohmann::json& j, const std::string& provenance) {
    VarietyRecord v;
    try {
        v.dim = j.at("dim").get<int>();
        v.index = j.at("index").get<long>();
        v.fan.dim = v.dim;
        v.fan.rays = j.at("rays").get<std::vector<std::vector<long>>>();
        v.fan.max_cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed fan record: ") + e.what());
    }
    v.provenance = provenance;
    validate_structure(v.fan);
    return v;
}

inline VarietyRecord parse_variety(const std::string& text, const std::string& provenance = "inline") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_variety_json(j, provenance);
}

inline std::vector<VarietyRecord> load_collection(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<VarietyRecord> out;
    std::string line;
    long line_no = 0;
    long prev_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        VarietyRecord v;
        try {
            v = parse_variety(line, path + ":" + std::to_string(line_no));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (v.index <= prev_index)
            throw ParseError(path + ":" + std::to_string(line_no) + ": indices must be strictly ascending");
        prev_index = v.index;
        out.push_back(std::move(v));
    }
    return out;
}

inline void save_collection(const std::string& path, const std::vector<VarietyRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& v : records) out << to_json(v).dump() << "\n";
}

// FNV-1a, used for the database checksum manifest.
inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline std::string file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

}  // namespace fanoec
