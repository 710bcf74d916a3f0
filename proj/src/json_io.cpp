#include "rdr/json_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "rdr/errors.hpp"

namespace rdr {

namespace {

std::vector<Vec> parse_vertex_array(const nlohmann::json& arr, std::size_t expect_dim) {
    if (!arr.is_array() || arr.empty())
        throw ParseError("\"vertices\" must be a non-empty array");
    std::vector<Vec> out;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != expect_dim)
            throw ParseError("vertex rows must have exactly 'dim' numbers");
        Vec v(expect_dim);
        for (std::size_t i = 0; i < expect_dim; ++i) {
            if (!row[i].is_number()) throw ParseError("vertex coordinates must be numbers");
            v[i] = row[i].get<double>();
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

VBody parse_body_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad body JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw ParseError("body JSON needs \"dim\" and \"vertices\"");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("\"dim\" must be a positive integer");
    const std::size_t dim = j["dim"].get<std::size_t>();
    try {
        return VBody(dim, parse_vertex_array(j["vertices"], dim));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid body: ") + e.what());
    }
}

Gauge parse_gauge_json(const std::string& text, std::size_t dim) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad gauge JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("gauge JSON needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "ball") return Gauge::ball(dim);
    if (kind == "polytope") {
        if (!j.contains("vertices")) throw ParseError("polytope gauge needs \"vertices\"");
        return Gauge::polytope(VBody(dim, parse_vertex_array(j["vertices"], dim)));
    }
    throw ParseError("gauge \"kind\" must be \"ball\" or \"polytope\"");
}

std::string format_double17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace rdr
