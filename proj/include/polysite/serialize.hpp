#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "polysite/errors.hpp"
#include "polysite/traffic.hpp"

namespace polysite {

// Numbers are serialized at 17 significant digits, enough for an exact
// double round trip, and formatted the same way on every run.
inline std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace detail

inline std::string reports_to_json(const std::vector<PlacementReport>& reports) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const PlacementReport& r = reports[i];
        out += "  {\n";
        out += "    \"window\": \"" + detail::json_escape(r.window) + "\",\n";
        out += "    \"location\": {\"x\": " + format_number(r.location.x) +
               ", \"y\": " + format_number(r.location.y) + "},\n";
        out += "    \"objective\": " + format_number(r.objective) + ",\n";
        out += std::string("    \"inside_region\": ") + (r.inside_region ? "true" : "false") + ",\n";
        out += "    \"condition\": " + format_number(r.condition) + ",\n";
        out += "    \"per_segment\": [\n";
        for (std::size_t j = 0; j < r.per_segment.size(); ++j) {
            const SegmentContribution& seg = r.per_segment[j];
            out += "      {\"segment\": \"" + detail::json_escape(seg.segment_id) +
                   "\", \"weight\": " + format_number(seg.weight) +
                   ", \"distance\": " + format_number(seg.distance) + "}";
            out += (j + 1 < r.per_segment.size()) ? ",\n" : "\n";
        }
        out += "    ]\n";
        out += (i + 1 < reports.size()) ? "  },\n" : "  }\n";
    }
    out += "]\n";
    return out;
}

inline std::vector<PlacementReport> reports_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report document: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("report document: top level must be an array");
    }
    std::vector<PlacementReport> reports;
    reports.reserve(doc.size());
    for (const nlohmann::json& item : doc) {
        try {
            PlacementReport r;
            r.window = item.at("window").get<std::string>();
            r.location.x = item.at("location").at("x").get<double>();
            r.location.y = item.at("location").at("y").get<double>();
            r.objective = item.at("objective").get<double>();
            r.inside_region = item.at("inside_region").get<bool>();
            r.condition = item.at("condition").get<double>();
            for (const nlohmann::json& seg : item.at("per_segment")) {
                r.per_segment.push_back(SegmentContribution{seg.at("segment").get<std::string>(),
                                                            seg.at("weight").get<double>(),
                                                            seg.at("distance").get<double>()});
            }
            reports.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("report document: ") + e.what());
        }
    }
    return reports;
}

// FeatureCollection with the region as a Polygon feature followed by one
// Point feature per report, in report order. Coordinates are local map
// units, not geographic.
inline std::string to_geojson(const PolygonRegion& region,
                              const std::vector<PlacementReport>& reports) {
    std::string out = "{\n  \"type\": \"FeatureCollection\",\n  \"features\": [\n";
    out += "    {\n      \"type\": \"Feature\",\n";
    out += "      \"geometry\": {\"type\": \"Polygon\", \"coordinates\": [[";
    for (const NamedVertex& v : region.vertices) {
        out += "[" + format_number(v.position.x) + ", " + format_number(v.position.y) + "], ";
    }
    // close the ring
    out += "[" + format_number(region.vertices.front().position.x) + ", " +
           format_number(region.vertices.front().position.y) + "]]]},\n";
    out += "      \"properties\": {\"name\": \"" + detail::json_escape(region.name) + "\"}\n    }";
    for (const PlacementReport& r : reports) {
        out += ",\n    {\n      \"type\": \"Feature\",\n";
        out += "      \"geometry\": {\"type\": \"Point\", \"coordinates\": [" +
               format_number(r.location.x) + ", " + format_number(r.location.y) + "]},\n";
        out += "      \"properties\": {\"window\": \"" + detail::json_escape(r.window) +
               "\", \"objective\": " + format_number(r.objective) +
               ", \"inside_region\": " + (r.inside_region ? "true" : "false") + "}\n    }";
    }
    out += "\n  ]\n}\n";
    return out;
}

// Fixed-width table for terminal output.
inline std::string reports_to_table(const std::vector<PlacementReport>& reports) {
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%-12s %12s %12s %14s %8s %12s\n", "window", "x", "y",
                  "objective", "inside", "condition");
    out += buf;
    for (const PlacementReport& r : reports) {
        std::snprintf(buf, sizeof(buf), "%-12s %12.6f %12.6f %14.6f %8s %12.4f\n",
                      r.window.c_str(), r.location.x, r.location.y, r.objective,
                      r.inside_region ? "yes" : "no", r.condition);
        out += buf;
    }
    return out;
}

}  // namespace polysite
