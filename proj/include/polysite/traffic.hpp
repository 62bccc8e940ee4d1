#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polysite/errors.hpp"
#include "polysite/geometry.hpp"
#include "polysite/wls.hpp"

namespace polysite {

// One row of the congestion table: percent congestion on a road segment
// during a named time window ("morning", "afternoon", ...).
struct CongestionRecord {
    std::string segment_id;
    std::string window;
    double percent = 0.0;  // in [0, 100]
};

// Per-window weight vectors, each aligned with the region's segment order.
struct WeightSchedule {
    std::map<std::string, WeightVector> by_window;
};

struct SegmentContribution {
    std::string segment_id;
    double weight = 0.0;
    double distance = 0.0;  // signed
};

// Solved placement for one time window.
struct PlacementReport {
    std::string window;
    Point2 location;
    double objective = 0.0;
    bool inside_region = false;
    double condition = 0.0;
    std::vector<SegmentContribution> per_segment;
};

// Window name reserved for the all-weights-one report that plan_stations()
// always emits; congestion data must not use it.
inline constexpr const char* kUnweightedWindow = "unweighted";

// ---- region document -------------------------------------------------

// Parses {"name": ..., "vertices": [{"id", "x", "y"}, ...]}. Vertices are
// kept in document order; the closing edge is implied.
inline PolygonRegion load_region(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("region document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("region document: top level must be an object");
    }
    if (!doc.contains("vertices")) {
        throw ParseError("region document: missing \"vertices\"");
    }
    const nlohmann::json& verts = doc["vertices"];
    if (!verts.is_array()) {
        throw ParseError("region document: \"vertices\" must be an array");
    }
    std::vector<NamedVertex> vertices;
    vertices.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const nlohmann::json& v = verts[i];
        const std::string where = "region document: vertices[" + std::to_string(i) + "]";
        if (!v.is_object()) throw ParseError(where + ": must be an object");
        if (!v.contains("id") || !v["id"].is_string()) {
            throw ParseError(where + ": missing string field \"id\"");
        }
        if (!v.contains("x") || !v["x"].is_number()) {
            throw ParseError(where + ": missing numeric field \"x\"");
        }
        if (!v.contains("y") || !v["y"].is_number()) {
            throw ParseError(where + ": missing numeric field \"y\"");
        }
        vertices.push_back(NamedVertex{v["id"].get<std::string>(),
                                       Point2{v["x"].get<double>(), v["y"].get<double>()}});
    }
    PolygonRegion region = region_from_vertices(std::move(vertices));
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw ParseError("region document: \"name\" must be a string");
        }
        region.name = doc["name"].get<std::string>();
    }
    return region;
}

inline PolygonRegion load_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open region document: " + path);
    }
    return load_region(in);
}

// ---- congestion table ------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

}  // namespace detail

// Parses the comma-delimited table with header `segment,window,percent`.
// A header-only table yields an empty list.
inline std::vector<CongestionRecord> load_congestion(std::istream& in) {
    std::vector<CongestionRecord> records;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const std::vector<std::string> fields = detail::split_csv_row(line);
        if (!saw_header) {
            if (fields != std::vector<std::string>{"segment", "window", "percent"}) {
                throw ParseError("congestion table line " + std::to_string(lineno) +
                                 ": expected header \"segment,window,percent\"");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError("congestion table line " + std::to_string(lineno) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
            throw ParseError("congestion table line " + std::to_string(lineno) +
                             ": empty segment or window");
        }
        double percent = 0.0;
        std::size_t consumed = 0;
        try {
            percent = std::stod(fields[2], &consumed);
        } catch (const std::exception&) {
            throw ParseError("congestion table line " + std::to_string(lineno) +
                             ": percent is not a number: \"" + fields[2] + "\"");
        }
        if (consumed != fields[2].size()) {
            throw ParseError("congestion table line " + std::to_string(lineno) +
                             ": percent is not a number: \"" + fields[2] + "\"");
        }
        if (!(percent >= 0.0 && percent <= 100.0)) {
            throw RangeError("congestion table line " + std::to_string(lineno) + ": percent " +
                             fields[2] + " outside [0, 100]");
        }
        records.push_back(CongestionRecord{fields[0], fields[1], percent});
    }
    if (!saw_header) {
        throw ParseError("congestion table: missing header \"segment,window,percent\"");
    }
    return records;
}

inline std::vector<CongestionRecord> load_congestion_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open congestion table: " + path);
    }
    return load_congestion(in);
}

// ---- weights and planning ----------------------------------------------

// Weight vector for one window, ordered to match region.lines. Each region
// segment must be covered by exactly one record; w_i = percent_i / 100.
inline WeightVector weights_for_window(const std::vector<CongestionRecord>& records,
                                       const PolygonRegion& region, const std::string& window) {
    std::map<std::string, double> percent_by_segment;
    bool window_seen = false;
    for (const CongestionRecord& rec : records) {
        if (rec.window != window) continue;
        window_seen = true;
        if (!percent_by_segment.emplace(rec.segment_id, rec.percent).second) {
            throw DuplicateSegment("window '" + window + "': segment '" + rec.segment_id +
                                   "' appears more than once");
        }
    }
    if (!window_seen) {
        throw UnknownWindow("no congestion records for window '" + window + "'");
    }
    WeightVector weights;
    weights.w.reserve(region.lines.size());
    weights.labels.reserve(region.lines.size());
    for (const HesseLine& line : region.lines) {
        const auto it = percent_by_segment.find(line.segment_id);
        if (it == percent_by_segment.end()) {
            throw MissingSegment("window '" + window + "': no record for segment '" +
                                 line.segment_id + "'");
        }
        weights.w.push_back(it->second / 100.0);
        weights.labels.push_back(line.segment_id);
        percent_by_segment.erase(it);
    }
    if (!percent_by_segment.empty()) {
        throw MissingSegment("window '" + window + "': segment '" +
                             percent_by_segment.begin()->first + "' is not part of the region");
    }
    return weights;
}

inline WeightSchedule schedule_from_records(const std::vector<CongestionRecord>& records,
                                            const PolygonRegion& region) {
    std::set<std::string> windows;
    for (const CongestionRecord& rec : records) {
        windows.insert(rec.window);
    }
    WeightSchedule schedule;
    for (const std::string& window : windows) {
        schedule.by_window.emplace(window, weights_for_window(records, region, window));
    }
    return schedule;
}

namespace detail {

inline PlacementReport make_report(const PolygonRegion& region, const LineSystem& system,
                                   const WeightVector& weights, const std::string& window) {
    Solution sol;
    try {
        sol = solve_wls(system, weights);
    } catch (const SingularNormalMatrix& e) {
        throw SingularNormalMatrix("window '" + window + "': " + e.what());
    }
    PlacementReport report;
    report.window = window;
    report.location = sol.point;
    report.objective = sol.objective;
    report.inside_region = contains(region, sol.point);
    report.condition = sol.condition;
    report.per_segment.reserve(system.rows.size());
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        report.per_segment.push_back(
            SegmentContribution{system.rows[i].segment_id, weights.w[i], sol.residuals[i]});
    }
    return report;
}

}  // namespace detail

// One report per distinct window in the records, plus the synthetic
// "unweighted" report, sorted by window name. Errors from weighting or
// solving carry the offending window's name.
inline std::vector<PlacementReport> plan_stations(const PolygonRegion& region,
                                                  const std::vector<CongestionRecord>& records) {
    const LineSystem system = assemble(region.lines);
    std::set<std::string> windows;
    for (const CongestionRecord& rec : records) {
        windows.insert(rec.window);
    }
    if (windows.count(kUnweightedWindow) != 0) {
        throw ParseError("window name '" + std::string(kUnweightedWindow) +
                         "' is reserved for the synthetic all-weights-one report");
    }
    windows.insert(kUnweightedWindow);

    std::vector<PlacementReport> reports;
    reports.reserve(windows.size());
    for (const std::string& window : windows) {
        WeightVector weights;
        if (window == kUnweightedWindow) {
            weights = uniform_weights(region.lines.size());
            for (const HesseLine& line : region.lines) {
                weights.labels.push_back(line.segment_id);
            }
        } else {
            weights = weights_for_window(records, region, window);
        }
        reports.push_back(detail::make_report(region, system, weights, window));
    }
    return reports;
}

}  // namespace polysite
