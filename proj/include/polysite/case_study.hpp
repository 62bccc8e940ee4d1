#pragma once

#include <vector>

#include "polysite/geometry.hpp"
#include "polysite/traffic.hpp"
#include "polysite/wls.hpp"

// Embedded copy of the Kansas City Power & Light District case study: the
// district polygon, its rush-hour congestion table, and the figures from
// the original write-up of this dataset (kept verbatim, including the
// arithmetic slips the demo command annotates).
namespace polysite::case_study {

inline PolygonRegion district() {
    PolygonRegion region = region_from_vertices({
        {"A", {0.0, 5.25}},
        {"B", {1.25, 11.0}},
        {"C", {3.0, 12.5}},
        {"D", {19.25, 12.0}},
        {"E", {17.5, 7.5}},
        {"F", {17.0, 0.0}},
        {"G", {3.0, 0.0}},
    });
    region.name = "Power & Light District";
    return region;
}

inline std::vector<CongestionRecord> rush_hour() {
    return {
        {"AB", "morning", 2.0},    {"BC", "morning", 9.0},   {"CD", "morning", 3.0},
        {"DE", "morning", 25.0},   {"EF", "morning", 45.0},  {"FG", "morning", 15.0},
        {"GA", "morning", 1.0},    {"AB", "afternoon", 17.0}, {"BC", "afternoon", 10.0},
        {"CD", "afternoon", 30.0}, {"DE", "afternoon", 15.0}, {"EF", "afternoon", 6.0},
        {"FG", "afternoon", 10.0}, {"GA", "afternoon", 12.0},
    };
}

// The three-line triangle example: x = 0, 4x + 5y = 20, y = 0.
inline LineSystem triangle_system() {
    HesseLine s1 = hesse_normalize({1.0, 0.0, 0.0});
    HesseLine s2 = hesse_normalize({4.0, 5.0, 20.0});
    HesseLine s3 = hesse_normalize({0.0, 1.0, 0.0});
    s1.segment_id = "S1";
    s2.segment_id = "S2";
    s3.segment_id = "S3";
    return assemble({s1, s2, s3});
}

// The district system exactly as printed in the original write-up. Row 5
// (EF) does not match the segment geometry: re-deriving it from vertices
// E and F gives 0.9978x - 0.0665y = 16.962, not the printed values. The
// rows are kept verbatim because the published unweighted location (3.55,
// 5.71) only follows from them.
inline LineSystem printed_system() {
    return LineSystem{{
        {-0.977, 0.212, 1.115, "AB"},
        {-0.652, 0.761, 7.56, "BC"},
        {0.0307, 1.0, 12.586, "CD"},
        {0.932, -0.362, 13.59, "DE"},
        {0.977, -0.0665, 1.115, "EF"},
        {0.0, 1.0, 0.0, "FG"},
        {0.868, 0.4961, 2.604, "GA"},
    }};
}

// Locations as published in the original write-up.
inline constexpr Point2 kPublishedTriangle{0.9753, 1.219};
inline constexpr Point2 kPublishedUnweighted{3.55, 5.71};
inline constexpr Point2 kPublishedMorning{3.3, 3.7};
inline constexpr Point2 kPublishedAfternoon{15.9608, 7.857};

}  // namespace polysite::case_study
