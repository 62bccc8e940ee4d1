#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "polysite/errors.hpp"

namespace polysite {

// Points within this distance of a boundary segment count as on the boundary.
inline constexpr double kBoundaryTol = 1e-9;

// A location in the local planar map frame (map units east / north).
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// The line a*x + b*y = c. Any nonzero scalar multiple describes the same
// line; canonicalization happens in hesse_normalize().
struct LineCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// A line in Hesse normal form: nx*x + ny*y = d with unit normal (nx, ny),
// so |nx*p.x + ny*p.y - d| is the Euclidean distance from p to the line.
// Canonical orientation: d >= 0, and when d == 0, nx > 0 or (nx == 0 and
// ny > 0), which makes equal lines compare equal fieldwise.
struct HesseLine {
    double nx = 0.0;
    double ny = 0.0;
    double d = 0.0;
    std::string segment_id;  // optional, e.g. "AB"
};

struct NamedVertex {
    std::string id;
    Point2 position;
};

// Closed polygon given by ordered named vertices. `lines` holds the Hesse
// line of each edge, one per consecutive vertex pair including the closing
// pair; segment_id is the two vertex ids concatenated.
struct PolygonRegion {
    std::string name;
    std::vector<NamedVertex> vertices;
    std::vector<HesseLine> lines;
};

// Line through two distinct points, as unnormalized coefficients.
inline LineCoefficients line_through_points(const Point2& p, const Point2& q) {
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    if (std::abs(dx) <= 1e-12 && std::abs(dy) <= 1e-12) {
        throw DegeneratePoints("line_through_points: points coincide");
    }
    // (a, b) is the left normal of the direction (dx, dy).
    const double a = dy;
    const double b = -dx;
    return LineCoefficients{a, b, a * p.x + b * p.y};
}

// Rescale to unit normal and canonical sign.
inline HesseLine hesse_normalize(const LineCoefficients& l) {
    const double norm = std::hypot(l.a, l.b);
    if (norm == 0.0) {
        throw ZeroLine("hesse_normalize: a and b are both zero");
    }
    double nx = l.a / norm;
    double ny = l.b / norm;
    double d = l.c / norm;
    const bool flip = d < 0.0 || (d == 0.0 && (nx < 0.0 || (nx == 0.0 && ny < 0.0)));
    if (flip) {
        nx = -nx;
        ny = -ny;
        d = -d;
    }
    // Collapse -0.0 so equal lines are fieldwise identical.
    if (nx == 0.0) nx = 0.0;
    if (ny == 0.0) ny = 0.0;
    if (d == 0.0) d = 0.0;
    return HesseLine{nx, ny, d, {}};
}

// Signed perpendicular distance from p to the line; the sign tells which
// side of the line p lies on.
inline double signed_distance(const HesseLine& h, const Point2& p) {
    return h.nx * p.x + h.ny * p.y - h.d;
}

inline PolygonRegion region_from_vertices(std::vector<NamedVertex> vertices) {
    if (vertices.size() < 3) {
        throw TooFewVertices("region_from_vertices: need at least 3 vertices, got " +
                             std::to_string(vertices.size()));
    }
    PolygonRegion region;
    region.vertices = std::move(vertices);
    const std::size_t n = region.vertices.size();
    region.lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const NamedVertex& from = region.vertices[i];
        const NamedVertex& to = region.vertices[(i + 1) % n];
        HesseLine line = hesse_normalize(line_through_points(from.position, to.position));
        line.segment_id = from.id + to.id;
        region.lines.push_back(std::move(line));
    }
    return region;
}

namespace detail {

inline double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double len2 = ex * ex + ey * ey;
    double t = len2 > 0.0 ? ((p.x - a.x) * ex + (p.y - a.y) * ey) / len2 : 0.0;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return std::hypot(p.x - (a.x + t * ex), p.y - (a.y + t * ey));
}

}  // namespace detail

// Even-odd ray casting; points within kBoundaryTol of a boundary segment
// count as inside.
inline bool contains(const PolygonRegion& r, const Point2& p) {
    const std::size_t n = r.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = r.vertices[i].position;
        const Point2& b = r.vertices[(i + 1) % n].position;
        if (detail::distance_to_segment(p, a, b) <= kBoundaryTol) {
            return true;
        }
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = r.vertices[i].position;
        const Point2& b = r.vertices[(i + 1) % n].position;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) {
                inside = !inside;
            }
        }
    }
    return inside;
}

}  // namespace polysite
