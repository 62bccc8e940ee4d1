#pragma once

#include <utility>

#include "polysite/errors.hpp"
#include "polysite/geometry.hpp"

namespace polysite {

// Rectangle scanned by grid_minimize(). Each level evaluates a
// points_per_axis^2 grid, then recenters a box of 4x the grid spacing on
// the best point found so far.
struct SearchBox {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
    int levels = 1;
    int points_per_axis = 10;
};

// Covers the case-study district with margin; final spacing ~7.7e-7 map
// units after 5 levels at 101 points per axis.
inline SearchBox default_search_box() {
    return SearchBox{-5.0, 25.0, -5.0, 25.0, 5, 101};
}

struct OracleResult {
    Point2 point;
    double value = 0.0;
    double resolution = 0.0;  // grid spacing of the last level
};

// Coarse-to-fine brute-force minimization of f over the box. Deterministic:
// evaluation order is fixed and ties go to the smallest x, then smallest y.
// The best value never increases across levels.
template <class F>
OracleResult grid_minimize(F&& f, const SearchBox& box) {
    if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax)) {
        throw InvalidBox("grid_minimize: empty or inverted box");
    }
    if (box.levels < 1) {
        throw InvalidBox("grid_minimize: levels must be >= 1");
    }
    if (box.points_per_axis < 10) {
        throw InvalidBox("grid_minimize: points_per_axis must be >= 10");
    }

    double xmin = box.xmin;
    double xmax = box.xmax;
    double ymin = box.ymin;
    double ymax = box.ymax;
    const int n = box.points_per_axis;

    bool have_best = false;
    double best_value = 0.0;
    double best_x = 0.0;
    double best_y = 0.0;
    double hx = 0.0;
    double hy = 0.0;

    for (int level = 0; level < box.levels; ++level) {
        hx = (xmax - xmin) / (n - 1);
        hy = (ymax - ymin) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = xmin + i * hx;
            for (int j = 0; j < n; ++j) {
                const double y = ymin + j * hy;
                const double value = f(Point2{x, y});
                const bool better =
                    !have_best || value < best_value ||
                    (value == best_value && (x < best_x || (x == best_x && y < best_y)));
                if (better) {
                    have_best = true;
                    best_value = value;
                    best_x = x;
                    best_y = y;
                }
            }
        }
        xmin = best_x - 2.0 * hx;
        xmax = best_x + 2.0 * hx;
        ymin = best_y - 2.0 * hy;
        ymax = best_y + 2.0 * hy;
    }
    return OracleResult{Point2{best_x, best_y}, best_value, hx > hy ? hx : hy};
}

// Central finite differences with step h > 0.
template <class F>
std::pair<double, double> fd_gradient(F&& f, const Point2& p, double h) {
    const double gx = (f(Point2{p.x + h, p.y}) - f(Point2{p.x - h, p.y})) / (2.0 * h);
    const double gy = (f(Point2{p.x, p.y + h}) - f(Point2{p.x, p.y - h})) / (2.0 * h);
    return {gx, gy};
}

}  // namespace polysite
