#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polysite/errors.hpp"
#include "polysite/geometry.hpp"

namespace polysite {

// A weighted normal matrix whose relative determinant det/(trace^2/4) falls
// below this is treated as singular (all effective lines near-parallel).
inline constexpr double kSingularRelDet = 1e-12;

// Overdetermined system over (x, y): row i asks nx_i*x + ny_i*y = d_i.
struct LineSystem {
    std::vector<HesseLine> rows;

    std::size_t size() const { return rows.size(); }
};

// Nonnegative per-row weights; labels (when present) name the segments.
struct WeightVector {
    std::vector<double> w;
    std::vector<std::string> labels;
};

inline WeightVector uniform_weights(std::size_t n, double value = 1.0) {
    return WeightVector{std::vector<double>(n, value), {}};
}

// Minimizer of the weighted sum of squared signed distances, with
// diagnostics. residuals[i] is the signed distance of row i at `point`.
struct Solution {
    Point2 point;
    double objective = 0.0;
    double gradient_norm = 0.0;
    double condition = 0.0;
    std::vector<double> residuals;
};

inline LineSystem assemble(std::vector<HesseLine> lines) {
    if (lines.size() < 2) {
        throw TooFewLines("assemble: need at least 2 lines, got " +
                          std::to_string(lines.size()));
    }
    return LineSystem{std::move(lines)};
}

namespace detail {

inline void require_matching_length(const LineSystem& s, const WeightVector& w) {
    if (w.w.size() != s.rows.size()) {
        throw LengthMismatch("weight vector has " + std::to_string(w.w.size()) +
                             " entries for " + std::to_string(s.rows.size()) + " rows");
    }
}

// 2x2 normal system sum of w_i^2 * n_i n_i^T and right-hand side
// sum of w_i^2 * d_i n_i.
struct NormalSystem {
    double m00 = 0.0;
    double m01 = 0.0;
    double m11 = 0.0;
    double v0 = 0.0;
    double v1 = 0.0;

    double det() const { return m00 * m11 - m01 * m01; }
    double trace() const { return m00 + m11; }
};

inline NormalSystem weighted_normal(const LineSystem& s, const WeightVector& w) {
    NormalSystem n;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const HesseLine& row = s.rows[i];
        const double w2 = w.w[i] * w.w[i];
        n.m00 += w2 * row.nx * row.nx;
        n.m01 += w2 * row.nx * row.ny;
        n.m11 += w2 * row.ny * row.ny;
        n.v0 += w2 * row.nx * row.d;
        n.v1 += w2 * row.ny * row.d;
    }
    return n;
}

inline double relative_det(const NormalSystem& n) {
    const double half_trace = n.trace() / 2.0;
    return n.det() / (half_trace * half_trace);
}

}  // namespace detail

// Weighted objective: sum of w_i^2 * signed_distance_i(p)^2. With all
// weights 1 this is the plain sum of squared distances.
inline double objective(const LineSystem& s, const WeightVector& w, const Point2& p) {
    detail::require_matching_length(s, w);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const double r = w.w[i] * signed_distance(s.rows[i], p);
        sum += r * r;
    }
    return sum;
}

// Analytic gradient of objective() at p.
inline std::pair<double, double> objective_gradient(const LineSystem& s, const WeightVector& w,
                                                    const Point2& p) {
    detail::require_matching_length(s, w);
    double gx = 0.0;
    double gy = 0.0;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const HesseLine& row = s.rows[i];
        const double scale = 2.0 * w.w[i] * w.w[i] * signed_distance(row, p);
        gx += scale * row.nx;
        gy += scale * row.ny;
    }
    return {gx, gy};
}

// Eigenvalue ratio of the weighted normal matrix; 1 for perfectly
// conditioned geometry, large when the effective lines are near-parallel.
inline double condition_number(const LineSystem& s, const WeightVector& w) {
    detail::require_matching_length(s, w);
    const detail::NormalSystem n = detail::weighted_normal(s, w);
    const double disc = std::hypot(n.m00 - n.m11, 2.0 * n.m01);
    const double lambda_max = (n.trace() + disc) / 2.0;
    const double lambda_min = lambda_max > 0.0 ? n.det() / lambda_max : 0.0;
    if (!(lambda_min > 1e-15)) {
        throw SingularNormalMatrix("condition_number: smallest eigenvalue is zero");
    }
    return lambda_max / lambda_min;
}

// Closed-form weighted least squares via the 2x2 normal equations:
// minimizes sum of w_i^2 * signed_distance_i(p)^2. Rows with zero weight
// stay in the residual list but contribute nothing to the fit.
inline Solution solve_wls(const LineSystem& s, const WeightVector& w) {
    detail::require_matching_length(s, w);
    const detail::NormalSystem n = detail::weighted_normal(s, w);
    const double det = n.det();
    if (!(detail::relative_det(n) > kSingularRelDet)) {
        throw SingularNormalMatrix("solve_wls: weighted normal matrix is singular "
                                   "(all effective lines near-parallel)");
    }
    Solution sol;
    sol.point.x = (n.m11 * n.v0 - n.m01 * n.v1) / det;
    sol.point.y = (n.m00 * n.v1 - n.m01 * n.v0) / det;
    sol.residuals.reserve(s.rows.size());
    for (const HesseLine& row : s.rows) {
        sol.residuals.push_back(signed_distance(row, sol.point));
    }
    sol.objective = objective(s, w, sol.point);
    const auto [gx, gy] = objective_gradient(s, w, sol.point);
    sol.gradient_norm = std::hypot(gx, gy);
    const double disc = std::hypot(n.m00 - n.m11, 2.0 * n.m01);
    const double lambda_max = (n.trace() + disc) / 2.0;
    sol.condition = lambda_max / (det / lambda_max);
    return sol;
}

// Ordinary least squares: all weights 1.
inline Solution solve_ls(const LineSystem& s) {
    return solve_wls(s, uniform_weights(s.rows.size()));
}

}  // namespace polysite
