#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace patloc {

/// Coarse-grid + shrink-refinement search window. Final bracket width is
/// range * refine_shrink^refine_iters per axis.
struct grid_spec {
    std::pair<double, double> d_range{0.1, 20.0};     // meters
    std::pair<double, double> theta_range{-88.0, 88.0}; // degrees
    std::pair<std::size_t, std::size_t> coarse_steps{64, 176}; // (n_d, n_theta) point counts
    std::size_t refine_iters = 30;
    double refine_shrink = 0.5;

    void validate() const;
};

struct max2d_result {
    double d = 0.0;
    double theta = 0.0;
    double value = 0.0;
    std::size_t n_evals = 0;
};

/// Deterministic maximization of objective(d, theta) over the grid window:
/// coarse scan, then refine_iters rounds of shrink-and-rescan around the
/// incumbent. Ties resolve to the lowest (d, then theta) grid index.
/// Throws non_finite_objective if any evaluated point is NaN/inf.
max2d_result maximize_2d(const std::function<double(double, double)>& objective,
                         const grid_spec& grid);

struct scan1d_result {
    double x = 0.0;
    double value = 0.0;
    std::size_t n_evals = 0;
    double value_min = 0.0; // smallest objective seen (flatness diagnostics)
};

/// 1-D analogue of maximize_2d over [lo, hi]; shared by the profile-likelihood
/// and curve-consistency estimators. Objective values of -inf mark invalid
/// points (pattern nulls) and are skipped rather than raised.
scan1d_result maximize_1d(const std::function<double(double)>& objective, double lo, double hi,
                          std::size_t coarse_steps, std::size_t refine_iters,
                          double refine_shrink);

struct polyline_vertex {
    double theta_deg; // strictly increasing across a polyline
    double d_m;
};

/// Piecewise-linear graph of a target curve d(theta).
struct polyline {
    std::vector<polyline_vertex> pts;

    void validate() const;
    double theta_front() const { return pts.front().theta_deg; }
    double theta_back() const { return pts.back().theta_deg; }
    /// Linear interpolation; theta must lie within [front, back].
    double at(double theta_deg) const;
};

struct intersection_point {
    double theta_deg;
    double d_m;
};

/// Every transversal crossing of two polylines over their shared theta
/// interval. Tangential touches within 1e-9 m count once. Throws
/// no_overlap when the theta intervals are disjoint and
/// degenerate_overlap when the curves coincide over a segment.
std::vector<intersection_point> intersect_polylines(const polyline& a, const polyline& b);

} // namespace patloc
