#include "patloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "patloc/error.hpp"

namespace patloc {

void grid_spec::validate() const {
    if (!(d_range.first < d_range.second) || !(theta_range.first < theta_range.second))
        throw error(errc::bad_config, "grid ranges must satisfy min < max");
    if (coarse_steps.first < 16 || coarse_steps.second < 16)
        throw error(errc::bad_config, "grid needs >= 16 coarse steps per axis");
    if (!(refine_shrink >= 0.1 && refine_shrink <= 0.9))
        throw error(errc::bad_config, "refine_shrink must lie in [0.1, 0.9]");
}

max2d_result maximize_2d(const std::function<double(double, double)>& objective,
                         const grid_spec& grid) {
    grid.validate();
    max2d_result best;
    best.value = -std::numeric_limits<double>::infinity();
    std::size_t n_evals = 0;

    auto scan = [&](double d_lo, double d_hi, double t_lo, double t_hi) {
        const std::size_t nd = grid.coarse_steps.first;
        const std::size_t nt = grid.coarse_steps.second;
        for (std::size_t i = 0; i < nd; ++i) {
            double d = nd == 1 ? d_lo : d_lo + (d_hi - d_lo) * double(i) / double(nd - 1);
            for (std::size_t j = 0; j < nt; ++j) {
                double t = nt == 1 ? t_lo : t_lo + (t_hi - t_lo) * double(j) / double(nt - 1);
                double v = objective(d, t);
                ++n_evals;
                if (std::isnan(v) || std::isinf(v))
                    throw error(errc::non_finite_objective, "objective not finite on grid");
                if (v > best.value) { // strict: ties keep the lowest (d, theta) index
                    best.value = v;
                    best.d = d;
                    best.theta = t;
                }
            }
        }
    };

    double d_lo = grid.d_range.first, d_hi = grid.d_range.second;
    double t_lo = grid.theta_range.first, t_hi = grid.theta_range.second;
    scan(d_lo, d_hi, t_lo, t_hi);
    for (std::size_t r = 0; r < grid.refine_iters; ++r) {
        double dw = (d_hi - d_lo) * grid.refine_shrink;
        double tw = (t_hi - t_lo) * grid.refine_shrink;
        d_lo = std::max(grid.d_range.first, best.d - dw / 2.0);
        d_hi = std::min(grid.d_range.second, d_lo + dw);
        d_lo = d_hi - dw;
        t_lo = std::max(grid.theta_range.first, best.theta - tw / 2.0);
        t_hi = std::min(grid.theta_range.second, t_lo + tw);
        t_lo = t_hi - tw;
        scan(d_lo, d_hi, t_lo, t_hi);
    }
    best.n_evals = n_evals;
    return best;
}

scan1d_result maximize_1d(const std::function<double(double)>& objective, double lo, double hi,
                          std::size_t coarse_steps, std::size_t refine_iters,
                          double refine_shrink) {
    if (!(lo < hi) || coarse_steps < 2)
        throw error(errc::bad_config, "bad 1-D scan window");
    scan1d_result best;
    best.value = -std::numeric_limits<double>::infinity();
    best.value_min = std::numeric_limits<double>::infinity();
    std::size_t n_evals = 0;
    bool any_finite = false;

    auto scan = [&](double a, double b, std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            double x = a + (b - a) * double(j) / double(n - 1);
            double v = objective(x);
            ++n_evals;
            if (std::isnan(v))
                throw error(errc::non_finite_objective, "objective is NaN");
            if (std::isinf(v)) continue; // invalid point (e.g. pattern null): skip
            any_finite = true;
            if (v < best.value_min) best.value_min = v;
            if (v > best.value) {
                best.value = v;
                best.x = x;
            }
        }
    };

    scan(lo, hi, coarse_steps);
    if (!any_finite)
        throw error(errc::non_finite_objective, "objective invalid over the whole window");
    double a = lo, b = hi;
    const std::size_t refine_pts = 17;
    for (std::size_t r = 0; r < refine_iters; ++r) {
        double w = (b - a) * refine_shrink;
        a = std::max(lo, best.x - w / 2.0);
        b = std::min(hi, a + w);
        a = b - w;
        scan(a, b, refine_pts);
    }
    best.n_evals = n_evals;
    return best;
}

void polyline::validate() const {
    if (pts.size() < 2) throw error(errc::bad_config, "polyline needs >= 2 vertices");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i].theta_deg > pts[i - 1].theta_deg))
            throw error(errc::bad_config, "polyline theta must be strictly increasing");
}

double polyline::at(double theta_deg) const {
    const auto& p = pts;
    if (theta_deg < p.front().theta_deg || theta_deg > p.back().theta_deg)
        throw error(errc::out_of_support, "theta outside polyline domain");
    auto it = std::lower_bound(p.begin(), p.end(), theta_deg,
                               [](const polyline_vertex& v, double t) { return v.theta_deg < t; });
    if (it == p.begin()) return it->d_m;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double w = (theta_deg - lo.theta_deg) / (hi.theta_deg - lo.theta_deg);
    return lo.d_m + w * (hi.d_m - lo.d_m);
}

std::vector<intersection_point> intersect_polylines(const polyline& a, const polyline& b) {
    a.validate();
    b.validate();
    constexpr double kTouchTol = 1e-9;   // meters: tangential touch counts once
    constexpr double kCoincTol = 1e-12;  // meters: curves considered coincident

    double lo = std::max(a.theta_front(), b.theta_front());
    double hi = std::min(a.theta_back(), b.theta_back());
    if (!(lo <= hi))
        throw error(errc::no_overlap, "polyline theta intervals are disjoint");

    // Both polylines are graphs over theta, so merge the breakpoints and walk
    // elementary intervals; each is a pair of straight segments.
    std::vector<double> brk;
    brk.push_back(lo);
    for (const auto& v : a.pts)
        if (v.theta_deg > lo && v.theta_deg < hi) brk.push_back(v.theta_deg);
    for (const auto& v : b.pts)
        if (v.theta_deg > lo && v.theta_deg < hi) brk.push_back(v.theta_deg);
    brk.push_back(hi);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

    std::vector<intersection_point> out;
    auto push_point = [&](double t, double d) {
        if (!out.empty() && std::abs(out.back().theta_deg - t) < 1e-12 &&
            std::abs(out.back().d_m - d) < kTouchTol)
            return; // crossing at a shared breakpoint: seen from both sides
        out.push_back({t, d});
    };

    for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
        double t0 = brk[k], t1 = brk[k + 1];
        double f0 = a.at(t0) - b.at(t0);
        double f1 = a.at(t1) - b.at(t1);
        if (std::abs(f0) <= kCoincTol && std::abs(f1) <= kCoincTol)
            throw error(errc::degenerate_overlap, "polylines coincide over a segment");
        if (f0 == 0.0) {
            push_point(t0, a.at(t0));
            continue;
        }
        if (f1 == 0.0) continue; // handled as f0 of the next interval (or at hi below)
        if ((f0 > 0.0) != (f1 > 0.0)) {
            double w = f0 / (f0 - f1);
            double t = t0 + w * (t1 - t0);
            push_point(t, a.at(t));
        } else if (std::min(std::abs(f0), std::abs(f1)) <= kTouchTol) {
            double t = std::abs(f0) <= std::abs(f1) ? t0 : t1;
            push_point(t, a.at(t));
        }
    }
    // endpoint touch at hi: the loop above defers f1 == 0 to the next interval,
    // which does not exist for the last one
    double fhi = a.at(hi) - b.at(hi);
    if (fhi == 0.0) push_point(hi, a.at(hi));
    return out;
}

} // namespace patloc
