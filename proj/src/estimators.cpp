#include "patloc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "patloc/error.hpp"

namespace patloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFlatTol = 1e-12; // objective range below this (relative) = no information

double pow10(double x) { return std::exp(x * std::numbers::ln10); }

// 10*log10(gain), -inf at a pattern null; throws outside a tabulated domain.
double gain_db_at(const radiation_pattern& p, double phi_deg) {
    double g = p.gain_raw(angle_deg(phi_deg));
    return g > 0.0 ? 10.0 * std::log10(g) : -kInf;
}

} // namespace

const char* method_name(method m) {
    switch (m) {
        case method::eqsolve: return "eqsolve";
        case method::cid: return "cid";
        case method::mle: return "mle";
        case method::similarity: return "similarity";
    }
    return "?";
}

std::optional<method> method_from_name(const std::string& name) {
    if (name == "eqsolve") return method::eqsolve;
    if (name == "cid") return method::cid;
    if (name == "mle") return method::mle;
    if (name == "similarity") return method::similarity;
    return std::nullopt;
}

void estimator_config::validate() const {
    if (!(theta_min_deg < theta_max_deg))
        throw error(errc::bad_config, "theta_min_deg must be < theta_max_deg");
    if (!(theta_step_deg > 0.0) || theta_step_deg > (theta_max_deg - theta_min_deg) / 15.0)
        throw error(errc::bad_config, "theta_step_deg too coarse for the search range");
    if (!(refine_shrink >= 0.1 && refine_shrink <= 0.9))
        throw error(errc::bad_config, "refine_shrink must lie in [0.1, 0.9]");
}

std::vector<double> estimator_config::theta_grid() const {
    validate();
    double range = theta_max_deg - theta_min_deg;
    std::size_t count = static_cast<std::size_t>(std::lround(range / theta_step_deg)) + 1;
    if (count < 16) count = 16;
    std::vector<double> g(count);
    for (std::size_t k = 0; k < count; ++k)
        g[k] = theta_min_deg + range * double(k) / double(count - 1);
    return g;
}

polyline target_curve(const measurement_sample& m, const known_channel& kc,
                      const std::vector<double>& theta_grid_deg) {
    if (theta_grid_deg.size() < 2)
        throw error(errc::bad_config, "theta grid needs >= 2 points");
    if (!std::isfinite(m.rssi_dbm))
        throw error(errc::bad_config, "rssi must be finite");
    double const_db = 10.0 * std::log10(kc.a_squared() * kc.rx_gain);
    double inv10n = 1.0 / (10.0 * kc.path_loss_n);
    polyline c;
    c.pts.reserve(theta_grid_deg.size());
    for (double th : theta_grid_deg) {
        double gdb = gain_db_at(kc.tx_pattern, th + m.delta_phi.deg());
        double d = gdb == -kInf ? 0.0 : pow10((const_db + gdb + 30.0 - m.rssi_dbm) * inv10n);
        c.pts.push_back({th, d});
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------
// search_context

struct search_context::impl {
    known_channel kc;
    std::vector<angle_deg> schedule;
    estimator_config cfg;
    std::vector<double> thetas;            // grid, degrees
    std::vector<std::vector<double>> gdb;  // [i][k] = 10 log10 G_T(theta_k + dphi_i)
    std::vector<std::vector<double>> pcur; // [i][k] = 10^((const_db + gdb + 30)/(10n)); 0 at nulls
    double const_db = 0.0;                 // 10 log10(A^2 G_R)
    double inv10n = 0.0;

    impl(known_channel kc_, std::vector<angle_deg> sched, estimator_config cfg_)
        : kc(std::move(kc_)), schedule(std::move(sched)), cfg(cfg_) {
        cfg.validate();
        if (schedule.size() < 2)
            throw error(errc::bad_config, "need >= 2 rotation measurements");
        thetas = cfg.theta_grid();
        const_db = 10.0 * std::log10(kc.a_squared() * kc.rx_gain);
        inv10n = 1.0 / (10.0 * kc.path_loss_n);
        gdb.assign(schedule.size(), std::vector<double>(thetas.size()));
        pcur.assign(schedule.size(), std::vector<double>(thetas.size()));
        for (std::size_t i = 0; i < schedule.size(); ++i) {
            double dphi = schedule[i].deg();
            for (std::size_t k = 0; k < thetas.size(); ++k) {
                double g = gain_db_at(kc.tx_pattern, thetas[k] + dphi);
                gdb[i][k] = g;
                pcur[i][k] = g == -kInf ? 0.0 : pow10((const_db + g + 30.0) * inv10n);
            }
        }
    }

    double gdb_direct(std::size_t i, double theta_deg) const {
        return gain_db_at(kc.tx_pattern, theta_deg + schedule[i].deg());
    }

    double curve_direct(std::size_t i, double theta_deg, double b_i) const {
        double g = gdb_direct(i, theta_deg);
        return g == -kInf ? 0.0 : pow10((const_db + g + 30.0) * inv10n) * b_i;
    }

    void check_set(const measurement_set& ms) const {
        if (ms.samples.size() != schedule.size())
            throw error(errc::bad_config, "measurement count does not match the schedule");
        for (std::size_t i = 0; i < ms.samples.size(); ++i)
            if (ms.samples[i].delta_phi.deg() != schedule[i].deg())
                throw error(errc::bad_config, "measurement rotation angles do not match the schedule");
    }

    struct scan_out {
        double x = 0.0;
        double value = -kInf;
        std::size_t n_evals = 0;
    };

    // Coarse scan from per-grid-point table values, then shrink-refinement on
    // the continuous objective. -inf marks invalid points (pattern nulls) and
    // is skipped. Throws degenerate when the coarse scan sees a flat objective.
    template <class TableFn, class DirectFn>
    scan_out scan_refine(TableFn table_obj, DirectFn direct_obj) const {
        scan_out out;
        double vmin = kInf, vmax = -kInf;
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            double v = table_obj(k);
            ++out.n_evals;
            if (v == -kInf) continue;
            if (std::isnan(v)) throw error(errc::non_finite_objective, "objective is NaN");
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
            if (v > out.value) {
                out.value = v;
                out.x = thetas[k];
            }
        }
        if (vmax == -kInf)
            throw error(errc::non_finite_objective, "objective invalid across the search range");
        if (vmax - vmin <= kFlatTol * std::max(1.0, std::abs(vmax)))
            throw error(errc::degenerate, "objective carries no angle information");

        const double lo = cfg.theta_min_deg, hi = cfg.theta_max_deg;
        double a = lo, b = hi;
        const std::size_t pts = 17;
        for (std::size_t r = 0; r < cfg.refine_iters; ++r) {
            double w = (b - a) * cfg.refine_shrink;
            a = std::max(lo, out.x - w / 2.0);
            b = std::min(hi, a + w);
            a = b - w;
            for (std::size_t j = 0; j < pts; ++j) {
                double x = a + (b - a) * double(j) / double(pts - 1);
                double v = direct_obj(x);
                ++out.n_evals;
                if (v == -kInf) continue;
                if (std::isnan(v)) throw error(errc::non_finite_objective, "objective is NaN");
                if (v > out.value) {
                    out.value = v;
                    out.x = x;
                }
            }
        }
        return out;
    }

    // --- eqsolve ------------------------------------------------------------

    // Population variance of the buffered values; two passes, centered, so the
    // near-zero spreads at a noiseless optimum do not drown in cancellation.
    static double variance_of(const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= double(v.size());
        double ss = 0.0;
        for (double x : v) {
            double e = x - mean;
            ss += e * e;
        }
        return ss / double(v.size());
    }

    estimate eqsolve(const measurement_set& ms) const {
        check_set(ms);
        const std::size_t n = schedule.size();
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = pow10(-ms.samples[i].rssi_dbm * inv10n);

        std::vector<double> scratch(n);
        auto table_obj = [&](std::size_t k) {
            for (std::size_t i = 0; i < n; ++i) scratch[i] = pcur[i][k] * b[i];
            return -variance_of(scratch);
        };
        auto direct_obj = [&](double th) {
            for (std::size_t i = 0; i < n; ++i) scratch[i] = curve_direct(i, th, b[i]);
            return -variance_of(scratch);
        };
        scan_out s = scan_refine(table_obj, direct_obj);

        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += curve_direct(i, s.x, b[i]);
        mean /= double(n);
        return {mean, s.x, method::eqsolve, std::sqrt(-s.value), s.n_evals};
    }

    // --- cid ----------------------------------------------------------------

    estimate cid(const measurement_set& ms) const {
        check_set(ms);
        if (kc.tx_pattern.kind() == pattern_kind::omnidirectional)
            throw error(errc::degenerate, "omnidirectional pattern: curves cannot intersect transversally");
        const std::size_t n = schedule.size();
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = pow10(-ms.samples[i].rssi_dbm * inv10n);

        std::vector<intersection_point> singles;
        std::vector<std::vector<intersection_point>> multis;
        std::vector<intersection_point> all;

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<intersection_point> pts = pair_crossings(i, j, b);
                if (pts.empty()) continue;
                all.insert(all.end(), pts.begin(), pts.end());
                if (pts.size() == 1)
                    singles.push_back(pts[0]);
                else
                    multis.push_back(std::move(pts));
            }
        }
        if (all.empty())
            throw error(errc::no_intersections, "no target-curve pair crosses in the search range");

        std::vector<intersection_point> retained = singles;
        if (!multis.empty()) {
            intersection_point ref = median_point(singles.empty() ? all : singles);
            double dscale = std::max(d_scale(all), 1e-9);
            double tscale = cfg.theta_max_deg - cfg.theta_min_deg;
            for (const auto& pts : multis) {
                const intersection_point* best = &pts[0];
                double best_dist = kInf;
                for (const auto& p : pts) {
                    double dt = (p.theta_deg - ref.theta_deg) / tscale;
                    double dd = (p.d_m - ref.d_m) / dscale;
                    double dist = dt * dt + dd * dd;
                    if (dist < best_dist) {
                        best_dist = dist;
                        best = &p;
                    }
                }
                retained.push_back(*best);
            }
        }

        double td = 0.0, dd = 0.0;
        for (const auto& p : retained) {
            td += p.theta_deg;
            dd += p.d_m;
        }
        td /= double(retained.size());
        dd /= double(retained.size());
        double spread = 0.0;
        for (const auto& p : retained) {
            double a = p.theta_deg - td, c = p.d_m - dd;
            spread += a * a + c * c;
        }
        return {dd, td, method::cid, std::sqrt(spread / double(retained.size())),
                retained.size()};
    }

    // All crossings of curves i and j over the grid: sign-walk on the shared
    // discretization, then bisection on the continuous curves within the
    // bracketing interval (polyline crossings inherit O(step^2) interpolation
    // error otherwise).
    std::vector<intersection_point> pair_crossings(std::size_t i, std::size_t j,
                                                   const std::vector<double>& b) const {
        std::vector<intersection_point> pts;
        auto fdiff = [&](double th) { return curve_direct(i, th, b[i]) - curve_direct(j, th, b[j]); };
        auto emit = [&](double th, double d) {
            if (!pts.empty() && std::abs(pts.back().theta_deg - th) < 1e-12) return;
            pts.push_back({th, d});
        };
        double f0 = pcur[i][0] * b[i] - pcur[j][0] * b[j];
        for (std::size_t k = 0; k + 1 < thetas.size(); ++k) {
            double f1 = pcur[i][k + 1] * b[i] - pcur[j][k + 1] * b[j];
            if (f0 == 0.0) {
                emit(thetas[k], pcur[i][k] * b[i]);
            } else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0)) {
                double a = thetas[k], c = thetas[k + 1];
                double fa = f0;
                for (int it = 0; it < 60 && c - a > 1e-13 * std::max(1.0, std::abs(a)); ++it) {
                    double m = 0.5 * (a + c);
                    double fm = fdiff(m);
                    if (fm == 0.0) {
                        a = c = m;
                        break;
                    }
                    if ((fa > 0.0) == (fm > 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        c = m;
                    }
                }
                double th = 0.5 * (a + c);
                emit(th, 0.5 * (curve_direct(i, th, b[i]) + curve_direct(j, th, b[j])));
            }
            f0 = f1;
        }
        if (f0 == 0.0) emit(thetas.back(), pcur[i].back() * b[i]);
        return pts;
    }

    static intersection_point median_point(std::vector<intersection_point> pts) {
        auto mid = [&](auto key) {
            std::vector<double> v(pts.size());
            std::transform(pts.begin(), pts.end(), v.begin(), key);
            std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
            return v[v.size() / 2];
        };
        return {mid([](const intersection_point& p) { return p.theta_deg; }),
                mid([](const intersection_point& p) { return p.d_m; })};
    }

    static double d_scale(const std::vector<intersection_point>& pts) {
        std::vector<double> v(pts.size());
        std::transform(pts.begin(), pts.end(), v.begin(),
                       [](const intersection_point& p) { return std::abs(p.d_m); });
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    }

    // --- mle ----------------------------------------------------------------

    // The profile log-likelihood in theta is, up to constants, the negative
    // spread of v_i = R_i - gdb_i(theta): the d-score zero substitutes the
    // stationary distance, leaving centered dB residuals.
    estimate mle(const measurement_set& ms, double sigma_db) const {
        check_set(ms);
        if (!(sigma_db > 0.0))
            throw error(errc::bad_config, "mle requires sigma_db > 0");
        const std::size_t n = schedule.size();
        std::vector<double> scratch(n);
        auto table_obj = [&](std::size_t k) {
            for (std::size_t i = 0; i < n; ++i) {
                if (gdb[i][k] == -kInf) return -kInf;
                scratch[i] = ms.samples[i].rssi_dbm - gdb[i][k];
            }
            return -variance_of(scratch);
        };
        auto direct_obj = [&](double th) {
            for (std::size_t i = 0; i < n; ++i) {
                double g = gdb_direct(i, th);
                if (g == -kInf) return -kInf;
                scratch[i] = ms.samples[i].rssi_dbm - g;
            }
            return -variance_of(scratch);
        };
        scan_out s = scan_refine(table_obj, direct_obj);
        double d_hat = profile_distance_at(ms, s.x);
        return {d_hat, s.x, method::mle, std::sqrt(-s.value), s.n_evals};
    }

    double profile_distance_at(const measurement_set& ms, double theta_deg) const {
        const std::size_t n = schedule.size();
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double g = gdb_direct(i, theta_deg);
            if (g == -kInf)
                throw error(errc::out_of_support, "profile distance undefined at a pattern null");
            acc += const_db + g + 30.0 - ms.samples[i].rssi_dbm;
        }
        return pow10(acc * inv10n / double(n));
    }

    // --- similarity -----------------------------------------------------------

    std::size_t reference_index(const measurement_set& ms) const {
        for (std::size_t i = 0; i < ms.samples.size(); ++i)
            if (std::abs(ms.samples[i].delta_phi.deg()) < 1e-12) return i;
        throw error(errc::missing_reference, "no delta_phi = 0 reference sample");
    }

    estimate similarity(const measurement_set& ms) const {
        check_set(ms);
        if (kc.tx_pattern.kind() == pattern_kind::omnidirectional)
            throw error(errc::degenerate, "omnidirectional pattern has no angular signature");
        const std::size_t n = schedule.size();
        const std::size_t r0 = reference_index(ms);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = ms.samples[i].rssi_dbm - ms.samples[r0].rssi_dbm;

        auto templ_table = [&](std::size_t i, std::size_t k) -> double {
            if (gdb[i][k] == -kInf || gdb[r0][k] == -kInf) return kInf;
            return gdb[i][k] - gdb[r0][k];
        };
        auto templ_direct = [&](std::size_t i, double th) -> double {
            double a = gdb_direct(i, th), r = gdb_direct(r0, th);
            if (a == -kInf || r == -kInf) return kInf;
            return a - r;
        };

        auto obj_from = [&](auto&& templ) -> double {
            if (cfg.metric == similarity_metric::least_squares) {
                double ss = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double t = templ(i);
                    if (t == kInf) return -kInf;
                    double e = y[i] - t;
                    ss += e * e;
                }
                return -ss;
            }
            double my = 0.0, mt = 0.0;
            std::vector<double> t(n);
            for (std::size_t i = 0; i < n; ++i) {
                t[i] = templ(i);
                if (t[i] == kInf) return -kInf;
                my += y[i];
                mt += t[i];
            }
            my /= double(n);
            mt /= double(n);
            double syt = 0.0, syy = 0.0, stt = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                syt += (y[i] - my) * (t[i] - mt);
                syy += (y[i] - my) * (y[i] - my);
                stt += (t[i] - mt) * (t[i] - mt);
            }
            if (syy <= 0.0 || stt <= 0.0) return -kInf;
            return syt / std::sqrt(syy * stt);
        };

        auto table_obj = [&](std::size_t k) {
            return obj_from([&](std::size_t i) { return templ_table(i, k); });
        };
        auto direct_obj = [&](double th) {
            return obj_from([&](std::size_t i) { return templ_direct(i, th); });
        };
        scan_out s = scan_refine(table_obj, direct_obj);

        // distance from the target-curve mean at theta_hat (meaningful only
        // when rx_gain reflects real knowledge; callers without it use the
        // two-position fix instead)
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = pow10(-ms.samples[i].rssi_dbm * inv10n);
        double mean_d = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean_d += curve_direct(i, s.x, b[i]);
        mean_d /= double(n);

        double resid = cfg.metric == similarity_metric::least_squares
                           ? std::sqrt(-s.value / double(n))
                           : 1.0 - s.value;
        return {mean_d, s.x, method::similarity, resid, s.n_evals};
    }
};

search_context::search_context(known_channel kc, std::vector<angle_deg> schedule,
                               estimator_config cfg)
    : impl_(std::make_unique<impl>(std::move(kc), std::move(schedule), cfg)) {}

search_context::~search_context() = default;
search_context::search_context(search_context&&) noexcept = default;
search_context& search_context::operator=(search_context&&) noexcept = default;

estimate search_context::run(method m, const measurement_set& ms, double sigma_db) const {
    switch (m) {
        case method::eqsolve: return impl_->eqsolve(ms);
        case method::cid: return impl_->cid(ms);
        case method::mle: return impl_->mle(ms, sigma_db);
        case method::similarity: return impl_->similarity(ms);
    }
    throw error(errc::bad_config, "unknown method");
}

estimate search_context::eqsolve(const measurement_set& ms) const { return impl_->eqsolve(ms); }
estimate search_context::cid(const measurement_set& ms) const { return impl_->cid(ms); }
estimate search_context::mle(const measurement_set& ms, double sigma_db) const {
    return impl_->mle(ms, sigma_db);
}
estimate search_context::similarity(const measurement_set& ms) const {
    return impl_->similarity(ms);
}
const estimator_config& search_context::config() const { return impl_->cfg; }
const std::vector<angle_deg>& search_context::schedule() const { return impl_->schedule; }

namespace {

std::vector<angle_deg> schedule_of(const measurement_set& ms) {
    std::vector<angle_deg> s;
    s.reserve(ms.samples.size());
    for (const auto& m : ms.samples) s.push_back(m.delta_phi);
    return s;
}

} // namespace

estimate estimate_eqsolve(const measurement_set& ms, const known_channel& kc,
                          const estimator_config& cfg) {
    return search_context(kc, schedule_of(ms), cfg).eqsolve(ms);
}

estimate estimate_cid(const measurement_set& ms, const known_channel& kc,
                      const estimator_config& cfg) {
    return search_context(kc, schedule_of(ms), cfg).cid(ms);
}

estimate estimate_mle(const measurement_set& ms, const known_channel& kc, double sigma_db,
                      const estimator_config& cfg) {
    return search_context(kc, schedule_of(ms), cfg).mle(ms, sigma_db);
}

estimate estimate_similarity(const measurement_set& ms, const known_channel& kc,
                             const estimator_config& cfg) {
    return search_context(kc, schedule_of(ms), cfg).similarity(ms);
}

double log_likelihood(const measurement_set& ms, double d, double theta_deg,
                      const known_channel& kc, double sigma_db) {
    if (!(d > 0.0)) throw error(errc::bad_config, "candidate distance must be > 0");
    if (!(sigma_db > 0.0)) throw error(errc::bad_config, "sigma_db must be > 0");
    const double n = kc.path_loss_n;
    const double const_db = 10.0 * std::log10(kc.a_squared() * kc.rx_gain);
    double ss = 0.0;
    for (const auto& s : ms.samples) {
        double gdb = gain_db_at(kc.tx_pattern, theta_deg + s.delta_phi.deg());
        if (gdb == -kInf)
            throw error(errc::out_of_support, "candidate theta places a rotation on a pattern null");
        double mi = const_db + gdb - 10.0 * n * std::log10(d) + 30.0;
        double e = s.rssi_dbm - mi;
        ss += e * e;
    }
    const double nn = double(ms.samples.size());
    return -nn / 2.0 * std::log(2.0 * pi * sigma_db * sigma_db) - ss / (2.0 * sigma_db * sigma_db);
}

double profile_distance(const measurement_set& ms, const known_channel& kc, double theta_deg) {
    if (ms.samples.empty()) throw error(errc::bad_config, "empty measurement set");
    const double const_db = 10.0 * std::log10(kc.a_squared() * kc.rx_gain);
    double acc = 0.0;
    for (const auto& s : ms.samples) {
        double gdb = gain_db_at(kc.tx_pattern, theta_deg + s.delta_phi.deg());
        if (gdb == -kInf)
            throw error(errc::out_of_support, "profile distance undefined at a pattern null");
        acc += const_db + gdb + 30.0 - s.rssi_dbm;
    }
    return pow10(acc / (10.0 * kc.path_loss_n * double(ms.samples.size())));
}

gain_ratio_curve make_gain_ratio_curve(const measurement_set& ms) {
    const measurement_sample* ref = nullptr;
    for (const auto& s : ms.samples)
        if (std::abs(s.delta_phi.deg()) < 1e-12) {
            ref = &s;
            break;
        }
    if (!ref) throw error(errc::missing_reference, "no delta_phi = 0 reference sample");
    gain_ratio_curve c;
    c.points.reserve(ms.samples.size());
    for (const auto& s : ms.samples)
        c.points.emplace_back(s.delta_phi, pow10((s.rssi_dbm - ref->rssi_dbm) / 10.0));
    return c;
}

double estimate_theta_similarity(const gain_ratio_curve& curve, const radiation_pattern& tx,
                                 const estimator_config& cfg) {
    if (curve.points.empty()) throw error(errc::bad_config, "empty gain-ratio curve");
    // repackage the ratios as dB measurements relative to the reference and
    // reuse the context similarity scan (identical math, zero reference row)
    measurement_set ms;
    std::vector<angle_deg> sched;
    for (const auto& [dphi, ratio] : curve.points) {
        if (!(ratio > 0.0) || !std::isfinite(ratio))
            throw error(errc::bad_config, "gain ratios must be finite and > 0");
        ms.samples.push_back({dphi, 10.0 * std::log10(ratio)});
        sched.push_back(dphi);
    }
    known_channel kc;
    kc.tx_pattern = tx;
    search_context ctx(kc, sched, cfg);
    return ctx.similarity(ms).theta_hat_deg;
}

std::pair<double, double> two_position_fix(double theta0_deg, double theta1_deg,
                                           double baseline_m) {
    if (!(baseline_m > 0.0)) throw error(errc::bad_config, "baseline must be > 0");
    double s01 = std::sin(deg2rad(theta1_deg - theta0_deg));
    if (std::abs(s01) < 1e-6)
        throw error(errc::degenerate_baseline, "bearings are collinear with the baseline");
    double d0 = std::sin(deg2rad(theta1_deg)) * baseline_m / s01;
    double d1 = std::sin(deg2rad(theta0_deg)) * baseline_m / s01;
    return {d0, d1};
}

} // namespace patloc
