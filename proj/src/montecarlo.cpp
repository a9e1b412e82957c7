#include "patloc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <thread>

#include "patloc/error.hpp"
#include "patloc/rng.hpp"

namespace patloc {

const char* sweep_axis_name(sweep_axis a) {
    switch (a) {
        case sweep_axis::snr: return "snr";
        case sweep_axis::rotation_count: return "rotation_count";
        case sweep_axis::rotation_step: return "rotation_step";
    }
    return "?";
}

void sweep_config::validate() const {
    base.validate();
    est.validate();
    if (axis_values.empty()) throw error(errc::bad_config, "axis_values must be non-empty");
    if (!std::is_sorted(axis_values.begin(), axis_values.end()))
        throw error(errc::bad_config, "axis_values must be sorted ascending");
    if (trials == 0) throw error(errc::bad_config, "trials must be >= 1");
    if (methods.empty()) throw error(errc::bad_config, "no methods requested");
    if (axis != sweep_axis::snr)
        for (double v : axis_values)
            if (!(v > 0.0)) throw error(errc::bad_config, "axis values must be > 0");
}

namespace {

double uniform_schedule_step(const scenario& base) {
    if (base.rotations.size() < 2)
        throw error(errc::bad_config, "base schedule needs >= 2 rotations");
    double step = base.rotations[1].deg() - base.rotations[0].deg();
    if (!(std::abs(step) > 0.0))
        throw error(errc::bad_config, "base schedule step must be nonzero");
    return step;
}

std::vector<angle_deg> uniform_schedule(std::size_t count, double step_deg) {
    std::vector<angle_deg> r;
    r.reserve(count);
    for (std::size_t i = 0; i < count; ++i) r.emplace_back(step_deg * double(i));
    return r;
}

} // namespace

scenario scenario_for_axis(const sweep_config& cfg, double axis_value) {
    scenario sc = cfg.base;
    switch (cfg.axis) {
        case sweep_axis::snr:
            sc.sigma_db = snr_to_sigma(axis_value, cfg.sigma_ref_db);
            break;
        case sweep_axis::rotation_count: {
            double n = axis_value;
            if (n != std::floor(n) || n < 2.0)
                throw error(errc::bad_config, "rotation_count axis values must be integers >= 2");
            sc.rotations = uniform_schedule(std::size_t(n), uniform_schedule_step(cfg.base));
            break;
        }
        case sweep_axis::rotation_step:
            sc.rotations = uniform_schedule(cfg.base.rotations.size(), axis_value);
            break;
    }
    sc.validate();
    return sc;
}

std::uint64_t fnv1a(const void* data, std::size_t nbytes) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < nbytes; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t measurement_checksum(const measurement_set& ms) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : ms.samples) {
        double v[2] = {s.delta_phi.deg(), s.rssi_dbm};
        unsigned char buf[sizeof v];
        std::memcpy(buf, v, sizeof v);
        for (unsigned char b : buf) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

std::vector<std::pair<double, double>> true_position_sampler(
    std::pair<double, double> d_range, std::pair<double, double> theta_range, std::size_t count,
    std::uint64_t seed) {
    if (!(d_range.first < d_range.second) || !(theta_range.first < theta_range.second))
        throw error(errc::bad_config, "position ranges must satisfy min < max");
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> ud(d_range.first, d_range.second);
    std::uniform_real_distribution<double> ut(theta_range.first, theta_range.second);
    for (std::size_t i = 0; i < count; ++i) {
        double d = ud(rng);
        double t = ut(rng);
        out.emplace_back(d, t);
    }
    return out;
}

namespace {

struct trial_task_result {
    std::vector<trial_outcome> per_method; // indexed like cfg.methods
    double crlb_d = 0.0;
    double crlb_theta_deg2 = 0.0;
    bool crlb_ok = false;
};

trial_task_result run_trial(const sweep_config& cfg, const scenario& axis_sc,
                            const search_context& ctx, double d0, double theta0,
                            std::uint64_t meas_seed) {
    scenario sc = axis_sc;
    sc.true_d = d0;
    sc.true_theta = angle_deg(theta0);
    measurement_set ms = sample_measurements(sc, meas_seed);
    std::uint64_t csum = measurement_checksum(ms);

    trial_task_result res;
    res.per_method.resize(cfg.methods.size());
    double sigma_for_mle = sc.sigma_db > 0.0 ? sc.sigma_db : 1.0;
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        trial_outcome& o = res.per_method[mi];
        o.checksum = csum;
        try {
            estimate e = ctx.run(cfg.methods[mi], ms, sigma_for_mle);
            double ed = e.d_hat - d0;
            double et = e.theta_hat_deg - theta0;
            o.ok = true;
            o.err_d = ed;
            o.err_d2 = ed * ed;
            o.err_theta2_deg2 = et * et;
        } catch (const error&) {
            o.ok = false;
        }
    }
    if (sc.sigma_db > 0.0) {
        try {
            unbiased_bounds u = crlb_unbiased(sc, d0, theta0);
            res.crlb_d = u.var_d;
            res.crlb_theta_deg2 = u.var_theta * rad2deg(1.0) * rad2deg(1.0);
            res.crlb_ok = true;
        } catch (const error&) {
            res.crlb_ok = false;
        }
    }
    return res;
}

} // namespace

sweep_result run_sweep(const sweep_config& cfg) {
    cfg.validate();
    sweep_result result;
    result.blocks.reserve(cfg.axis_values.size());

    for (std::size_t a = 0; a < cfg.axis_values.size(); ++a) {
        scenario axis_sc = scenario_for_axis(cfg, cfg.axis_values[a]);
        search_context ctx(known_channel::from(axis_sc), axis_sc.rotations, cfg.est);

        std::vector<std::pair<double, double>> positions;
        if (cfg.averaged_positions) {
            positions = true_position_sampler(cfg.pos_d_range, cfg.pos_theta_range, cfg.trials,
                                              derive_seed(cfg.master_seed, a, 0x706f73));
        } else {
            positions.assign(cfg.trials, {cfg.base.true_d, cfg.base.true_theta.deg()});
        }

        std::vector<trial_task_result> slots(cfg.trials);
        auto worker_loop = [&](std::atomic<std::size_t>& next) {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= cfg.trials) break;
                slots[t] = run_trial(cfg, axis_sc, ctx, positions[t].first, positions[t].second,
                                     derive_seed(cfg.master_seed, a, t));
            }
        };
        std::size_t jobs = cfg.jobs;
        if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
        if (jobs <= 1) {
            std::atomic<std::size_t> next{0};
            worker_loop(next);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (std::size_t w = 0; w < jobs; ++w)
                pool.emplace_back([&] { worker_loop(next); });
            for (auto& th : pool) th.join();
        }

        // aggregate in fixed trial order
        axis_block block;
        block.axis_value = cfg.axis_values[a];
        block.sigma_db = axis_sc.sigma_db;
        block.series.resize(cfg.methods.size());
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
            block.series[mi].m = cfg.methods[mi];
            block.series[mi].trials.reserve(cfg.trials);
        }
        double crlb_d_acc = 0.0, crlb_t_acc = 0.0;
        std::size_t crlb_n = 0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const trial_task_result& r = slots[t];
            for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
                if (r.per_method[mi].checksum != r.per_method[0].checksum)
                    throw error(errc::bad_config, "paired-trial checksum mismatch across methods");
                block.series[mi].trials.push_back(r.per_method[mi]);
            }
            if (r.crlb_ok) {
                crlb_d_acc += r.crlb_d;
                crlb_t_acc += r.crlb_theta_deg2;
                ++crlb_n;
            }
        }
        if (crlb_n > 0) {
            block.crlb_d_m2 = crlb_d_acc / double(crlb_n);
            block.crlb_theta_deg2 = crlb_t_acc / double(crlb_n);
        }

        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
            const auto& trials = block.series[mi].trials;
            std::size_t n_ok = 0;
            double sum_d2 = 0.0, sum_t2 = 0.0, sum_ed = 0.0;
            for (const auto& o : trials)
                if (o.ok) {
                    ++n_ok;
                    sum_d2 += o.err_d2;
                    sum_t2 += o.err_theta2_deg2;
                    sum_ed += o.err_d;
                }
            double fail_rate = double(cfg.trials - n_ok) / double(cfg.trials);
            if (fail_rate > 0.5)
                throw error(errc::degenerate,
                            std::string("more than half the trials failed for ") +
                                method_name(cfg.methods[mi]) + " at axis value " +
                                std::to_string(cfg.axis_values[a]));
            sweep_row row;
            row.axis_value = cfg.axis_values[a];
            row.m = cfg.methods[mi];
            row.fail_rate = fail_rate;
            row.crlb_d_m2 = block.crlb_d_m2;
            row.crlb_theta_deg2 = block.crlb_theta_deg2;
            if (n_ok > 0) {
                row.mse_d_m2 = sum_d2 / double(n_ok);
                row.mse_theta_deg2 = sum_t2 / double(n_ok);
                row.bias_d_m = sum_ed / double(n_ok);
                double var_d2 = 0.0, var_t2 = 0.0;
                for (const auto& o : trials)
                    if (o.ok) {
                        var_d2 += (o.err_d2 - row.mse_d_m2) * (o.err_d2 - row.mse_d_m2);
                        var_t2 += (o.err_theta2_deg2 - row.mse_theta_deg2) *
                                  (o.err_theta2_deg2 - row.mse_theta_deg2);
                    }
                if (n_ok > 1) {
                    row.se_mse_d = std::sqrt(var_d2 / double(n_ok - 1) / double(n_ok));
                    row.se_mse_theta = std::sqrt(var_t2 / double(n_ok - 1) / double(n_ok));
                }
            }
            result.rows.push_back(row);
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

void write_sweep_csv(const sweep_result& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::bad_config, "cannot write " + path);
    out << "axis_value,method,mse_d_m2,se_mse_d,mse_theta_deg2,se_mse_theta,"
           "bias_d_m,crlb_d_m2,crlb_theta_deg2,fail_rate\n";
    char buf[512];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%.10g,%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                      row.axis_value, method_name(row.m), row.mse_d_m2, row.se_mse_d,
                      row.mse_theta_deg2, row.se_mse_theta, row.bias_d_m, row.crlb_d_m2,
                      row.crlb_theta_deg2, row.fail_rate);
        out << buf;
    }
}

} // namespace patloc
