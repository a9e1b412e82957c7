#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "patloc/bounds.hpp"
#include "patloc/channel.hpp"
#include "patloc/estimators.hpp"

namespace patloc {

enum class sweep_axis { snr, rotation_count, rotation_step };

const char* sweep_axis_name(sweep_axis a);

struct sweep_config {
    scenario base;                 // channel constants; position when not averaging
    sweep_axis axis = sweep_axis::snr;
    std::vector<double> axis_values;
    std::size_t trials = 2000;
    std::vector<method> methods{method::eqsolve, method::cid, method::mle};
    std::uint64_t master_seed = 1;
    bool averaged_positions = true; // fresh true position per trial
    std::pair<double, double> pos_d_range{0.5, 5.0};
    std::pair<double, double> pos_theta_range{-70.0, 70.0};
    estimator_config est;
    double sigma_ref_db = 2.0;     // sigma at SNR = 0 for the snr axis
    std::size_t jobs = 1;          // worker threads; results identical for any value

    void validate() const;
};

struct trial_outcome {
    bool ok = false;
    double err_d = 0.0;            // d_hat - d0, meters
    double err_d2 = 0.0;           // squared, m^2
    double err_theta2_deg2 = 0.0;  // squared angle error, deg^2
    std::uint64_t checksum = 0;    // FNV-1a over the rssi samples used
};

struct method_series {
    method m = method::mle;
    std::vector<trial_outcome> trials; // fixed trial order
};

struct axis_block {
    double axis_value = 0.0;
    double sigma_db = 0.0;
    std::vector<method_series> series;
    double crlb_d_m2 = 0.0;        // mean over trial positions; 0 when sigma = 0
    double crlb_theta_deg2 = 0.0;
};

struct sweep_row {
    double axis_value = 0.0;
    method m = method::mle;
    double mse_d_m2 = 0.0;
    double se_mse_d = 0.0;
    double mse_theta_deg2 = 0.0;
    double se_mse_theta = 0.0;
    double bias_d_m = 0.0;
    double crlb_d_m2 = 0.0;
    double crlb_theta_deg2 = 0.0;
    double fail_rate = 0.0;
};

struct sweep_result {
    std::vector<sweep_row> rows;     // axis-major, then method order of the config
    std::vector<axis_block> blocks;  // per-trial records backing the rows
};

/// Per-axis-value scenario: snr maps to sigma via snr_to_sigma, the other
/// axes rebuild the rotation schedule (uniform step) from the base one.
scenario scenario_for_axis(const sweep_config& cfg, double axis_value);

/// Paired Monte-Carlo sweep: per (axis, trial) one measurement set feeds
/// every requested method. Estimator failures count toward fail_rate and are
/// excluded from the MSE; more than 50% failures at an axis point aborts.
sweep_result run_sweep(const sweep_config& cfg);

/// Uniform independent (d0, theta0) draws, deterministic under seed.
std::vector<std::pair<double, double>> true_position_sampler(
    std::pair<double, double> d_range, std::pair<double, double> theta_range, std::size_t count,
    std::uint64_t seed);

void write_sweep_csv(const sweep_result& r, const std::string& path);

std::uint64_t fnv1a(const void* data, std::size_t nbytes);
std::uint64_t measurement_checksum(const measurement_set& ms);

} // namespace patloc
