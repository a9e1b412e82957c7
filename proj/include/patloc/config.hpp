#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "patloc/estimators.hpp"
#include "patloc/montecarlo.hpp"

namespace patloc {

/// Flat key = value config file (TOML subset: scalars, quoted strings and
/// [a, b, c] lists; # comments). Every key must be consumed by a getter;
/// ensure_all_consumed() turns typos into hard errors.
class kv_config {
public:
    static kv_config parse_file(const std::string& path);
    static kv_config parse_string(const std::string& text, const std::string& origin = "<inline>");

    /// Set/replace a raw value, e.g. from a CLI override "key=value".
    void set(const std::string& key, const std::string& raw_value);

    bool has(const std::string& key) const;

    double get_double(const std::string& key, double def);
    double require_double(const std::string& key);
    std::int64_t get_int(const std::string& key, std::int64_t def);
    std::uint64_t get_uint(const std::string& key, std::uint64_t def);
    std::string get_string(const std::string& key, const std::string& def);
    std::vector<double> get_list(const std::string& key, std::vector<double> def);
    std::vector<std::string> get_string_list(const std::string& key,
                                             std::vector<std::string> def);

    /// Throws bad_config naming every key no getter asked for.
    void ensure_all_consumed() const;

    const std::string& origin() const { return origin_; }

private:
    std::string raw(const std::string& key); // marks consumed
    std::string origin_;
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

/// Scenario keys: pt_mw, lambda_mm, path_loss_n, sigma_db | snr_db (+
/// sigma_ref_db), d0_m, theta0_deg, rotations_deg | rotation_count +
/// rotation_step_deg, tx_pattern (asymmetric|dipole|omni|csv), tx_epsilon,
/// tx_skew_deg, tx_gain_db, tx_pattern_csv, rx_pattern, rx_gain_db,
/// rx_pattern_csv, rx_angle_deg.
scenario scenario_from_config(kv_config& kv);

void write_scenario_config(const scenario& sc, const std::string& path);

/// Search keys: theta_min_deg, theta_max_deg, theta_step_deg, refine_iters,
/// refine_shrink, similarity_metric (lsq|correlation).
estimator_config estimator_from_config(kv_config& kv);

/// Sweep keys: axis (snr|rotation_count|rotation_step), axis_values, trials,
/// methods, master_seed, position_mode (averaged|fixed), pos_d_min_m,
/// pos_d_max_m, pos_theta_min_deg, pos_theta_max_deg; plus all scenario and
/// search keys for the base scenario.
sweep_config sweep_from_config(kv_config& kv);

} // namespace patloc
