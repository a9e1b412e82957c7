#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patloc/channel.hpp"
#include "patloc/pattern.hpp"
#include "patloc/solver.hpp"

namespace patloc {

/// The quantities an estimator is allowed to know: channel constants,
/// the transmit pattern and the (known-receiver case) scalar receive gain.
struct known_channel {
    double pt_mw = 100.0;
    double lambda_m = 0.125;
    double path_loss_n = 4.0;
    radiation_pattern tx_pattern = radiation_pattern::omni();
    double rx_gain = 1.0; // linear G_R

    double a_squared() const { return pt_mw * 1e-3 * lambda_m * lambda_m / (16.0 * pi * pi); }

    static known_channel from(const scenario& sc) {
        return {sc.pt_mw, sc.lambda_m, sc.path_loss_n, sc.tx_pattern, sc.rx_gain()};
    }
};

enum class method { eqsolve, cid, mle, similarity };

const char* method_name(method m);
std::optional<method> method_from_name(const std::string& name);

struct estimate {
    double d_hat = 0.0;        // meters
    double theta_hat_deg = 0.0;
    method tag = method::mle;
    double residual = 0.0;     // method-specific fit residual
    std::size_t n_points = 0;  // intersections (cid) or objective evaluations
};

enum class similarity_metric { least_squares, correlation };

/// Shared search settings. All methods scan the same theta grid so that
/// paired comparisons see identical discretization.
struct estimator_config {
    double theta_min_deg = -88.0;
    double theta_max_deg = 88.0;
    double theta_step_deg = 0.1;  // curve discretization and coarse-scan step
    std::size_t refine_iters = 30;
    double refine_shrink = 0.5;
    similarity_metric metric = similarity_metric::least_squares;

    std::vector<double> theta_grid() const;
    void validate() const;
};

/// Locus of (theta, d) consistent with one RSSI sample under known channel:
/// d(theta) = (A^2 G_T(theta+dphi) G_R)^(1/n) * 10^(-(rssi-30)/(10n)).
polyline target_curve(const measurement_sample& m, const known_channel& kc,
                      const std::vector<double>& theta_grid_deg);

/// Theta minimizing the spread of the N per-curve distances (least-squares
/// consistency of the equation system); d_hat is their mean at that theta.
estimate estimate_eqsolve(const measurement_set& ms, const known_channel& kc,
                          const estimator_config& cfg);

/// Curve intersection detection: pairwise crossings of the N target curves,
/// averaged. Pairs with several crossings keep the one nearest the median
/// of the unambiguous ones. Throws no_intersections when no pair crosses.
estimate estimate_cid(const measurement_set& ms, const known_channel& kc,
                      const estimator_config& cfg);

/// Gaussian log-likelihood of the samples at candidate (d, theta).
double log_likelihood(const measurement_set& ms, double d, double theta_deg,
                      const known_channel& kc, double sigma_db);

/// Closed-form stationary d given theta (the score in d is linear in log d):
/// log10 d = sum_i(c_i(theta) + 30 - R_i) / (10 n N).
double profile_distance(const measurement_set& ms, const known_channel& kc, double theta_deg);

/// Maximum-likelihood estimate via profile likelihood: 1-D search in theta
/// with the closed-form d(theta) substituted. sigma_db scales the reported
/// likelihood only; the argmax does not depend on it.
estimate estimate_mle(const measurement_set& ms, const known_channel& kc, double sigma_db,
                      const estimator_config& cfg);

/// Receiver-gain-free measurement signature: ratio_i = 10^((R_i - R_0)/10)
/// relative to the delta_phi = 0 reference sample.
struct gain_ratio_curve {
    std::vector<std::pair<angle_deg, double>> points; // (delta_phi, linear ratio)
};

gain_ratio_curve make_gain_ratio_curve(const measurement_set& ms);

/// Angle whose normalized pattern signature best matches the measured
/// gain-ratio curve (dB-domain least squares, or correlation).
double estimate_theta_similarity(const gain_ratio_curve& curve, const radiation_pattern& tx,
                                 const estimator_config& cfg);

/// Similarity angle estimate plus a distance from the target-curve mean at
/// that angle (usable only when rx gain is actually known).
estimate estimate_similarity(const measurement_set& ms, const known_channel& kc,
                             const estimator_config& cfg);

/// Triangulate from two bearings taken a known baseline apart (baseline along
/// the theta = 0 axis): d0 = sin(theta1) m / sin(theta1 - theta0), and
/// d1 = sin(theta0) m / sin(theta1 - theta0).
std::pair<double, double> two_position_fix(double theta0_deg, double theta1_deg,
                                           double baseline_m);

/// Reusable search state for one (channel, rotation schedule, config)
/// triple: pattern gains precomputed over the theta grid. Monte-Carlo
/// sweeps run thousands of measurement sets against one context.
/// Immutable after construction; safe to share across threads.
class search_context {
public:
    search_context(known_channel kc, std::vector<angle_deg> schedule, estimator_config cfg);
    ~search_context();
    search_context(search_context&&) noexcept;
    search_context& operator=(search_context&&) noexcept;

    estimate run(method m, const measurement_set& ms, double sigma_db) const;

    estimate eqsolve(const measurement_set& ms) const;
    estimate cid(const measurement_set& ms) const;
    estimate mle(const measurement_set& ms, double sigma_db) const;
    estimate similarity(const measurement_set& ms) const;

    const estimator_config& config() const;
    const std::vector<angle_deg>& schedule() const;

private:
    struct impl;
    std::unique_ptr<impl> impl_;
};

} // namespace patloc
