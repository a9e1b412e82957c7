#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "patloc/channel.hpp"
#include "patloc/estimators.hpp"

namespace patloc {

using mat2 = std::array<std::array<double, 2>, 2>;

mat2 mat2_mul(const mat2& a, const mat2& b);
mat2 mat2_transpose(const mat2& a);

/// K_i = (10/ln10) * G_T'(theta+dphi_i)/G_T(theta+dphi_i), per radian.
std::vector<double> k_sequence(const radiation_pattern& tx,
                               const std::vector<angle_deg>& rotations, double theta_deg);

/// Fisher information for (d, theta[rad]) under the dB-Gaussian model:
///   J_11 = 100 n^2 N / (sigma^2 (d ln10)^2)
///   J_22 = sum K_i^2 / sigma^2
///   J_12 = -(10n / (sigma^2 d ln10)) * sum K_i.
/// Throws zero_noise when sigma = 0.
mat2 fim(const scenario& sc, double d, double theta_deg);

struct unbiased_bounds {
    double var_d = 0.0;      // [J^-1]_11, m^2
    double var_theta = 0.0;  // [J^-1]_22, rad^2 (d never enters)
    double cov = 0.0;        // [J^-1]_12
};

/// Closed-form diagonal and off-diagonal of J^-1. Throws singular_fim when
/// N sum K^2 - (sum K)^2 vanishes (all K_i equal).
unbiased_bounds crlb_unbiased(const scenario& sc, double d, double theta_deg);

/// Multiplicative distance bias of the profile estimator at theta pinned to
/// truth: E[d_hat] = d0 * 10^(sigma^2 ln10 / (200 n^2 N)).
double distance_bias_factor(double sigma_db, double path_loss_n, std::size_t n_rotations);
double distance_bias_factor(const scenario& sc);

/// Bias vector and its gradient w.r.t. (d, theta[rad]) for the biased bound.
struct bias_model {
    double beta_d = 0.0;     // meters
    double beta_theta = 0.0; // radians
    mat2 grad{{{0.0, 0.0}, {0.0, 0.0}}}; // d beta / d (d, theta)
};

/// beta_d = d (f - 1), d beta_d/dd = f - 1, everything else zero; the angle
/// estimator is treated as unbiased.
bias_model default_bias_model(const scenario& sc, double d);

/// Biased bound: beta beta^T + (I + G) J^-1 (I + G)^T with G = d beta/d alpha.
/// Zero bias model reduces it to J^-1 exactly.
mat2 crlb_biased(const scenario& sc, double d, double theta_deg, const bias_model& bias);

/// Population variance of the raw log-gain slope sequence {G'/G}, 1/rad^2.
/// Zero for omnidirectional and for constant-slope patterns.
double g_variance(const radiation_pattern& tx, const std::vector<angle_deg>& rotations,
                  double theta_deg);

/// Monte-Carlo central difference of the mean profile-MLE distance w.r.t.
/// the true angle: the d beta_d / d theta term has no closed form.
/// Returned per radian.
double bias_dtheta_mc(const scenario& sc, std::size_t trials, std::uint64_t seed,
                      double h_deg, const estimator_config& cfg);

struct crlb_report {
    std::vector<double> k;   // K_i, per radian
    double h_sum = 0.0;      // sum of K_i
    double g_var = 0.0;      // variance of {G'/G}, 1/rad^2
    mat2 fim_m{};
    mat2 fim_inv{};
    double bias_d = 0.0;     // beta_d, meters
    mat2 biased{};           // biased CRLB under the default bias model
    double unbiased_d = 0.0;     // m^2
    double unbiased_theta = 0.0; // rad^2
};

crlb_report make_crlb_report(const scenario& sc, double d, double theta_deg);

} // namespace patloc
