#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patloc/angle.hpp"
#include "patloc/pattern.hpp"

namespace patloc {

/// Full physical configuration of one transmitter/receiver placement.
/// The rotation schedule lists ALL N measurement angles, index 0 at
/// delta_phi = 0. Immutable in use; validate() after construction.
struct scenario {
    double pt_mw = 100.0;      // transmit power, milliwatts
    double lambda_m = 0.125;   // wavelength, meters
    double path_loss_n = 4.0;  // path loss exponent, in [2, 6]
    double sigma_db = 0.0;     // shadowing std dev, dB
    double true_d = 1.0;       // d0, meters
    angle_deg true_theta;      // theta0
    std::vector<angle_deg> rotations; // delta_phi_i, i = 0..N-1 (first is 0)
    radiation_pattern tx_pattern = radiation_pattern::omni();
    radiation_pattern rx_pattern = radiation_pattern::omni();
    angle_deg rx_angle;        // fixed receiver orientation phi_R

    /// A^2 = P_T[W] * lambda^2 / (4 pi)^2 from the Friis expression.
    double a_squared() const;

    double rx_gain() const { return rx_pattern.gain(rx_angle); }

    std::size_t n_rotations() const { return rotations.size(); }

    /// Throws bad_config on any violated invariant.
    void validate() const;
};

struct measurement_sample {
    angle_deg delta_phi;
    double rssi_dbm;
};

/// One rotation sweep worth of noisy RSSI samples.
struct measurement_set {
    std::string scenario_id;
    std::vector<measurement_sample> samples;
    std::uint64_t seed = 0;
};

/// Noise-free RSSI in dBm at rotation delta_phi:
///   10*log10(P_T[W] lambda^2 G_T(theta0+dphi) G_R(phi_R) / ((4 pi)^2 d0^n)) + 30.
double mean_rssi(const scenario& sc, angle_deg delta_phi);

/// Draw one measurement per schedule entry: mean_rssi + N(0, sigma_db^2),
/// i.i.d. across rotations, mt19937_64 seeded with `seed`. Same seed,
/// same scenario => identical samples.
measurement_set sample_measurements(const scenario& sc, std::uint64_t seed);

/// sigma = sigma_ref_db * 10^(-snr_db/20); sigma_ref_db is sigma at SNR 0.
double snr_to_sigma(double snr_db, double sigma_ref_db = 2.0);

/// CSV export/import, header "index,delta_phi_deg,rssi_dbm".
void write_measurements_csv(const measurement_set& ms, const std::string& path);
measurement_set read_measurements_csv(const std::string& path);

} // namespace patloc
