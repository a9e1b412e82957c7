#include "patloc/channel.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "patloc/error.hpp"
#include "patloc/rng.hpp"

namespace patloc {

double scenario::a_squared() const {
    double pt_w = pt_mw * 1e-3;
    return pt_w * lambda_m * lambda_m / (16.0 * pi * pi);
}

void scenario::validate() const {
    if (!(pt_mw > 0.0)) throw error(errc::bad_config, "pt_mw must be > 0");
    if (!(lambda_m > 0.0)) throw error(errc::bad_config, "lambda_m must be > 0");
    if (!(path_loss_n >= 2.0 && path_loss_n <= 6.0))
        throw error(errc::bad_config, "path_loss_n must lie in [2, 6]");
    if (!(sigma_db >= 0.0)) throw error(errc::bad_config, "sigma_db must be >= 0");
    if (!(true_d > 0.0)) throw error(errc::bad_config, "d0 must be > 0");
    if (rotations.size() < 2)
        throw error(errc::bad_config, "need >= 2 rotation angles for joint (d, theta) estimation");
    for (std::size_t i = 0; i < rotations.size(); ++i)
        for (std::size_t j = i + 1; j < rotations.size(); ++j)
            if (rotations[i].deg() == rotations[j].deg())
                throw error(errc::bad_config, "rotation angles must be distinct");
}

double mean_rssi(const scenario& sc, angle_deg delta_phi) {
    double gt = sc.tx_pattern.gain(sc.true_theta + delta_phi);
    double gr = sc.rx_pattern.gain(sc.rx_angle);
    // evaluate in logs: the gains near a pattern null underflow linear math
    double db = 10.0 * (std::log10(sc.a_squared()) + std::log10(gt) + std::log10(gr)) -
                10.0 * sc.path_loss_n * std::log10(sc.true_d);
    return db + 30.0;
}

measurement_set sample_measurements(const scenario& sc, std::uint64_t seed) {
    sc.validate();
    measurement_set ms;
    ms.seed = seed;
    ms.samples.reserve(sc.rotations.size());
    auto rng = make_rng(seed);
    std::normal_distribution<double> shadow(0.0, 1.0);
    for (angle_deg dphi : sc.rotations) {
        double r = mean_rssi(sc, dphi);
        if (sc.sigma_db > 0.0) r += sc.sigma_db * shadow(rng);
        ms.samples.push_back({dphi, r});
    }
    return ms;
}

double snr_to_sigma(double snr_db, double sigma_ref_db) {
    if (!(sigma_ref_db > 0.0))
        throw error(errc::bad_config, "sigma_ref_db must be > 0");
    return sigma_ref_db * std::pow(10.0, -snr_db / 20.0);
}

void write_measurements_csv(const measurement_set& ms, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::bad_config, "cannot write " + path);
    out << "index,delta_phi_deg,rssi_dbm\n";
    char buf[128];
    for (std::size_t i = 0; i < ms.samples.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g\n", i, ms.samples[i].delta_phi.deg(),
                      ms.samples[i].rssi_dbm);
        out << buf;
    }
}

measurement_set read_measurements_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::bad_config, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("index,delta_phi_deg,rssi_dbm", 0) != 0)
        throw error(errc::bad_config, "bad measurements CSV header in " + path);
    measurement_set ms;
    ms.scenario_id = path;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        std::istringstream ss(line);
        std::size_t idx;
        double dphi, rssi;
        char c1, c2;
        if (!(ss >> idx >> c1 >> dphi >> c2 >> rssi) || c1 != ',' || c2 != ',')
            throw error(errc::bad_config, "bad measurements CSV row " + std::to_string(row));
        ms.samples.push_back({angle_deg(dphi), rssi});
    }
    return ms;
}

} // namespace patloc
