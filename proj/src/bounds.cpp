#include "patloc/bounds.hpp"

#include <cmath>

#include "patloc/error.hpp"
#include "patloc/rng.hpp"

namespace patloc {

namespace {

const double ln10 = std::numbers::ln10;

struct k_moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;
    double denom() const { return double(n) * sum_sq - sum * sum; }
};

k_moments moments_of(const std::vector<double>& k) {
    k_moments m;
    m.n = k.size();
    for (double v : k) {
        m.sum += v;
        m.sum_sq += v * v;
    }
    return m;
}

void check_invertible(const k_moments& m) {
    double scale = std::max(double(m.n) * m.sum_sq, 1.0);
    // Cauchy-Schwarz: N sum K^2 >= (sum K)^2, equality iff all K_i equal
    if (m.denom() < -1e-9 * scale)
        throw error(errc::singular_fim, "information matrix lost positive semidefiniteness");
    if (m.denom() <= 1e-12 * scale)
        throw error(errc::singular_fim, "all K_i equal: angle and distance not jointly identifiable");
}

} // namespace

mat2 mat2_mul(const mat2& a, const mat2& b) {
    mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

mat2 mat2_transpose(const mat2& a) {
    return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}};
}

std::vector<double> k_sequence(const radiation_pattern& tx,
                               const std::vector<angle_deg>& rotations, double theta_deg) {
    std::vector<double> k;
    k.reserve(rotations.size());
    for (angle_deg dphi : rotations)
        k.push_back(10.0 / ln10 * tx.log_gain_slope(angle_deg(theta_deg + dphi.deg())));
    return k;
}

mat2 fim(const scenario& sc, double d, double theta_deg) {
    if (!(sc.sigma_db > 0.0))
        throw error(errc::zero_noise, "FIM unbounded at sigma = 0");
    if (!(d > 0.0)) throw error(errc::bad_config, "d must be > 0");
    std::vector<double> k = k_sequence(sc.tx_pattern, sc.rotations, theta_deg);
    k_moments m = moments_of(k);
    double s2 = sc.sigma_db * sc.sigma_db;
    double n = sc.path_loss_n;
    mat2 j{};
    j[0][0] = 100.0 * n * n * double(m.n) / (s2 * d * d * ln10 * ln10);
    j[0][1] = j[1][0] = -10.0 * n / (s2 * d * ln10) * m.sum;
    j[1][1] = m.sum_sq / s2;
    return j;
}

unbiased_bounds crlb_unbiased(const scenario& sc, double d, double theta_deg) {
    if (!(sc.sigma_db > 0.0))
        throw error(errc::zero_noise, "CRLB undefined at sigma = 0");
    if (!(d > 0.0)) throw error(errc::bad_config, "d must be > 0");
    std::vector<double> k = k_sequence(sc.tx_pattern, sc.rotations, theta_deg);
    k_moments m = moments_of(k);
    check_invertible(m);
    double s2 = sc.sigma_db * sc.sigma_db;
    double n = sc.path_loss_n;
    unbiased_bounds b;
    b.var_d = s2 * d * d * ln10 * ln10 / (100.0 * n * n) * m.sum_sq / m.denom();
    b.var_theta = double(m.n) * s2 / m.denom();
    b.cov = s2 * d * ln10 / (10.0 * n) * m.sum / m.denom();
    return b;
}

double distance_bias_factor(double sigma_db, double path_loss_n, std::size_t n_rotations) {
    double s2 = sigma_db * sigma_db;
    return std::pow(10.0, s2 * ln10 / (200.0 * path_loss_n * path_loss_n * double(n_rotations)));
}

double distance_bias_factor(const scenario& sc) {
    return distance_bias_factor(sc.sigma_db, sc.path_loss_n, sc.rotations.size());
}

bias_model default_bias_model(const scenario& sc, double d) {
    double f = distance_bias_factor(sc);
    bias_model b;
    b.beta_d = d * (f - 1.0);
    b.grad[0][0] = f - 1.0;
    return b;
}

mat2 crlb_biased(const scenario& sc, double d, double theta_deg, const bias_model& bias) {
    unbiased_bounds u = crlb_unbiased(sc, d, theta_deg);
    mat2 jinv{{{u.var_d, u.cov}, {u.cov, u.var_theta}}};
    mat2 ig{{{1.0 + bias.grad[0][0], bias.grad[0][1]},
             {bias.grad[1][0], 1.0 + bias.grad[1][1]}}};
    mat2 c = mat2_mul(mat2_mul(ig, jinv), mat2_transpose(ig));
    c[0][0] += bias.beta_d * bias.beta_d;
    c[0][1] += bias.beta_d * bias.beta_theta;
    c[1][0] += bias.beta_d * bias.beta_theta;
    c[1][1] += bias.beta_theta * bias.beta_theta;
    return c;
}

double g_variance(const radiation_pattern& tx, const std::vector<angle_deg>& rotations,
                  double theta_deg) {
    std::vector<double> s;
    s.reserve(rotations.size());
    for (angle_deg dphi : rotations)
        s.push_back(tx.log_gain_slope(angle_deg(theta_deg + dphi.deg())));
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= double(s.size());
    double var = 0.0;
    for (double v : s) var += (v - mean) * (v - mean);
    return var / double(s.size());
}

double bias_dtheta_mc(const scenario& sc, std::size_t trials, std::uint64_t seed,
                      double h_deg, const estimator_config& cfg) {
    if (trials == 0 || !(h_deg > 0.0))
        throw error(errc::bad_config, "need trials > 0 and h_deg > 0");
    known_channel kc = known_channel::from(sc);
    search_context ctx(kc, sc.rotations, cfg);
    auto mean_dhat = [&](double theta_true) {
        scenario s = sc;
        s.true_theta = angle_deg(theta_true);
        double acc = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            measurement_set ms = sample_measurements(s, derive_seed(seed, t));
            acc += ctx.mle(ms, std::max(s.sigma_db, 1.0)).d_hat;
        }
        return acc / double(trials);
    };
    double t0 = sc.true_theta.deg();
    double lo = mean_dhat(t0 - h_deg);
    double hi = mean_dhat(t0 + h_deg);
    return (hi - lo) / (2.0 * deg2rad(h_deg));
}

crlb_report make_crlb_report(const scenario& sc, double d, double theta_deg) {
    crlb_report r;
    r.k = k_sequence(sc.tx_pattern, sc.rotations, theta_deg);
    for (double v : r.k) r.h_sum += v;
    r.g_var = g_variance(sc.tx_pattern, sc.rotations, theta_deg);
    r.fim_m = fim(sc, d, theta_deg);
    unbiased_bounds u = crlb_unbiased(sc, d, theta_deg);
    r.fim_inv = {{{u.var_d, u.cov}, {u.cov, u.var_theta}}};
    r.unbiased_d = u.var_d;
    r.unbiased_theta = u.var_theta;
    r.bias_d = default_bias_model(sc, d).beta_d;
    r.biased = crlb_biased(sc, d, theta_deg, default_bias_model(sc, d));
    return r;
}

} // namespace patloc
