#include "patloc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "patloc/error.hpp"

namespace patloc {

namespace {

constexpr double kGainFloor = 1e-30; // below this a direction counts as a null

// Half-wave dipole E-plane gain without directivity scaling, phi~ in radians.
double dipole_shape(double phi_tilde) {
    double s = std::sin(phi_tilde);
    if (std::abs(s) < 1e-12) return 0.0; // axial null (limit of the expression)
    double c = std::cos(pi / 2.0 * std::cos(phi_tilde));
    double u = c / s;
    return u * u;
}

// d(log dipole_shape)/d(phi~), per radian.
double dipole_log_slope(double phi_tilde) {
    double s = std::sin(phi_tilde);
    double x = pi / 2.0 * std::cos(phi_tilde);
    return pi * s * std::tan(x) - 2.0 * std::cos(phi_tilde) / s;
}

} // namespace

const char* pattern_kind_name(pattern_kind k) {
    switch (k) {
        case pattern_kind::omnidirectional: return "omnidirectional";
        case pattern_kind::analytic_dipole: return "dipole";
        case pattern_kind::analytic_asymmetric: return "asymmetric";
        case pattern_kind::tabulated: return "tabulated";
    }
    return "?";
}

radiation_pattern radiation_pattern::omni(double gain) {
    if (!(gain > 0.0))
        throw error(errc::non_positive_gain, "omnidirectional gain must be > 0");
    radiation_pattern p;
    p.kind_ = pattern_kind::omnidirectional;
    p.const_gain_ = gain;
    return p;
}

radiation_pattern radiation_pattern::dipole(double directivity) {
    if (!(directivity > 0.0))
        throw error(errc::non_positive_gain, "dipole directivity must be > 0");
    radiation_pattern p;
    p.kind_ = pattern_kind::analytic_dipole;
    p.directivity_ = directivity;
    return p;
}

radiation_pattern radiation_pattern::asymmetric(double eps, angle_deg phi_skew,
                                                double directivity) {
    if (eps < 0.0 || eps > 0.9)
        throw error(errc::bad_config, "asymmetry eps must lie in [0, 0.9]");
    radiation_pattern p = dipole(directivity);
    p.kind_ = pattern_kind::analytic_asymmetric;
    p.eps_ = eps;
    p.skew_deg_ = phi_skew.deg();
    return p;
}

radiation_pattern radiation_pattern::tabulated(std::vector<table_entry> table) {
    if (table.size() < 8)
        throw error(errc::bad_config, "tabulated pattern needs >= 8 samples");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].gain > 0.0) || !std::isfinite(table[i].gain))
            throw error(errc::non_positive_gain,
                        "tabulated gain must be finite and > 0 at row " + std::to_string(i));
        if (i > 0 && !(table[i].angle_deg > table[i - 1].angle_deg))
            throw error(errc::bad_config, "tabulated angles must be strictly increasing");
    }
    if (table.front().angle_deg < -180.0 || table.back().angle_deg >= 180.0)
        throw error(errc::bad_config, "tabulated angles must lie in [-180, 180)");
    radiation_pattern p;
    p.kind_ = pattern_kind::tabulated;
    p.table_ = std::move(table);
    return p;
}

radiation_pattern radiation_pattern::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::bad_config, "cannot open pattern CSV: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw error(errc::bad_config, "empty pattern CSV: " + path);
    // strip potential \r and whitespace
    auto strip = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return c == '\r' || c == ' ' || c == '\t'; }),
                s.end());
        return s;
    };
    if (strip(line) != "angle_deg,gain_db")
        throw error(errc::bad_config, "pattern CSV must start with header angle_deg,gain_db");
    std::vector<table_entry> table;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ss(s);
        double a, g_db;
        char comma;
        if (!(ss >> a >> comma >> g_db) || comma != ',')
            throw error(errc::bad_config,
                        "bad pattern CSV row " + std::to_string(row) + " in " + path);
        table.push_back({a, std::pow(10.0, g_db / 10.0)});
    }
    return tabulated(std::move(table));
}

radiation_pattern radiation_pattern::rotated(angle_deg delta) const {
    radiation_pattern p = *this;
    p.offset_deg_ = normalize_deg(offset_deg_ + delta.deg());
    return p;
}

bool radiation_pattern::in_domain(angle_deg phi) const {
    if (kind_ != pattern_kind::tabulated) return true;
    double a = normalize_deg(phi.deg() + offset_deg_);
    return a >= table_.front().angle_deg && a <= table_.back().angle_deg;
}

double radiation_pattern::gain_raw(angle_deg phi) const {
    if (!in_domain(phi))
        throw error(errc::out_of_support,
                    "angle " + std::to_string(phi.deg()) + " deg outside table domain");
    return gain_at_deg(normalize_deg(phi.deg() + offset_deg_));
}

double radiation_pattern::gain(angle_deg phi) const {
    double g = gain_at_deg(normalize_deg(phi.deg() + offset_deg_));
    if (!(g > kGainFloor) || !std::isfinite(g))
        throw error(errc::out_of_support,
                    "gain not positive at " + std::to_string(phi.deg()) + " deg (" +
                        pattern_kind_name(kind_) + ")");
    return g;
}

double radiation_pattern::log_gain_slope(angle_deg phi) const {
    gain(phi); // support / positivity check
    return slope_at_deg(normalize_deg(phi.deg() + offset_deg_));
}

double radiation_pattern::gain_at_deg(double phi_deg) const {
    switch (kind_) {
        case pattern_kind::omnidirectional:
            return const_gain_;
        case pattern_kind::analytic_dipole:
            return directivity_ * dipole_shape(deg2rad(phi_deg) + pi / 2.0);
        case pattern_kind::analytic_asymmetric: {
            double skew = 1.0 + eps_ * std::sin(deg2rad(phi_deg + skew_deg_));
            return directivity_ * dipole_shape(deg2rad(phi_deg) + pi / 2.0) * skew;
        }
        case pattern_kind::tabulated: {
            const auto& t = table_;
            if (phi_deg < t.front().angle_deg || phi_deg > t.back().angle_deg)
                throw error(errc::out_of_support,
                            "angle " + std::to_string(phi_deg) + " deg outside table domain");
            auto it = std::lower_bound(t.begin(), t.end(), phi_deg,
                                       [](const table_entry& e, double a) { return e.angle_deg < a; });
            if (it == t.begin()) return it->gain;
            const table_entry& hi = *it;
            const table_entry& lo = *(it - 1);
            double w = (phi_deg - lo.angle_deg) / (hi.angle_deg - lo.angle_deg);
            // dB-linear: interpolate log gain, matching the dB-domain channel model
            return std::exp((1.0 - w) * std::log(lo.gain) + w * std::log(hi.gain));
        }
    }
    return 0.0;
}

double radiation_pattern::slope_at_deg(double phi_deg) const {
    switch (kind_) {
        case pattern_kind::omnidirectional:
            return 0.0;
        case pattern_kind::analytic_dipole:
            return dipole_log_slope(deg2rad(phi_deg) + pi / 2.0);
        case pattern_kind::analytic_asymmetric: {
            double a = deg2rad(phi_deg + skew_deg_);
            return dipole_log_slope(deg2rad(phi_deg) + pi / 2.0) +
                   eps_ * std::cos(a) / (1.0 + eps_ * std::sin(a));
        }
        case pattern_kind::tabulated: {
            const auto& t = table_;
            auto it = std::lower_bound(t.begin(), t.end(), phi_deg,
                                       [](const table_entry& e, double a) { return e.angle_deg < a; });
            std::size_t hi = std::min<std::size_t>(it - t.begin(), t.size() - 1);
            std::size_t lo = hi > 0 ? hi - 1 : 0;
            if (hi == lo) hi = lo + 1;
            double spacing = t[hi].angle_deg - t[lo].angle_deg;
            // central difference of log gain, step = local spacing (clamped to the domain)
            double h = std::min({spacing, phi_deg - t.front().angle_deg,
                                 t.back().angle_deg - phi_deg});
            if (h <= 0.0) h = spacing; // at a domain edge: one-sided over the edge samples
            double a0 = std::max(phi_deg - h, t.front().angle_deg);
            double a1 = std::min(phi_deg + h, t.back().angle_deg);
            double dl = std::log(gain_at_deg(a1)) - std::log(gain_at_deg(a0));
            return dl / deg2rad(a1 - a0);
        }
    }
    return 0.0;
}

} // namespace patloc
