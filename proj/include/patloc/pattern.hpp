#pragma once

#include <string>
#include <vector>

#include "patloc/angle.hpp"

namespace patloc {

enum class pattern_kind {
    omnidirectional,
    analytic_dipole,
    analytic_asymmetric,
    tabulated,
};

const char* pattern_kind_name(pattern_kind k);

/// Antenna gain vs planar angle, with log-gain slope access.
///
/// Analytic kinds are the E-plane half-wave dipole law
///   G(phi) = D * (cos((pi/2) cos(phi~)) / sin(phi~))^2,  phi~ = phi + 90 deg,
/// so phi = 0 is broadside and the axial nulls sit at phi = +-90 deg
/// (out of support: the gain limit there is 0). The asymmetric kind
/// multiplies by a skew factor (1 + eps * sin(phi + phi_skew)), which
/// breaks the broadside mirror symmetry that otherwise makes +theta
/// and -theta indistinguishable from a single measurement.
///
/// Tabulated patterns interpolate linearly in log-gain (dB) between
/// samples; queries outside [first, last] sample are out of support.
///
/// Immutable after construction; safe to share across threads.
class radiation_pattern {
public:
    struct table_entry {
        double angle_deg; // in [-180, 180), strictly increasing
        double gain;      // linear, > 0
    };

    static radiation_pattern omni(double gain = 1.0);
    static radiation_pattern dipole(double directivity = 1.64);
    static radiation_pattern asymmetric(double eps, angle_deg phi_skew = angle_deg(0.0),
                                        double directivity = 1.64);
    static radiation_pattern tabulated(std::vector<table_entry> table);

    /// Load a tabulated pattern from CSV with header "angle_deg,gain_db",
    /// rows sorted ascending; dB converted to linear (10^(dB/10)) on load.
    static radiation_pattern from_csv(const std::string& path);

    pattern_kind kind() const { return kind_; }

    /// Linear gain at phi. Strictly positive; throws out_of_support at
    /// pattern nulls / outside a tabulated domain.
    double gain(angle_deg phi) const;

    /// d(log G)/d(phi) at phi, per radian. Closed form for analytic
    /// kinds; central difference of log-gain (step = local table
    /// spacing) for tabulated ones.
    double log_gain_slope(angle_deg phi) const;

    /// Same pattern rotated by delta: rotated(delta).gain(phi) equals
    /// this->gain(phi + delta).
    radiation_pattern rotated(angle_deg delta) const;

    /// True when phi lies in the declared domain (always, except outside a
    /// tabulated table). Nulls of analytic patterns are in-domain but have
    /// zero gain.
    bool in_domain(angle_deg phi) const;

    /// Gain without the positivity check: 0 at analytic nulls instead of
    /// throwing. Still throws out_of_support outside a tabulated domain.
    /// Target curves use this so they can dip to d = 0 through a null.
    double gain_raw(angle_deg phi) const;

    double asymmetry_eps() const { return eps_; }
    const std::vector<table_entry>& table() const { return table_; }

private:
    radiation_pattern() = default;

    double gain_at_deg(double phi_deg) const;     // after rotation offset applied
    double slope_at_deg(double phi_deg) const;    // per radian

    pattern_kind kind_ = pattern_kind::omnidirectional;
    double const_gain_ = 1.0;
    double directivity_ = 1.64;
    double eps_ = 0.0;
    double skew_deg_ = 0.0;
    double offset_deg_ = 0.0; // accumulated rotation, added to the query angle
    std::vector<table_entry> table_;
};

} // namespace patloc
