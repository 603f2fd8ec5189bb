#pragma once

#include <cmath>
#include <string>

#include "streaklab/common.hpp"

namespace streaklab {

// Two-beam crossing geometry at the detector plane.
//
// Both beams propagate paraxially along z and are tilted by the same
// per-beam angle theta in the (y,z) plane, in opposite senses:
//   k1 (cheb/A):  -k1 sin(theta) e_y + k1 cos(theta) e_z
//   k2 (oxeb/B):  +k2 sin(theta) e_y + k2 cos(theta) e_z
// so oxeb photons carry positive transverse momentum when orientation=+1.
//
// theta is the per-beam tilt (total crossing angle 2*theta). The quoted
// instrument alignment of "0.14 mrad between the beams" is ambiguous; only
// the per-beam reading reproduces the observed 1.88-1.90 mm fringe spacing,
// so that is the convention used throughout.
struct BeamGeometry {
    double theta_rad = 0.14e-3;   // per-beam tilt from z
    double lambda1_nm = 532.0;    // cheb / source A
    double lambda2_nm = 532.0;    // oxeb / source B
    double z0_m = 0.0;            // detector plane; adds a constant phase via dk*cos(theta)*z0
    int orientation = +1;         // +1: +y carries oxeb momentum; -1: axis relabeled

    double k1() const { return constants::two_pi / (lambda1_nm * 1e-9); }
    double k2() const { return constants::two_pi / (lambda2_nm * 1e-9); }
    double k_mean() const { return 0.5 * (k1() + k2()); }
    double k_diff() const { return k2() - k1(); }

    // 2*kbar*sin(theta): spatial angular frequency of the fringes [rad/m].
    double spatial_angular_freq() const { return 2.0 * k_mean() * std::sin(theta_rad); }

    void validate() const {
        if (!(theta_rad > 0.0) || !(theta_rad < 0.01))
            throw config_error("BeamGeometry: theta_rad must be in (0, 0.01) rad (paraxial)");
        if (!(lambda1_nm > 0.0) || !(lambda2_nm > 0.0))
            throw config_error("BeamGeometry: wavelengths must be positive");
        if (std::abs(k_diff()) / k_mean() >= 1e-6)
            throw config_error("BeamGeometry: |k1-k2|/kbar must stay below 1e-6 (near-degenerate)");
        if (orientation != 1 && orientation != -1)
            throw config_error("BeamGeometry: orientation must be +1 or -1");
    }
};

// Instantaneous state of the superposed pair of coherent fields at the
// detector. Detector sensitivity, one-photon amplitude and |alpha|^2 are
// folded into a single mean rate per source: only the product is observable.
// Rates are in whatever per-time (or per-time-per-length) unit the caller
// uses; detection_rate returns the same unit.
struct FieldPair {
    double rate1 = 0.0;            // cheb / A
    double rate2 = 0.0;            // oxeb / B
    double phase1_rad = 0.0;
    double phase2_rad = 0.0;
    double omega1_rad_s = 0.0;
    double omega2_rad_s = 0.0;
    double mutual_visibility = 1.0;  // polarization/mode overlap in [0,1]

    double delta_omega() const { return omega2_rad_s - omega1_rad_s; }
    double delta_phase() const { return phase2_rad - phase1_rad; }

    void validate() const {
        if (rate1 < 0.0 || rate2 < 0.0)
            throw error("FieldPair: negative rate");
        if (!(mutual_visibility >= 0.0 && mutual_visibility <= 1.0))
            throw error("FieldPair: mutual_visibility outside [0,1]");
    }
};

// Interference phase phi(y,t) = 2*kbar*sin(theta)*y + dk*cos(theta)*z0
//                               - (w2-w1)*t + (phi2-phi1).
// y in meters, t in seconds.
inline double interference_phase(const FieldPair& fp, const BeamGeometry& geo, double y_m,
                                 double t_s) {
    return geo.spatial_angular_freq() * y_m + geo.k_diff() * std::cos(geo.theta_rad) * geo.z0_m -
           fp.delta_omega() * t_s + fp.delta_phase();
}

// Photo-detection rate of the superposition:
//   r1 + r2 + 2*v*sqrt(r1*r2)*cos(phi(y,t))
// Non-negative for v <= 1 by Cauchy-Schwarz.
inline double detection_rate(const FieldPair& fp, const BeamGeometry& geo, double y_m,
                             double t_s) {
    fp.validate();
    const double cross = 2.0 * fp.mutual_visibility * std::sqrt(fp.rate1 * fp.rate2);
    const double r = fp.rate1 + fp.rate2 + cross * std::cos(interference_phase(fp, geo, y_m, t_s));
    return r < 0.0 ? 0.0 : r;  // clamp float dust at exact nulls
}

// Spatial period of the fringes, lambda_bar/(2 sin theta), in meters.
inline double fringe_spacing_m(const BeamGeometry& geo) {
    if (!(geo.theta_rad > 0.0))
        throw error("fringe_spacing: degenerate collinear geometry (theta = 0)");
    return constants::two_pi / geo.spatial_angular_freq();
}

// Velocity of an equiphase line, dy/dt = dw/(2 kbar sin theta).
// Returned in mm/ns; the sign equals sign(omega2 - omega1).
inline double equiphase_slope_mm_per_ns(const FieldPair& fp, const BeamGeometry& geo) {
    if (!(geo.theta_rad > 0.0))
        throw error("equiphase_slope: degenerate collinear geometry (theta = 0)");
    const double v_m_per_s = fp.delta_omega() / geo.spatial_angular_freq();
    return v_m_per_s * 1e-6;  // m/s -> mm/ns
}

// Theoretical fringe visibility for rate ratio rho and mutual visibility v:
// 2 v sqrt(rho)/(1+rho). Equals v for matched beams.
inline double theoretical_visibility(double rate1, double rate2, double mutual_visibility) {
    if (rate1 <= 0.0 || rate2 <= 0.0) return 0.0;
    return 2.0 * mutual_visibility * std::sqrt(rate1 * rate2) / (rate1 + rate2);
}

}  // namespace streaklab
