#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "streaklab/common.hpp"
#include "streaklab/rng.hpp"

namespace streaklab {

// Laser frequency/phase noise description.
//
// Two timescales, per the instrument's behavior:
//  - within one sub-microsecond exposure the cavity fluctuations are frozen
//    and the phase diffuses at the quantum (Schawlow-Townes) floor
//    `st_limit_hz` (kHz scale), keeping fringes straight;
//  - between shots (seconds apart) the center frequency wanders by tens of
//    MHz; modeled as per-shot uniform jitter `shot_jitter_hz` plus an
//    optional deterministic drift `drift_rate_hz_per_s`.
// `linewidth_hz` is the long-term FWHM linewidth and bounds st_limit_hz.
struct LaserNoiseModel {
    double linewidth_hz = 3e6;
    double coherence_time_ns = 300.0;
    double st_limit_hz = 3e3;
    double drift_rate_hz_per_s = 0.0;
    double shot_jitter_hz = 30e6;

    void validate() const {
        if (linewidth_hz < 0.0 || st_limit_hz < 0.0 || shot_jitter_hz < 0.0)
            throw config_error("LaserNoiseModel: linewidths/jitter must be >= 0");
        if (st_limit_hz > linewidth_hz)
            throw config_error("LaserNoiseModel: st_limit_hz must not exceed linewidth_hz");
        if (!(coherence_time_ns > 0.0))
            throw config_error("LaserNoiseModel: coherence_time_ns must be positive");
        if (linewidth_hz > 0.0) {
            // tau_c ~ 1/(pi dnu) within a factor of 10 (sanity bound, not equality)
            const double ratio = coherence_time_ns * 1e-9 * constants::pi * linewidth_hz;
            if (ratio < 0.1 || ratio > 10.0)
                throw config_error(
                    "LaserNoiseModel: coherence_time_ns inconsistent with linewidth_hz "
                    "(tau_c * pi * dnu = " +
                    std::to_string(ratio) + ", expected within a factor of 10 of 1)");
        }
    }

    // Diffusion linewidth governing the intra-shot Wiener phase walk.
    double intra_shot_linewidth_hz() const { return st_limit_hz; }
};

// One realization of the stochastic phase phi(t), sampled on a uniform grid.
struct PhasePath {
    double t0_ns = 0.0;
    double dt_ns = 1.0;
    std::vector<double> phi_rad;

    double duration_ns() const {
        return phi_rad.empty() ? 0.0 : dt_ns * static_cast<double>(phi_rad.size() - 1);
    }

    // Linear interpolation, clamped at the ends.
    double at(double t_ns) const {
        if (phi_rad.empty()) return 0.0;
        const double x = (t_ns - t0_ns) / dt_ns;
        if (x <= 0.0) return phi_rad.front();
        const std::size_t n = phi_rad.size();
        if (x >= static_cast<double>(n - 1)) return phi_rad.back();
        const auto i = static_cast<std::size_t>(x);
        const double f = x - static_cast<double>(i);
        return phi_rad[i] + f * (phi_rad[i + 1] - phi_rad[i]);
    }
};

// Discrete Wiener phase walk: increments ~ N(0, 2*pi*L*dt), L the intra-shot
// diffusion linewidth. Starts at 0; any per-shot phase offset is drawn
// separately. Deterministic under a fixed seed.
inline PhasePath sample_phase_path(const LaserNoiseModel& model, double duration_ns,
                                   double dt_ns, std::uint64_t seed) {
    if (!(dt_ns > 0.0)) throw error("sample_phase_path: dt_ns must be positive");
    if (duration_ns < dt_ns) throw error("sample_phase_path: duration shorter than one step");

    const auto steps = static_cast<std::size_t>(std::ceil(duration_ns / dt_ns));
    PhasePath path;
    path.dt_ns = dt_ns;
    path.phi_rad.resize(steps + 1);
    path.phi_rad[0] = 0.0;

    const double lw = model.intra_shot_linewidth_hz();
    if (lw <= 0.0) return path;  // noiseless limit: constant phase

    const double sigma = std::sqrt(constants::two_pi * lw * dt_ns * 1e-9);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> step(0.0, sigma);
    for (std::size_t i = 1; i <= steps; ++i) path.phi_rad[i] = path.phi_rad[i - 1] + step(rng);
    return path;
}

// AOM gate envelope with raised-cosine edges and a pulse-front tilt.
//
// edge_ns is the 10-90% rise/fall time; for a raised cosine the full ramp
// lasts edge_ns / 0.59033, which keeps the support inside
// [delay - 2*edge, delay + width + 2*edge].
struct GateEnvelope {
    double width_ns = 655.0;     // flat-top duration
    double edge_ns = 10.0;       // 10-90% rise/fall
    double delay_ns = 0.0;       // flat-top start
    double tilt_ns_per_mm = 0.0; // local delay per unit y (pulse-front tilt)
    double aom_shift_hz = 210e6; // diffraction shift per order
    int aom_order = 1;

    static constexpr double k_edge_fraction = 0.5903344706171776;  // 10-90% span of a raised cosine

    double full_ramp_ns() const { return edge_ns / k_edge_fraction; }
    double total_shift_hz() const { return aom_shift_hz * aom_order; }

    void validate() const {
        if (!(width_ns > 0.0)) throw config_error("GateEnvelope: width_ns must be positive");
        if (edge_ns < 0.0) throw config_error("GateEnvelope: edge_ns must be >= 0");
        if (aom_order < 0) throw config_error("GateEnvelope: aom_order must be >= 0");
    }

    // 1D envelope as a function of local time u = t - tilt*y - delay.
    double shape(double u_ns) const {
        const double ramp = full_ramp_ns();
        if (edge_ns <= 0.0)  // ideal square gate
            return (u_ns >= 0.0 && u_ns <= width_ns) ? 1.0 : 0.0;
        if (u_ns <= -ramp || u_ns >= width_ns + ramp) return 0.0;
        if (u_ns < 0.0) return 0.5 * (1.0 - std::cos(constants::pi * (u_ns + ramp) / ramp));
        if (u_ns <= width_ns) return 1.0;
        return 0.5 * (1.0 + std::cos(constants::pi * (u_ns - width_ns) / ramp));
    }

    double operator()(double t_ns, double y_mm) const {
        return shape(t_ns - tilt_ns_per_mm * y_mm - delay_ns);
    }

    // Largest envelope value over a (t, y) rectangle; exact because the
    // shape is unimodal in local time. Used as a thinning bound.
    double max_over(double t_lo_ns, double t_hi_ns, double y_lo_mm, double y_hi_mm) const {
        const double d1 = tilt_ns_per_mm * y_lo_mm;
        const double d2 = tilt_ns_per_mm * y_hi_mm;
        const double u_lo = t_lo_ns - std::max(d1, d2) - delay_ns;
        const double u_hi = t_hi_ns - std::min(d1, d2) - delay_ns;
        if (u_hi < 0.0) return shape(u_hi);
        if (u_lo > width_ns) return shape(u_lo);
        return 1.0;  // rectangle straddles the flat top
    }
};

inline double gate(const GateEnvelope& env, double t_ns, double y_mm) {
    return env(t_ns, y_mm);
}

// One laser source: mean detected photon rate, nominal frequency, noise
// model and gate. `photons_per_ns` is the rate arriving at the camera
// entrance while the gate is fully open, integrated across y; the detector
// applies slit transmission and QE on top.
struct SourceState {
    std::string name = "laser";
    double photons_per_ns = 1.2922e7;
    double omega_nominal_rad_s = 0.0;
    LaserNoiseModel noise;
    GateEnvelope gate;

    void validate() const {
        if (photons_per_ns < 0.0) throw config_error("SourceState: negative rate");
        if (!(omega_nominal_rad_s > 0.0))
            throw config_error("SourceState: omega_nominal_rad_s must be positive");
        noise.validate();
        gate.validate();
    }
};

struct FrequencyPolicy {
    double max_beat_hz = 1e9;   // detectability ceiling on |nu2 - nu1|
    double rep_rate_hz = 1.0;   // shot cadence, sets the drift timebase
};

// Per-shot center frequencies (omega1, omega2) in rad/s: nominal value plus
// deterministic drift plus a uniform jitter draw, with the beat clamped
// below the detectability ceiling.
inline std::pair<double, double> shot_frequencies(const SourceState& a, const SourceState& b,
                                                  const FrequencyPolicy& policy,
                                                  std::uint64_t shot_index, std::uint64_t seed) {
    auto rng = make_rng(seed, shot_index, rng_stream::shot_frequencies);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    const double t_shot_s =
        policy.rep_rate_hz > 0.0 ? static_cast<double>(shot_index) / policy.rep_rate_hz : 0.0;

    const double nu_off_a = a.noise.drift_rate_hz_per_s * t_shot_s + a.noise.shot_jitter_hz * u(rng);
    const double nu_off_b = b.noise.drift_rate_hz_per_s * t_shot_s + b.noise.shot_jitter_hz * u(rng);

    double omega1 = a.omega_nominal_rad_s + constants::two_pi * nu_off_a;
    double omega2 = b.omega_nominal_rad_s + constants::two_pi * nu_off_b;

    const double beat_hz = (omega2 - omega1) / constants::two_pi;
    if (std::abs(beat_hz) > policy.max_beat_hz) {
        const double clamped = std::copysign(policy.max_beat_hz, beat_hz);
        omega2 = omega1 + constants::two_pi * clamped;
    }
    return {omega1, omega2};
}

}  // namespace streaklab
