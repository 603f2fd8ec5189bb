#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace streaklab {

// Error taxonomy. The CLI maps these onto process exit codes
// (config_error -> 3, io_error -> 4, no_fringes_error -> 2).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct config_error : error {
    using error::error;
};
struct io_error : error {
    using error::error;
};
struct no_fringes_error : error {
    using error::error;
};
struct not_converged_error : error {
    using error::error;
};
struct resource_error : error {
    using error::error;
};

namespace constants {
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double c_m_per_s = 299792458.0;
inline constexpr double hbar_j_s = 1.054571817e-34;  // CODATA 2018
}  // namespace constants

// sin(x)/x with the removable singularity handled.
inline double sinc(double x) {
    if (std::abs(x) < 1e-6) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// d/dx [sin(x)/x]
inline double dsinc(double x) {
    if (std::abs(x) < 1e-4) {
        return -x / 3.0 + x * x * x / 30.0;
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x);
}

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, constants::two_pi);
    if (a > constants::pi) a -= constants::two_pi;
    if (a <= -constants::pi) a += constants::two_pi;
    return a;
}

inline void check(bool ok, const std::string& msg) {
    if (!ok) throw error(msg);
}

}  // namespace streaklab
