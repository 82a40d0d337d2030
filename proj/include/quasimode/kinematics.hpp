#ifndef QUASIMODE_KINEMATICS_HPP
#define QUASIMODE_KINEMATICS_HPP

#include <cmath>

#include "quasimode/units.hpp"

// Phase and group velocities of the quasimode, in units of c, as functions of
// the reduced wavenumber x = k / k_p.

namespace quasimode
{

struct VelocityPoint
{
    double x;
    double v_ph;
    double v_g;
};

namespace detail
{
inline double velocity_radicand(double x, double q)
{
    require(std::isfinite(x) && x > 0.0, "velocities require a positive reduced wavenumber");
    const double inv2 = 1.0 / (x * x);
    return 1.0 + inv2 + q * inv2 * inv2;
}
} // namespace detail

inline double phase_velocity(double x, Polarization pol) { return std::sqrt(detail::velocity_radicand(x, pol.q())); }

/// Signed; negative below k* for xi > 0.
inline double group_velocity(double x, Polarization pol)
{
    const double q = pol.q();
    const double radicand = detail::velocity_radicand(x, q);
    const double x2 = x * x;
    return (1.0 - q / (x2 * x2)) / std::sqrt(radicand);
}

inline VelocityPoint velocity_point(double x, Polarization pol)
{
    return {x, phase_velocity(x, pol), group_velocity(x, pol)};
}

/// Reduced wavenumber below which the group velocity is more negative than
/// -c: xi^(2/3) sqrt(1 - xi^(2/3) + xi^(4/3)) / (1 + xi^2).
/// Linear polarization never has a negative group velocity.
inline double superluminal_backward_threshold(Polarization pol)
{
    detail::require(!pol.is_linear(), "no negative group velocity exists for linear polarization (xi = 0)");
    const double xi = pol.xi();
    const double s = std::cbrt(xi * xi);
    return s * std::sqrt(1.0 - s + s * s) / (1.0 + xi * xi);
}

} // namespace quasimode

#endif // QUASIMODE_KINEMATICS_HPP
