#ifndef QUASIMODE_SPECTRUM_HPP
#define QUASIMODE_SPECTRUM_HPP

#include <cmath>

#include "quasimode/units.hpp"

namespace quasimode
{

/// Charge momentum in the polarization frame: major axis (Re u), minor axis
/// (Im u) and the propagation axis.
struct Momentum
{
    double p_major = 0.0;
    double p_minor = 0.0;
    double p_perp = 0.0;

    double norm_sq() const noexcept { return p_major * p_major + p_minor * p_minor + p_perp * p_perp; }
    double norm() const noexcept { return std::sqrt(norm_sq()); }
};

struct EnergyLevel
{
    int n;
    double theta;
    double sigma_sq;
    double energy;
    double Omega;
};

struct ZeroPointMinimum
{
    double omega_min;
    double energy;
};

namespace detail
{
inline void require_positive_omega(const ModelParams& params)
{
    require(params.omega() > 0.0, "spectrum requires a positive field frequency omega");
}
} // namespace detail

/// Squeezing parameter of the Bogoliubov transformation,
/// tanh(2 theta) = quad (1 - xi^2)/(1 + xi^2) / (hbar omega + quad).
/// Evaluated as 1/4 log((1 + t)/(1 - t)) with 1 ± t formed directly so the
/// weak-field limit omega -> 0 keeps full precision.
inline double bogoliubov_theta(const ModelParams& params)
{
    detail::require_positive_omega(params);
    const auto dc = derived_constants(params);
    const double r = params.polarization().anisotropy();
    const double hw = params.hbar() * params.omega();
    return 0.25 * std::log((hw + dc.quad * (1.0 + r)) / (hw + dc.quad * (1.0 - r)));
}

/// Omega = sqrt(omega^2 + omega_p^2 (1 + q omega_p^2 / omega^2)). For linear
/// polarization omega = 0 is allowed and gives omega_p.
inline double effective_frequency(const ModelParams& params)
{
    const double w = params.omega();
    const double wp2 = params.omega_p() * params.omega_p();
    if (params.polarization().is_linear() || wp2 == 0.0)
        return std::sqrt(w * w + wp2);
    detail::require_positive_omega(params);
    return std::sqrt(w * w + wp2 * (1.0 + params.polarization().q() * wp2 / (w * w)));
}

/// |sigma|^2 of the displacement that removes the terms linear in b, b†.
/// Only the in-plane momentum components couple.
inline double displacement_sigma_sq(const ModelParams& params, const Momentum& p)
{
    detail::require_positive_omega(params);
    const auto dc = derived_constants(params);
    const double xi = params.xi();
    const double theta = bogoliubov_theta(params);
    const double prefactor = std::cosh(2.0 * theta) / (params.hbar() * params.omega() + dc.quad);
    const double in_plane = p.p_major * p.p_major * std::exp(-2.0 * theta)
                          + xi * xi * p.p_minor * p.p_minor * std::exp(2.0 * theta);
    return prefactor * prefactor * dc.g * dc.g / (1.0 + xi * xi) * in_plane;
}

/// E = p^2/2m + hbar Omega (n + 1/2 - |sigma|^2).
///
/// For `charges` > 1 the charge enters as e^2 -> N e^2 (omega_p^2 scales by N)
/// and `p` is the summed momentum of all charges; the kinetic term is p^2/2m of
/// that summed momentum.
inline EnergyLevel energy_level(const ModelParams& params, const Momentum& p, int n, int charges = 1)
{
    detail::require(n >= 0, "excitation number must be non-negative");
    const ModelParams scaled = params.with_charges(charges);
    const double Omega = effective_frequency(scaled);
    const double theta = bogoliubov_theta(scaled);
    const double sigma_sq = displacement_sigma_sq(scaled, p);
    const double energy = p.norm_sq() / (2.0 * scaled.mass()) + scaled.hbar() * Omega * (n + 0.5 - sigma_sq);
    return {n, theta, sigma_sq, energy, Omega};
}

/// Closed-form circular-polarization spectrum; ignores params.xi().
inline double energy_cp(const ModelParams& params, const Momentum& p, int n)
{
    detail::require(n >= 0, "excitation number must be non-negative");
    detail::require_positive_omega(params);
    const double w2 = params.omega() * params.omega();
    const double wp2 = params.omega_p() * params.omega_p();
    const double kinetic = (2.0 * p.norm_sq() * w2 + p.p_perp * p.p_perp * wp2) / (2.0 * params.mass() * (2.0 * w2 + wp2));
    return kinetic + params.hbar() * params.omega() * (1.0 + wp2 / (2.0 * w2)) * (0.5 + n);
}

/// Closed-form linear-polarization spectrum; `phi` is the angle between p and
/// the polarization vector. Ignores params.xi(); omega = 0 is allowed.
inline double energy_lp(const ModelParams& params, double p_magnitude, double phi, int n)
{
    detail::require(n >= 0, "excitation number must be non-negative");
    const double w2 = params.omega() * params.omega();
    const double wp2 = params.omega_p() * params.omega_p();
    detail::require(w2 + wp2 > 0.0, "linear-polarization spectrum needs omega > 0 or omega_p > 0");
    const double cos_phi = std::cos(phi);
    const double kinetic = p_magnitude * p_magnitude / (2.0 * params.mass()) * (1.0 - wp2 * cos_phi * cos_phi / (w2 + wp2));
    return kinetic + params.hbar() * std::sqrt(w2 + wp2) * (0.5 + n);
}

/// Minimum over omega of the zero-point energy hbar Omega(omega) / 2, at
/// omega* = omega_p sqrt(xi / (1 + xi^2)) with value kappa hbar omega_p / 2.
inline ZeroPointMinimum zero_point_minimum(Polarization pol, double omega_p, double hbar = 1.0)
{
    detail::require(detail::finite_positive(omega_p), "zero-point minimum requires omega_p > 0");
    detail::require(detail::finite_positive(hbar), "hbar must be positive");
    const double xi = pol.xi();
    return {omega_p * std::sqrt(xi / (1.0 + xi * xi)), pol.kappa() * hbar * omega_p / 2.0};
}

} // namespace quasimode

#endif // QUASIMODE_SPECTRUM_HPP
