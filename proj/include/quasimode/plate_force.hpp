#ifndef QUASIMODE_PLATE_FORCE_HPP
#define QUASIMODE_PLATE_FORCE_HPP

#include <cmath>
#include <numbers>

#include "quasimode/units.hpp"

// Repulsive force between two parallel plates implied by the single-mode
// zero-point energy, F = -dE/dd, where the plate separation d enters only
// through omega_p(d, A). Atomic units by default (hbar = m = e = 1, so the
// Bohr radius is 1).

namespace quasimode
{

class PlateGeometry
{
public:
    PlateGeometry(double separation, double area, int charges = 1, int photons = 0)
        : separation_(separation), area_(area), charges_(charges), photons_(photons)
    {
        detail::require(detail::finite_positive(separation), "plate separation must be positive");
        detail::require(detail::finite_positive(area), "plate area must be positive");
        detail::require(charges >= 0, "charge count must be non-negative");
        detail::require(photons >= 0, "photon number must be non-negative");
    }

    double separation() const noexcept { return separation_; }
    double area() const noexcept { return area_; }
    int charges() const noexcept { return charges_; }
    int photons() const noexcept { return photons_; }
    double volume() const noexcept { return area_ * separation_; }

    PlateGeometry with_separation(double d) const { return {d, area_, charges_, photons_}; }

private:
    double separation_;
    double area_;
    int charges_;
    int photons_;
};

/// Charge, mass and hbar of the plate model.
struct ChargeUnits
{
    double charge = 1.0;
    double mass = 1.0;
    double hbar = 1.0;

    static constexpr ChargeUnits atomic() { return {1.0, 1.0, 1.0}; }

    /// R_B = hbar^2 / (m e^2).
    double bohr_radius() const
    {
        detail::require(charge > 0.0, "Bohr radius requires a non-zero charge");
        return hbar * hbar / (mass * charge * charge);
    }

    void validate() const
    {
        detail::require(detail::finite_nonnegative(charge), "charge must be finite and non-negative");
        detail::require(detail::finite_positive(mass), "mass must be positive");
        detail::require(detail::finite_positive(hbar), "hbar must be positive");
    }
};

/// How omega_p responds when the separation changes.
enum class OmegaPScaling
{
    Recompute, // omega_p follows d: F* ~ d^(-3/2)
    Frozen     // omega_p held at the reference geometry: F* ~ d^(-1)
};

/// omega_p = 2 sqrt(pi) e sqrt(N) / sqrt(m A d).
inline double plasma_frequency_plates(const PlateGeometry& g, const ChargeUnits& u = {})
{
    u.validate();
    return 2.0 * std::sqrt(std::numbers::pi) * u.charge * std::sqrt(static_cast<double>(g.charges()))
         / std::sqrt(u.mass * g.area() * g.separation());
}

/// Force at field frequency omega (omega_p recomputed from the geometry),
/// multiplied by (1 + 2n) for n photons. Diverges as omega -> 0 for xi > 0.
inline double force_general(double omega, const PlateGeometry& g, Polarization pol, const ChargeUnits& u = {})
{
    detail::require(std::isfinite(omega) && omega >= 0.0, "field frequency must be finite and non-negative");
    const double wp = plasma_frequency_plates(g, u);
    if (wp == 0.0)
        return 0.0;
    const double q = pol.q();
    double ratio = 0.0; // omega_p^2 / omega^2
    if (!pol.is_linear())
    {
        detail::require(omega > 0.0, "force diverges at omega = 0 for xi > 0");
        ratio = wp * wp / (omega * omega);
    }
    const double w_over_wp = omega / wp;
    const double numerator = u.hbar * wp * (1.0 + 2.0 * q * ratio);
    const double denominator = 4.0 * std::sqrt(w_over_wp * w_over_wp + 1.0 + q * ratio);
    return numerator / denominator / g.separation() * (1.0 + 2.0 * g.photons());
}

/// F* at the zero-point minimum in its two equivalent closed forms.
struct ForceAtMinimum
{
    double bohr_form;   // kappa sqrt(pi R_B / A) N e^2 d^(-3/2) (1/2 + n)
    double plasma_form; // (kappa / 4) hbar omega_p(d, A) / d (1 + 2n)

    double value() const noexcept { return plasma_form; }
};

/// Both forms of F*. The charge enters as e^2 -> N e^2 everywhere, including
/// the Bohr radius, so the two forms agree for every N (both scale as sqrt(N)).
inline ForceAtMinimum force_at_minimum(const PlateGeometry& g, Polarization pol, const ChargeUnits& u = {})
{
    u.validate();
    const double kappa = pol.kappa();
    const double photon_factor = 0.5 + g.photons();
    const double charge_sq = g.charges() * u.charge * u.charge;
    const double d = g.separation();

    double bohr_form = 0.0;
    if (charge_sq > 0.0)
    {
        const double r_b = u.hbar * u.hbar / (u.mass * charge_sq);
        bohr_form = kappa * std::sqrt(std::numbers::pi * r_b / g.area()) * charge_sq / (d * std::sqrt(d)) * photon_factor;
    }
    const double plasma_form = kappa / 4.0 * u.hbar * plasma_frequency_plates(g, u) / d * (2.0 * photon_factor);
    return {bohr_form, plasma_form};
}

/// F* at separation d in the chosen scaling mode; `reference` fixes the area,
/// counts, and (for Frozen) the plasma frequency.
inline double force_at_separation(const PlateGeometry& reference, double d, Polarization pol, OmegaPScaling mode,
                                  const ChargeUnits& u = {})
{
    detail::require(detail::finite_positive(d), "plate separation must be positive");
    if (mode == OmegaPScaling::Recompute)
        return force_at_minimum(reference.with_separation(d), pol, u).value();
    const double wp = plasma_frequency_plates(reference, u);
    return pol.kappa() / 4.0 * u.hbar * wp / d * (1.0 + 2.0 * reference.photons());
}

} // namespace quasimode

#endif // QUASIMODE_PLATE_FORCE_HPP
