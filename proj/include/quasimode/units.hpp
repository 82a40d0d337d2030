#ifndef QUASIMODE_UNITS_HPP
#define QUASIMODE_UNITS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quasimode
{

/// Thrown when an input lies outside the domain of a formula (singular
/// points, negative geometry, polarization outside [0, 1], ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

namespace detail
{
inline void require(bool condition, const char* message)
{
    if (!condition)
        throw DomainError(message);
}

inline bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }
inline bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
} // namespace detail

/// Field polarization parameter xi: 0 is linear, 1 is circular, values in
/// between are elliptic. Values outside [0, 1] are rejected, never clamped.
class Polarization
{
public:
    explicit Polarization(double xi) : xi_(xi)
    {
        if (!(xi >= 0.0 && xi <= 1.0))
            throw DomainError("polarization parameter xi must lie in [0, 1], got " + std::to_string(xi));
    }

    static Polarization linear() { return Polarization{0.0}; }
    static Polarization circular() { return Polarization{1.0}; }

    double xi() const noexcept { return xi_; }

    /// xi^2 / (1 + xi^2)^2, in [0, 1/4].
    double q() const noexcept
    {
        const double d = 1.0 + xi_ * xi_;
        return xi_ * xi_ / (d * d);
    }

    /// sqrt(q) = xi / (1 + xi^2); also the reduced k+ * k- product.
    double sqrt_q() const noexcept { return xi_ / (1.0 + xi_ * xi_); }

    /// (1 + xi) / sqrt(1 + xi^2), in [1, sqrt(2)].
    double kappa() const noexcept { return (1.0 + xi_) / std::sqrt(1.0 + xi_ * xi_); }

    /// (1 - xi^2) / (1 + xi^2): weight of the a^2 + a†^2 term.
    double anisotropy() const noexcept { return (1.0 - xi_ * xi_) / (1.0 + xi_ * xi_); }

    bool is_linear() const noexcept { return xi_ == 0.0; }

    friend bool operator==(Polarization, Polarization) = default;

private:
    double xi_;
};

/// Mass, hbar and speed of light for a computation. Charges and volumes
/// enter only through the plasma frequency.
struct UnitSystem
{
    double mass = 1.0;
    double hbar = 1.0;
    double c = 1.0;

    static constexpr UnitSystem natural() { return {1.0, 1.0, 1.0}; }
    static constexpr UnitSystem atomic() { return {1.0, 1.0, 137.035999}; }
};

/// omega_p = sqrt(4 pi e^2 / (m V)) in Gaussian units.
inline double plasma_frequency_from_volume(double charge, double mass, double volume)
{
    detail::require(detail::finite_nonnegative(charge), "charge must be finite and non-negative");
    detail::require(detail::finite_positive(mass), "mass must be positive");
    detail::require(detail::finite_positive(volume), "volume must be positive");
    return std::sqrt(4.0 * std::numbers::pi * charge * charge / (mass * volume));
}

/// Physical parameters of the single-mode model. Immutable once built.
class ModelParams
{
public:
    ModelParams(Polarization polarization, double omega, double omega_p, UnitSystem units = UnitSystem::natural())
        : polarization_(polarization), omega_(omega), omega_p_(omega_p), units_(units)
    {
        detail::require(detail::finite_nonnegative(omega), "field frequency omega must be finite and non-negative");
        detail::require(detail::finite_nonnegative(omega_p), "plasma frequency omega_p must be finite and non-negative");
        detail::require(detail::finite_positive(units.mass), "mass must be positive");
        detail::require(detail::finite_positive(units.hbar), "hbar must be positive");
        detail::require(detail::finite_positive(units.c), "speed of light must be positive");
    }

    /// Builds the parameters from a charge confined in a quantization volume.
    static ModelParams from_charge_volume(Polarization polarization, double omega, double charge, double volume,
                                          UnitSystem units = UnitSystem::natural())
    {
        return {polarization, omega, plasma_frequency_from_volume(charge, units.mass, volume), units};
    }

    Polarization polarization() const noexcept { return polarization_; }
    double xi() const noexcept { return polarization_.xi(); }
    double omega() const noexcept { return omega_; }
    double omega_p() const noexcept { return omega_p_; }
    double mass() const noexcept { return units_.mass; }
    double hbar() const noexcept { return units_.hbar; }
    double c() const noexcept { return units_.c; }
    const UnitSystem& units() const noexcept { return units_; }

    ModelParams with_omega(double omega) const { return {polarization_, omega, omega_p_, units_}; }
    ModelParams with_omega_p(double omega_p) const { return {polarization_, omega_, omega_p, units_}; }

    /// N identical charges in the same volume: e^2 -> N e^2, so omega_p^2 -> N omega_p^2.
    ModelParams with_charges(int count) const
    {
        detail::require(count >= 1, "charge count must be at least 1");
        return with_omega_p(omega_p_ * std::sqrt(static_cast<double>(count)));
    }

private:
    Polarization polarization_;
    double omega_;
    double omega_p_;
    UnitSystem units_;
};

struct DerivedConstants
{
    double k_p;   // omega_p / c
    double q;     // xi^2 / (1 + xi^2)^2
    double kappa; // (1 + xi) / sqrt(1 + xi^2)
    double g;     // linear coupling e*alpha/(m c) = sqrt(hbar omega_p^2 / (2 m omega))
    double quad;  // e^2 alpha^2 / (m c^2) = hbar omega_p^2 / (2 omega)
};

inline DerivedConstants derived_constants(const ModelParams& p)
{
    detail::require(p.omega() > 0.0, "coupling constants g and quad require omega > 0");
    const double wp2 = p.omega_p() * p.omega_p();
    const double quad = p.hbar() * wp2 / (2.0 * p.omega());
    return {
        .k_p = p.omega_p() / p.c(),
        .q = p.polarization().q(),
        .kappa = p.polarization().kappa(),
        .g = std::sqrt(quad / p.mass()),
        .quad = quad,
    };
}

} // namespace quasimode

#endif // QUASIMODE_UNITS_HPP
