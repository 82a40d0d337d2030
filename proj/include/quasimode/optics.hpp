#ifndef QUASIMODE_OPTICS_HPP
#define QUASIMODE_OPTICS_HPP

#include <complex>

#include "quasimode/dispersion.hpp"

namespace quasimode
{

struct OpticalResponse
{
    std::complex<double> zeta; // relative permittivity
    std::complex<double> eta;  // refractive index
    double reflectivity;       // normal incidence
    Branch branch;
};

/// zeta± = 1/2 [1 ± (1/y^2)(sqrt((1 - y^2)^2 - 4q) ∓ 1)], which equals (x± / y)^2.
inline std::complex<double> dielectric(double y, Polarization pol, Branch branch)
{
    detail::require(std::isfinite(y) && y > 0.0, "dielectric function requires a positive frequency");
    // Same roots as the wavenumber branches, divided by y^2.
    const auto [t_plus, t_minus] = detail::branch_squares(detail::branch_discriminant(y, pol), pol.q());
    return (branch == Branch::Plus ? t_plus : t_minus) / (y * y);
}

inline std::complex<double> refractive_index(std::complex<double> zeta) { return std::sqrt(zeta); }

/// R = |(eta - 1) / (eta + 1)|^2.
inline double reflectivity(std::complex<double> eta)
{
    const std::complex<double> den = eta + 1.0;
    detail::require(den != std::complex<double>(0.0, 0.0), "reflectivity undefined at eta = -1");
    return std::norm(eta - 1.0) / std::norm(den);
}

inline OpticalResponse optical_response(double y, Polarization pol, Branch branch)
{
    const auto zeta = dielectric(y, pol, branch);
    const auto eta = refractive_index(zeta);
    return {zeta, eta, reflectivity(eta), branch};
}

} // namespace quasimode

#endif // QUASIMODE_OPTICS_HPP
