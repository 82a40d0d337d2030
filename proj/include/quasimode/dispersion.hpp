#ifndef QUASIMODE_DISPERSION_HPP
#define QUASIMODE_DISPERSION_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <string_view>
#include <utility>

#include "quasimode/units.hpp"

// Quasimode dispersion in reduced units: x = k / k_p, y = Omega / omega_p.

namespace quasimode
{

enum class Branch
{
    Plus,
    Minus
};

enum class Regime
{
    Traveling,
    DecayingTraveling,
    Evanescent
};

constexpr std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

constexpr std::string_view to_string(Regime r)
{
    switch (r)
    {
    case Regime::Traveling: return "traveling";
    case Regime::DecayingTraveling: return "decaying_traveling";
    case Regime::Evanescent: return "evanescent";
    }
    return "unknown";
}

struct DispersionPoint
{
    double x;
    double y;
    double xi;
};

struct ComplexWavenumber
{
    std::complex<double> value;
    Branch branch;
    Regime regime;
};

struct WavenumberPair
{
    ComplexWavenumber plus;
    ComplexWavenumber minus;

    const ComplexWavenumber& operator[](Branch b) const { return b == Branch::Plus ? plus : minus; }
};

struct CriticalPoints
{
    double k_star;
    double omega_star;
    double omega_tilde;
};

/// y = sqrt(x^2 + 1 + q / x^2). Singular at x = 0 unless the field is
/// linearly polarized, where y(0) = 1.
inline double omega_of_k(double x, Polarization pol)
{
    detail::require(std::isfinite(x) && x >= 0.0, "reduced wavenumber must be finite and non-negative");
    if (pol.is_linear())
        return std::sqrt(x * x + 1.0);
    detail::require(x > 0.0, "dispersion is singular at k=0 for xi > 0");
    return std::sqrt(x * x + 1.0 + pol.q() / (x * x));
}

inline DispersionPoint dispersion_point(double x, Polarization pol) { return {x, omega_of_k(x, pol), pol.xi()}; }

/// Dispersion in physical units: Omega(k) = sqrt(c^2 k^2 + omega_p^2 (1 + q omega_p^2 / (c^2 k^2))).
/// Uses the field frequency slot of `params` only for polarization and units.
inline double frequency_of_wavenumber(double k, const ModelParams& params)
{
    detail::require(std::isfinite(k) && k >= 0.0, "wavenumber must be finite and non-negative");
    const double ck = params.c() * k;
    const double wp2 = params.omega_p() * params.omega_p();
    if (params.polarization().is_linear() || wp2 == 0.0)
        return std::sqrt(ck * ck + wp2);
    detail::require(k > 0.0, "dispersion is singular at k=0 for xi > 0");
    return std::sqrt(ck * ck + wp2 * (1.0 + params.polarization().q() * wp2 / (ck * ck)));
}

inline CriticalPoints critical_points(Polarization pol)
{
    const double xi = pol.xi();
    const double n = std::sqrt(1.0 + xi * xi);
    return {
        .k_star = std::sqrt(xi / (1.0 + xi * xi)),
        .omega_star = (1.0 + xi) / n,
        .omega_tilde = (1.0 - xi) / n,
    };
}

namespace detail
{
// Discriminant of the biquadratic x^4 - s x^2 + q = 0 with s = y^2 - 1,
// kept in factored form (s - 2 sqrt q)(s + 2 sqrt q). A factor within a few
// ulps of zero is snapped to zero so the branch points Omega* and Omega~
// land exactly on the boundary.
struct BranchDiscriminant
{
    double s;
    double d;    // sign is what matters; may overflow for huge s
    double root; // sqrt(|d|), formed without overflow
};

inline BranchDiscriminant branch_discriminant(double y, Polarization pol)
{
    const double s = (y - 1.0) * (y + 1.0);
    const double r = 2.0 * pol.sqrt_q();
    const double tol = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(s) + r);
    double lo = s - r;
    double hi = s + r;
    if (std::abs(lo) <= tol)
        lo = 0.0;
    if (std::abs(hi) <= tol)
        hi = 0.0;
    return {s, lo * hi, std::sqrt(std::abs(lo)) * std::sqrt(std::abs(hi))};
}

inline Regime regime_of(const BranchDiscriminant& b)
{
    if (b.d < 0.0)
        return Regime::DecayingTraveling;
    return b.s >= 0.0 ? Regime::Traveling : Regime::Evanescent;
}

// The two roots t± = x±^2 of t^2 - s t + q = 0. For a real discriminant the
// root of larger magnitude comes from the quadratic formula and the other
// from t+ t- = q, which avoids cancellation when q << s^2.
inline std::pair<std::complex<double>, std::complex<double>> branch_squares(const BranchDiscriminant& b, double q)
{
    if (b.d < 0.0)
    {
        const std::complex<double> plus(0.5 * b.s, 0.5 * b.root);
        return {plus, std::conj(plus)};
    }
    const double root = b.root;
    if (b.s >= 0.0)
    {
        const double plus = 0.5 * (b.s + root);
        return {plus, plus > 0.0 ? q / plus : 0.0};
    }
    const double minus = 0.5 * (b.s - root);
    return {minus < 0.0 ? q / minus : 0.0, minus};
}

// Principal root of a real number, returned purely real or purely imaginary.
inline std::complex<double> real_arg_root(double a)
{
    return a >= 0.0 ? std::complex<double>(std::sqrt(a), 0.0) : std::complex<double>(0.0, std::sqrt(-a));
}
} // namespace detail

/// Traveling for y >= Omega*, decaying traveling strictly between Omega~ and
/// Omega*, evanescent for y <= Omega~.
inline Regime classify_regime(double y, Polarization pol)
{
    detail::require(std::isfinite(y) && y >= 0.0, "reduced frequency must be finite and non-negative");
    return detail::regime_of(detail::branch_discriminant(y, pol));
}

/// Both wavenumber branches x± = sqrt((y^2 - 1 ± sqrt((y^2 - 1)^2 - 4q)) / 2)
/// on principal square roots. At y = Omega~ the minus branch takes its limit
/// from above (negative imaginary part). For linear polarization below y = 1
/// the plus branch degenerates to 0.
inline WavenumberPair k_branches(double y, Polarization pol)
{
    detail::require(std::isfinite(y) && y >= 0.0, "reduced frequency must be finite and non-negative");
    const auto disc = detail::branch_discriminant(y, pol);
    const Regime regime = detail::regime_of(disc);

    const auto [t_plus, t_minus] = detail::branch_squares(disc, pol.q());
    std::complex<double> plus;
    std::complex<double> minus;
    if (disc.d >= 0.0)
    {
        plus = detail::real_arg_root(t_plus.real());
        minus = detail::real_arg_root(t_minus.real());
        if (disc.d == 0.0 && disc.s < 0.0)
            minus = std::conj(minus);
    }
    else
    {
        plus = std::sqrt(t_plus);
        minus = std::sqrt(t_minus);
    }
    return {{plus, Branch::Plus, regime}, {minus, Branch::Minus, regime}};
}

} // namespace quasimode

#endif // QUASIMODE_DISPERSION_HPP
