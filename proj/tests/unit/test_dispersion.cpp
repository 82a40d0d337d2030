#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "quasimode/dispersion.hpp"

using namespace quasimode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("omega_of_k spot values", "[dispersion]")
{
    CHECK(omega_of_k(1.0, Polarization(1.0)) == 1.5);
    CHECK(omega_of_k(0.0, Polarization(0.0)) == 1.0);
    CHECK_THAT(omega_of_k(1e3, Polarization(0.5)), WithinRel(1000.0005, 1e-9));
    CHECK_THROWS_AS(omega_of_k(0.0, Polarization(0.2)), DomainError);
    CHECK_THROWS_AS(omega_of_k(-1.0, Polarization(0.0)), DomainError);
}

TEST_CASE("critical points match the closed forms", "[dispersion]")
{
    const auto cp1 = critical_points(Polarization(1.0));
    CHECK_THAT(cp1.k_star, WithinRel(1.0 / std::numbers::sqrt2, 1e-15));
    CHECK_THAT(cp1.omega_star, WithinRel(std::numbers::sqrt2, 1e-15));
    CHECK(cp1.omega_tilde == 0.0);

    const auto cp0 = critical_points(Polarization(0.0));
    CHECK(cp0.k_star == 0.0);
    CHECK(cp0.omega_star == 1.0);
    CHECK(cp0.omega_tilde == 1.0);

    const auto cp2 = critical_points(Polarization(0.2));
    CHECK_THAT(cp2.k_star, WithinRel(oracle::frozen::k_star_0_2, 1e-14));
    CHECK_THAT(cp2.omega_star, WithinRel(oracle::frozen::omega_star_0_2, 1e-14));
    CHECK_THAT(cp2.omega_tilde, WithinRel(oracle::frozen::omega_tilde_0_2, 1e-14));

    const auto cp5 = critical_points(Polarization(0.5));
    CHECK_THAT(cp5.k_star, WithinRel(oracle::frozen::k_star_0_5, 1e-14));
    CHECK_THAT(cp5.omega_star, WithinRel(oracle::frozen::omega_star_0_5, 1e-14));
    CHECK_THAT(cp5.omega_tilde, WithinRel(oracle::frozen::omega_tilde_0_5, 1e-14));
}

TEST_CASE("k* is the minimum of the dispersion found by golden section", "[dispersion]")
{
    for (double xi : {0.2, 0.5, 0.8, 1.0})
    {
        const Polarization pol(xi);
        const auto m = oracle::golden_section([&](double x) { return oracle::dispersion(x, xi); }, 0.01, 5.0);
        const auto cp = critical_points(pol);
        CHECK_THAT(m.x, WithinRel(cp.k_star, 1e-6)); // flat minimum: x known to ~sqrt(eps)
        CHECK_THAT(m.value, WithinRel(cp.omega_star, 1e-12));
        CHECK_THAT(omega_of_k(cp.k_star, pol), WithinRel(cp.omega_star, 1e-12));
    }
}

TEST_CASE("k branches spot values", "[dispersion]")
{
    SECTION("circular, y = 1.5")
    {
        const auto k = k_branches(1.5, Polarization(1.0));
        CHECK_THAT(k.plus.value.real(), WithinRel(1.0, 1e-15));
        CHECK_THAT(k.minus.value.real(), WithinRel(0.5, 1e-15));
        CHECK(k.plus.value.imag() == 0.0);
        CHECK(k.minus.value.imag() == 0.0);
        CHECK(k.plus.regime == Regime::Traveling);
        CHECK(k.plus.branch == Branch::Plus);
        CHECK(k.minus.branch == Branch::Minus);
    }
    SECTION("circular, y -> 0+")
    {
        const auto k = k_branches(1e-9, Polarization(1.0));
        CHECK_THAT(k.plus.value.imag(), WithinAbs(1.0 / std::numbers::sqrt2, 1e-8));
        CHECK_THAT(k.minus.value.imag(), WithinAbs(-1.0 / std::numbers::sqrt2, 1e-8));
    }
    SECTION("xi = 0.5 in all three regimes")
    {
        using namespace oracle::frozen;
        const Polarization pol(0.5);
        auto k = k_branches(2.0, pol);
        CHECK(k.plus.regime == Regime::Traveling);
        CHECK_THAT(k.plus.value.real(), WithinRel(x_plus_y2, 1e-14));
        CHECK_THAT(k.minus.value.real(), WithinRel(x_minus_y2, 1e-13));

        k = k_branches(1.0, pol);
        CHECK(k.plus.regime == Regime::DecayingTraveling);
        CHECK_THAT(k.plus.value.real(), WithinRel(x_re_y1, 1e-14));
        CHECK_THAT(k.plus.value.imag(), WithinRel(x_re_y1, 1e-14));
        CHECK_THAT(k.minus.value.imag(), WithinRel(-x_re_y1, 1e-14));

        k = k_branches(0.3, pol);
        CHECK(k.plus.regime == Regime::Evanescent);
        CHECK(k.plus.value.real() == 0.0);
        CHECK(k.minus.value.real() == 0.0);
        CHECK_THAT(k.plus.value.imag(), WithinRel(x_plus_im_y03, 1e-14));
        CHECK_THAT(k.minus.value.imag(), WithinRel(x_minus_im_y03, 1e-14));
    }
    SECTION("at Omega~ both branches are imaginary with modulus k*, minus from above")
    {
        const Polarization pol(0.5);
        const auto cp = critical_points(pol);
        const auto k = k_branches(cp.omega_tilde, pol);
        CHECK(k.plus.value.real() == 0.0);
        CHECK(k.minus.value.real() == 0.0);
        CHECK_THAT(std::abs(k.plus.value), WithinRel(cp.k_star, 1e-7));
        CHECK_THAT(std::abs(k.minus.value), WithinRel(cp.k_star, 1e-7));
        CHECK(k.minus.value.imag() < 0.0);
        // approaching from above agrees with the point value
        const auto above = k_branches(cp.omega_tilde + 1e-9, pol);
        CHECK_THAT(above.minus.value.imag(), WithinAbs(k.minus.value.imag(), 1e-3));
    }
    SECTION("at Omega* both branches coincide at k*")
    {
        const Polarization pol(0.5);
        const auto cp = critical_points(pol);
        const auto k = k_branches(cp.omega_star, pol);
        CHECK(k.plus.regime == Regime::Traveling);
        CHECK_THAT(k.plus.value.real(), WithinRel(cp.k_star, 1e-7));
        CHECK_THAT(k.minus.value.real(), WithinRel(cp.k_star, 1e-7));
    }
}

TEST_CASE("regime classification", "[dispersion]")
{
    const Polarization pol(0.5);
    CHECK(classify_regime(2.0, pol) == Regime::Traveling);
    CHECK(classify_regime(1.0, pol) == Regime::DecayingTraveling);
    CHECK(classify_regime(0.3, pol) == Regime::Evanescent);
    CHECK(classify_regime(0.5, Polarization(0.0)) == Regime::Evanescent);
    CHECK(classify_regime(1.5, Polarization(0.0)) == Regime::Traveling);
    CHECK(classify_regime(0.5, Polarization(1.0)) == Regime::DecayingTraveling);
    CHECK_THROWS_AS(classify_regime(-0.1, pol), DomainError);
}

TEST_CASE("branches are roots of the biquadratic (companion-matrix oracle)", "[dispersion]")
{
    const double xi = GENERATE(0.1, 0.2, 0.5, 0.9, 1.0);
    const double y = GENERATE(0.05, 0.3, 0.7, 1.0, 1.2, 1.5, 3.0, 10.0);
    const Polarization pol(xi);
    const auto roots = oracle::quartic_roots(y * y - 1.0, pol.q());
    const auto k = k_branches(y, pol);
    const double scale = 1.0 + std::abs(k.plus.value);
    CHECK(oracle::distance_to_nearest(k.plus.value, roots) < 1e-9 * scale);
    CHECK(oracle::distance_to_nearest(k.minus.value, roots) < 1e-9 * scale);
    // Only roots with non-negative real part are reported.
    CHECK(k.plus.value.real() >= 0.0);
    CHECK(k.minus.value.real() >= 0.0);
}

TEST_CASE("linear polarization reduces to the bulk plasmon", "[dispersion]")
{
    const Polarization lp(0.0);
    for (double y : {1.0, 1.3, 2.0, 7.5})
    {
        CHECK_THAT(k_branches(y, lp).plus.value.real(), WithinRel(std::sqrt(y * y - 1.0), 1e-14));
        CHECK_THAT(omega_of_k(std::sqrt(y * y - 1.0), lp), WithinRel(y, 1e-14));
    }
}

TEST_CASE("physical-unit dispersion tends to ck as omega_p -> 0", "[dispersion]")
{
    const double c = 137.035999;
    const double omega = 2.0;
    const ModelParams params(Polarization(0.5), omega, 1e-8 * omega, {1.0, 1.0, c});
    const double k = omega / c;
    CHECK_THAT(frequency_of_wavenumber(k, params), WithinRel(c * k, 1e-6));
    CHECK_THROWS_AS(frequency_of_wavenumber(0.0, params), DomainError);
    // reduced and physical forms agree
    const ModelParams p2(Polarization(0.7), 1.0, 3.0, {1.0, 1.0, c});
    const double k2 = 0.9 * 3.0 / c;
    CHECK_THAT(frequency_of_wavenumber(k2, p2), WithinRel(3.0 * omega_of_k(0.9, Polarization(0.7)), 1e-14));
}

TEST_CASE("branches stay finite far above the discriminant overflow point", "[dispersion]")
{
    const Polarization pol(0.5);
    for (double y : {1e80, 1e100, 1e150})
    {
        const auto b = k_branches(y, pol);
        CHECK(b.plus.regime == Regime::Traveling);
        CHECK_THAT(b.plus.value.real(), WithinRel(y, 1e-14));
        CHECK_THAT(b.minus.value.real(), WithinRel(pol.sqrt_q() / y, 1e-14));
    }
}
