#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "../oracles.hpp"
#include "quasimode/plate_force.hpp"
#include "quasimode/spectrum.hpp"

using namespace quasimode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

constexpr double pi = std::numbers::pi;

TEST_CASE("plasma frequency between plates", "[force]")
{
    CHECK_THAT(plasma_frequency_plates(PlateGeometry(1.0, pi)), WithinRel(2.0, 1e-15));
    CHECK(plasma_frequency_plates(PlateGeometry(1.0, pi, 0)) == 0.0);
    CHECK_THAT(plasma_frequency_plates(PlateGeometry(4.0, pi)), WithinRel(1.0, 1e-15));
    CHECK_THROWS_AS(PlateGeometry(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(PlateGeometry(1.0, -1.0), DomainError);
}

TEST_CASE("general force", "[force]")
{
    const PlateGeometry g(1.0, pi);
    CHECK_THAT(force_general(0.0, g, Polarization(0.0)), WithinRel(0.5, 1e-15));
    CHECK_THAT(force_general(1e-9, g, Polarization(0.0)), WithinRel(0.5, 1e-10));
    CHECK(force_general(1e12, g, Polarization(0.7)) < 1e-10);
    CHECK_THAT(force_general(2.0 / std::numbers::sqrt2, g, Polarization(1.0)),
               WithinRel(std::numbers::sqrt2 / 2, 1e-14));
    CHECK_THROWS_AS(force_general(0.0, g, Polarization(0.3)), DomainError);
    CHECK(force_general(0.7, PlateGeometry(1.0, pi, 0), Polarization(0.3)) == 0.0);
}

TEST_CASE("force at the minimum: spot values", "[force]")
{
    const PlateGeometry g(1.0, pi);
    CHECK_THAT(force_at_minimum(g, Polarization(0.0)).value(), WithinRel(0.5, 1e-15));
    CHECK_THAT(force_at_minimum(g, Polarization(1.0)).value(), WithinRel(std::numbers::sqrt2 / 2, 1e-15));
    const auto excited = force_at_minimum(PlateGeometry(1.0, pi, 1, 1), Polarization(0.0));
    CHECK_THAT(excited.bohr_form, WithinRel(1.5, 1e-15));
    CHECK_THAT(excited.plasma_form, WithinRel(1.5, 1e-15));
}

TEST_CASE("force at the minimum equals the general force at omega*", "[force]")
{
    for (double xi : {0.2, 0.5, 1.0})
    {
        const PlateGeometry g(1.7, 2.3, 3, 2);
        const double wp = plasma_frequency_plates(g);
        const double w_star = zero_point_minimum(Polarization(xi), wp).omega_min;
        CHECK_THAT(force_general(w_star, g, Polarization(xi)), WithinRel(force_at_minimum(g, Polarization(xi)).value(), 1e-13));
    }
}

TEST_CASE("dual forms agree over a geometry grid", "[force][property]")
{
    const double d = GENERATE(0.1, 0.5, 1.0, 7.0, 100.0);
    const double a = GENERATE(0.1, 2.0, 30.0, 100.0);
    const int n = GENERATE(1, 4);
    const int photons = GENERATE(0, 3);
    const double xi = GENERATE(0.0, 0.6, 1.0);
    const auto f = force_at_minimum(PlateGeometry(d, a, n, photons), Polarization(xi));
    CHECK_THAT(f.bohr_form, WithinRel(f.plasma_form, 1e-12));
    CHECK(f.plasma_form > 0.0);
}

TEST_CASE("F* is minus the derivative of E* with respect to d", "[force]")
{
    const PlateGeometry ref(1.0, 2.5, 2);
    for (double xi : {0.0, 0.4, 1.0})
        for (double d : {0.3, 1.0, 5.0})
        {
            auto energy = [&](double dd) {
                return zero_point_minimum(Polarization(xi), plasma_frequency_plates(ref.with_separation(dd))).energy;
            };
            const double fd = -oracle::central_difference(energy, d, 1e-6 * d);
            CHECK_THAT(force_at_minimum(ref.with_separation(d), Polarization(xi)).value(), WithinRel(fd, 1e-5));
        }
}

TEST_CASE("force vanishes with the charge", "[force]")
{
    ChargeUnits u;
    u.charge = 1e-8;
    const auto f = force_at_minimum(PlateGeometry(1.0, pi), Polarization(1.0), u);
    CHECK(f.value() < 1e-7); // linear in e
    CHECK_THAT(f.bohr_form, WithinRel(f.plasma_form, 1e-12));
}

TEST_CASE("scaling laws by log-log fit", "[force]")
{
    const PlateGeometry ref(1.0, 3.0);
    std::vector<double> ds, recompute, frozen;
    for (double d = 0.5; d < 50.0; d *= 1.3)
    {
        ds.push_back(d);
        recompute.push_back(force_at_separation(ref, d, Polarization(0.5), OmegaPScaling::Recompute));
        frozen.push_back(force_at_separation(ref, d, Polarization(0.5), OmegaPScaling::Frozen));
    }
    CHECK_THAT(oracle::loglog_slope(ds, recompute), WithinAbs(-1.5, 1e-3));
    CHECK_THAT(oracle::loglog_slope(ds, frozen), WithinAbs(-1.0, 1e-3));
    CHECK_THROWS_AS(force_at_separation(ref, 0.0, Polarization(0.5), OmegaPScaling::Frozen), DomainError);
}
