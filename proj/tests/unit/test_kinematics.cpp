#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "../oracles.hpp"
#include "quasimode/dispersion.hpp"
#include "quasimode/kinematics.hpp"

using namespace quasimode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("phase velocity spot values", "[kinematics]")
{
    const auto cp = critical_points(Polarization(1.0));
    CHECK_THAT(phase_velocity(cp.k_star, Polarization(1.0)), WithinRel(2.0, 1e-15));
    CHECK(phase_velocity(1e-150, Polarization(0.0)) > 1e149);
    CHECK_THAT(phase_velocity(1e3, Polarization(0.5)), WithinRel(1.0000005, 1e-9));
    CHECK_THROWS_AS(phase_velocity(0.0, Polarization(0.0)), DomainError);
}

TEST_CASE("group velocity spot values", "[kinematics]")
{
    for (double xi : {0.2, 0.5, 1.0})
        CHECK_THAT(group_velocity(critical_points(Polarization(xi)).k_star, Polarization(xi)), WithinAbs(0.0, 1e-15));
    CHECK(group_velocity(0.5, Polarization(1.0)) == -1.0);
    CHECK_THAT(group_velocity(1e3, Polarization(0.0)), WithinRel(0.9999995, 1e-9));
}

TEST_CASE("superluminal backward threshold matches bisection", "[kinematics]")
{
    CHECK(superluminal_backward_threshold(Polarization(1.0)) == 0.5);
    CHECK_THAT(superluminal_backward_threshold(Polarization(0.5)),
               WithinRel(oracle::frozen::superluminal_threshold_0_5, 1e-14));
    CHECK_THROWS_AS(superluminal_backward_threshold(Polarization(0.0)), DomainError);

    const double xi = GENERATE(0.05, 0.2, 0.35, 0.5, 0.75, 0.9, 1.0);
    const double q = xi * xi / ((1 + xi * xi) * (1 + xi * xi));
    auto vg_plus_one = [q](double x) {
        const double x4 = x * x * x * x;
        return (1.0 - q / x4) / std::sqrt(1.0 + 1.0 / (x * x) + q / x4) + 1.0;
    };
    const double k_star = std::sqrt(xi / (1 + xi * xi));
    const double root = oracle::bisect(vg_plus_one, 1e-6, k_star);
    CHECK_THAT(superluminal_backward_threshold(Polarization(xi)), WithinRel(root, 1e-9));
}

TEST_CASE("group velocity equals the numerical derivative of the dispersion", "[kinematics]")
{
    const double xi = GENERATE(0.0, 0.2, 0.5, 1.0);
    const Polarization pol(xi);
    const double k_star = critical_points(pol).k_star;
    for (double x = 0.05; x <= 100.0; x *= 1.07)
    {
        const double fd = oracle::central_difference([xi](double t) { return oracle::dispersion(t, xi); }, x, 1e-6);
        const double vg = group_velocity(x, pol);
        if (std::abs(x - k_star) < 1e-3)
            CHECK_THAT(vg, WithinAbs(fd, 1e-6));
        else
            CHECK_THAT(vg, WithinRel(fd, 1e-4));
    }
}

TEST_CASE("velocity identities", "[kinematics][property]")
{
    const double x = GENERATE(take(60, random(0.02, 50.0)));
    const double xi = GENERATE(0.0, 0.3, 1.0);
    const Polarization pol(xi);
    const auto v = velocity_point(x, pol);
    CHECK_THAT(v.v_ph * x, WithinRel(omega_of_k(x, pol), 1e-12));
    CHECK(v.v_ph >= 1.0);
    CHECK(v.v_g < v.v_ph);
    if (xi == 0.0)
        CHECK_THAT(v.v_g * v.v_ph, WithinRel(1.0, 1e-12));
    else
    {
        const double k_star = critical_points(pol).k_star;
        if (x < k_star * (1 - 1e-9))
            CHECK(v.v_g < 0.0);
        if (x > k_star * (1 + 1e-9))
            CHECK(v.v_g > 0.0);
    }
}
