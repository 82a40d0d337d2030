#ifndef QUASIMODE_FIGURES_HPP
#define QUASIMODE_FIGURES_HPP

#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "quasimode/dispersion.hpp"
#include "quasimode/kinematics.hpp"
#include "quasimode/optics.hpp"
#include "quasimode/spectrum.hpp"
#include "quasimode/sweep.hpp"
#include "quasimode/table.hpp"

// Plot-ready datasets for the dispersion, wavenumber, velocity, reflectivity
// and energy curves. Everything is in reduced units (k/k_p, Omega/omega_p,
// v/c); the energy set uses hbar = m = omega_p = 1. Critical points are
// appended to each xi block as rows tagged in the `marker` column; ordinary
// rows leave it empty.

namespace quasimode
{

struct NamedTable
{
    std::string name;
    Table table;
};

inline const std::vector<double>& figure_xi_values()
{
    static const std::vector<double> values{0.0, 0.2, 0.5, 1.0};
    return values;
}

namespace detail
{
inline std::vector<double> figure_axis() { return Grid::range(0.01, 3.0, 300).points(); }

// Linear polarization has one physical curve; both columns carry it.
inline std::complex<double> lp_wavenumber(double y)
{
    const auto pair = k_branches(y, Polarization::linear());
    return pair.plus.value + pair.minus.value;
}

inline std::pair<std::complex<double>, std::complex<double>> figure_wavenumbers(double y, Polarization pol)
{
    if (pol.is_linear())
    {
        const auto k = lp_wavenumber(y);
        return {k, k};
    }
    const auto pair = k_branches(y, pol);
    return {pair.plus.value, pair.minus.value};
}

inline std::pair<double, double> figure_reflectivity(double y, Polarization pol)
{
    if (pol.is_linear())
    {
        const double r = reflectivity(refractive_index({1.0 - 1.0 / (y * y), 0.0}));
        return {r, r};
    }
    return {optical_response(y, pol, Branch::Plus).reflectivity, optical_response(y, pol, Branch::Minus).reflectivity};
}

// Omega* always, Omega~ unless it sits at zero frequency (circular polarization).
inline std::vector<std::pair<std::string, double>> frequency_markers(Polarization pol)
{
    const auto cp = critical_points(pol);
    std::vector<std::pair<std::string, double>> markers{{"omega_star", cp.omega_star}};
    if (cp.omega_tilde > 0.0)
        markers.emplace_back("omega_tilde", cp.omega_tilde);
    return markers;
}
} // namespace detail

inline Table figure_dispersion()
{
    Table t{{"k_over_kp", "xi", "omega_over_wp", "marker"}, {}};
    for (double xi : figure_xi_values())
    {
        const Polarization pol(xi);
        for (double x : detail::figure_axis())
            t.rows.push_back({x, xi, omega_of_k(x, pol), std::string()});
        const auto cp = critical_points(pol);
        t.rows.push_back({cp.k_star, xi, cp.omega_star, std::string("k_star")});
    }
    return t;
}

/// Real (`imaginary` false) or imaginary parts of both wavenumber branches.
inline Table figure_wavenumber(bool imaginary)
{
    const std::string part = imaginary ? "im" : "re";
    Table t{{"omega_over_wp", "xi", part + "_k_plus", part + "_k_minus", "marker"}, {}};
    auto pick = [imaginary](std::complex<double> z) { return imaginary ? z.imag() : z.real(); };
    for (double xi : figure_xi_values())
    {
        const Polarization pol(xi);
        for (double y : detail::figure_axis())
        {
            const auto [plus, minus] = detail::figure_wavenumbers(y, pol);
            t.rows.push_back({y, xi, pick(plus), pick(minus), std::string()});
        }
        for (const auto& [name, y] : detail::frequency_markers(pol))
        {
            const auto [plus, minus] = detail::figure_wavenumbers(y, pol);
            t.rows.push_back({y, xi, pick(plus), pick(minus), name});
        }
    }
    return t;
}

inline Table figure_velocities()
{
    Table t{{"k_over_kp", "xi", "v_phase_over_c", "v_group_over_c", "marker"}, {}};
    for (double xi : figure_xi_values())
    {
        const Polarization pol(xi);
        for (double x : detail::figure_axis())
        {
            const auto v = velocity_point(x, pol);
            t.rows.push_back({x, xi, v.v_ph, v.v_g, std::string()});
        }
        const double k_star = critical_points(pol).k_star;
        if (k_star > 0.0)
        {
            const auto v = velocity_point(k_star, pol);
            t.rows.push_back({k_star, xi, v.v_ph, v.v_g, std::string("k_star")});
        }
        else
        {
            // Linear polarization: the minimum sits at k = 0, where v_ph diverges.
            t.rows.push_back({0.0, xi, std::numeric_limits<double>::infinity(), 0.0, std::string("k_star")});
        }
    }
    return t;
}

inline Table figure_reflectivity()
{
    Table t{{"omega_over_wp", "xi", "r_plus", "r_minus", "marker"}, {}};
    for (double xi : figure_xi_values())
    {
        const Polarization pol(xi);
        for (double y : detail::figure_axis())
        {
            const auto [plus, minus] = detail::figure_reflectivity(y, pol);
            t.rows.push_back({y, xi, plus, minus, std::string()});
        }
        for (const auto& [name, y] : detail::frequency_markers(pol))
        {
            const auto [plus, minus] = detail::figure_reflectivity(y, pol);
            t.rows.push_back({y, xi, plus, minus, name});
        }
    }
    return t;
}

/// Energy of the n = 0 level versus field frequency for momenta along the
/// major polarization axis.
inline Table figure_energy()
{
    Table t{{"omega_over_wp", "p", "xi", "energy_over_hbar_wp", "marker"}, {}};
    const auto omegas = Grid::range(0.05, 3.0, 60).points();
    const std::vector<double> momenta{0.0, 0.5, 1.0};
    for (double xi : figure_xi_values())
    {
        const Polarization pol(xi);
        for (double p : momenta)
            for (double w : omegas)
            {
                const ModelParams params(pol, w, 1.0);
                t.rows.push_back({w, p, xi, energy_level(params, {p, 0.0, 0.0}, 0).energy, std::string()});
            }
        const auto minimum = zero_point_minimum(pol, 1.0);
        t.rows.push_back({minimum.omega_min, 0.0, xi, minimum.energy, std::string("omega_star")});
    }
    return t;
}

inline std::vector<NamedTable> figure_datasets()
{
    return {
        {"fig1_dispersion", figure_dispersion()},
        {"fig2a_rek", figure_wavenumber(false)},
        {"fig2b_imk", figure_wavenumber(true)},
        {"fig3_velocities", figure_velocities()},
        {"fig4_reflectivity", figure_reflectivity()},
        {"fig5_energy", figure_energy()},
    };
}

/// Writes every dataset as <outdir>/<name>.csv and returns the paths.
inline std::vector<std::filesystem::path> emit_figure_datasets(const std::filesystem::path& outdir)
{
    std::filesystem::create_directories(outdir);
    std::vector<std::filesystem::path> written;
    for (const auto& [name, table] : figure_datasets())
    {
        const auto path = outdir / (name + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::filesystem::filesystem_error("cannot open for writing", path,
                                                    std::make_error_code(std::errc::permission_denied));
        write_csv(out, table);
        out.close();
        if (!out)
            throw std::filesystem::filesystem_error("write failed", path, std::make_error_code(std::errc::io_error));
        written.push_back(path);
    }
    return written;
}

} // namespace quasimode

#endif // QUASIMODE_FIGURES_HPP
