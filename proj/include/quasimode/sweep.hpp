#ifndef QUASIMODE_SWEEP_HPP
#define QUASIMODE_SWEEP_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "quasimode/dispersion.hpp"
#include "quasimode/kinematics.hpp"
#include "quasimode/optics.hpp"
#include "quasimode/parallel.hpp"
#include "quasimode/plate_force.hpp"
#include "quasimode/spectrum.hpp"
#include "quasimode/table.hpp"
#include "quasimode/units.hpp"

namespace quasimode
{

/// Malformed or inconsistent sweep request (CLI exit code 2).
class SpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A domain error raised while evaluating one row; `where` names the row.
class RowDomainError : public DomainError
{
public:
    RowDomainError(const std::string& what, std::string where)
        : DomainError(what), where_(std::move(where))
    {
    }
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

enum class Spacing
{
    Linear,
    Log
};

/// Either a range start:stop:count (linear or log spacing) or an explicit
/// list of points. A single point is a list of length one.
struct Grid
{
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    Spacing spacing = Spacing::Linear;
    std::vector<double> explicit_points;

    static Grid range(double start, double stop, int count, Spacing spacing = Spacing::Linear)
    {
        Grid g;
        g.start = start;
        g.stop = stop;
        g.count = count;
        g.spacing = spacing;
        return g;
    }
    static Grid list(std::vector<double> points)
    {
        Grid g;
        g.explicit_points = std::move(points);
        return g;
    }

    bool is_range() const noexcept { return explicit_points.empty(); }

    void validate() const
    {
        if (!is_range())
        {
            for (double v : explicit_points)
                if (!std::isfinite(v))
                    throw SpecError("grid points must be finite");
            return;
        }
        if (!std::isfinite(start) || !std::isfinite(stop))
            throw SpecError("grid bounds must be finite");
        if (count < 2)
            throw SpecError("grid count must be at least 2");
        if (!(start < stop))
            throw SpecError("grid start must be below stop");
        if (spacing == Spacing::Log && start <= 0.0)
            throw SpecError("log-spaced grid needs a positive start");
    }

    /// Endpoints are reproduced exactly.
    std::vector<double> points() const
    {
        validate();
        if (!is_range())
            return explicit_points;
        std::vector<double> out(static_cast<std::size_t>(count));
        const double last = count - 1;
        for (int i = 0; i < count; ++i)
        {
            const double t = i / last;
            if (spacing == Spacing::Linear)
                out[i] = start + (stop - start) * t;
            else
                out[i] = std::exp(std::log(start) + (std::log(stop) - std::log(start)) * t);
        }
        out.front() = start;
        out.back() = stop;
        return out;
    }
};

namespace detail
{
inline double parse_double(std::string_view text)
{
    // strtod honours the C locale only, which is what we want here.
    const std::string s(text);
    if (s.empty())
        throw SpecError("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw SpecError("not a number: '" + s + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true)
    {
        const auto pos = text.find(sep, begin);
        parts.push_back(text.substr(begin, pos == std::string_view::npos ? std::string_view::npos : pos - begin));
        if (pos == std::string_view::npos)
            break;
        begin = pos + 1;
    }
    return parts;
}
} // namespace detail

/// Comma-separated list of reals.
inline std::vector<double> parse_list(std::string_view text)
{
    std::vector<double> values;
    for (auto part : detail::split(text, ','))
        values.push_back(detail::parse_double(part));
    return values;
}

/// "start:stop:count", "start:stop:count:log", or a comma-separated list.
inline Grid parse_grid(std::string_view text)
{
    if (text.find(':') == std::string_view::npos)
        return Grid::list(parse_list(text));
    const auto parts = detail::split(text, ':');
    if (parts.size() != 3 && parts.size() != 4)
        throw SpecError("grid must look like start:stop:count[:log|lin]");
    int count = 0;
    const auto c = parts[2];
    const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || ptr != c.data() + c.size())
        throw SpecError("grid count must be an integer");
    Spacing spacing = Spacing::Linear;
    if (parts.size() == 4)
    {
        if (parts[3] == "log")
            spacing = Spacing::Log;
        else if (parts[3] != "lin")
            throw SpecError("grid spacing must be 'lin' or 'log'");
    }
    Grid g = Grid::range(detail::parse_double(parts[0]), detail::parse_double(parts[1]), count, spacing);
    g.validate();
    return g;
}

enum class Quantity
{
    Dispersion,
    Wavenumber,
    Dielectric,
    Reflectivity,
    Velocity,
    Spectrum,
    Force
};

enum class UnitMode
{
    Reduced, // k / k_p, Omega / omega_p, v / c
    Atomic   // hbar = m = e = 1, c = 137.036
};

inline std::optional<Quantity> parse_quantity(std::string_view name)
{
    if (name == "dispersion")
        return Quantity::Dispersion;
    if (name == "wavenumber")
        return Quantity::Wavenumber;
    if (name == "dielectric")
        return Quantity::Dielectric;
    if (name == "reflectivity")
        return Quantity::Reflectivity;
    if (name == "velocity")
        return Quantity::Velocity;
    if (name == "spectrum")
        return Quantity::Spectrum;
    if (name == "force")
        return Quantity::Force;
    return std::nullopt;
}

inline const char* to_string(Quantity q)
{
    switch (q)
    {
    case Quantity::Dispersion: return "dispersion";
    case Quantity::Wavenumber: return "wavenumber";
    case Quantity::Dielectric: return "dielectric";
    case Quantity::Reflectivity: return "reflectivity";
    case Quantity::Velocity: return "velocity";
    case Quantity::Spectrum: return "spectrum";
    case Quantity::Force: return "force";
    }
    return "?";
}

inline const char* to_string(UnitMode u) { return u == UnitMode::Reduced ? "reduced" : "atomic"; }

/// Dispersion and velocity sweep the wavenumber; everything else sweeps a frequency.
inline bool sweeps_wavenumber(Quantity q) { return q == Quantity::Dispersion || q == Quantity::Velocity; }

/// Spectrum and force only make sense with dimensionful inputs.
inline bool requires_atomic_units(Quantity q) { return q == Quantity::Spectrum || q == Quantity::Force; }

struct SweepSpec
{
    Quantity quantity = Quantity::Dispersion;
    std::vector<double> xi_list{0.0};
    Grid grid = Grid::range(0.01, 3.0, 300);
    UnitMode units = UnitMode::Reduced;

    // Physical context, used in atomic units.
    double omega_p = 1.0;
    double c = UnitSystem::atomic().c;
    Momentum momentum{};
    int levels = 1;
    int charges = 1;
    int photons = 0;
    double separation = 1.0;
    double area = 1.0;

    void validate() const
    {
        if (xi_list.empty())
            throw SpecError("at least one xi value is required");
        for (double xi : xi_list)
            if (!(xi >= 0.0 && xi <= 1.0))
                throw SpecError(fmt::format("xi must lie in [0, 1], got {}", xi));
        if (requires_atomic_units(quantity) && units != UnitMode::Atomic)
            throw SpecError(fmt::format("{} sweeps are only defined in atomic units", to_string(quantity)));
        if (!(omega_p > 0.0) || !std::isfinite(omega_p))
            throw SpecError("omega_p must be positive");
        if (!(c > 0.0) || !std::isfinite(c))
            throw SpecError("c must be positive");
        if (levels < 1)
            throw SpecError("levels must be at least 1");
        if (charges < 1)
            throw SpecError("charges must be at least 1");
        if (photons < 0)
            throw SpecError("photons must be non-negative");
        if (!(separation > 0.0) || !(area > 0.0))
            throw SpecError("plate separation and area must be positive");

        grid.validate();
        bool any_elliptic = false;
        for (double xi : xi_list)
            any_elliptic = any_elliptic || xi > 0.0;
        for (double v : grid.points())
        {
            if (v < 0.0)
                throw SpecError("grid values must be non-negative");
            if (v > 0.0)
                continue;
            if (quantity == Quantity::Velocity)
                throw SpecError("velocity grid must exclude k = 0");
            if (quantity == Quantity::Dispersion && any_elliptic)
                throw SpecError("wavenumber grid must exclude 0 when xi > 0");
            if (quantity == Quantity::Dielectric || quantity == Quantity::Reflectivity)
                throw SpecError("frequency grid must exclude 0 for optical quantities");
            if (quantity == Quantity::Spectrum)
                throw SpecError("spectrum grid must exclude omega = 0");
        }
    }
};

inline std::vector<std::string> sweep_columns(Quantity q, UnitMode u)
{
    const bool reduced = u == UnitMode::Reduced;
    const std::string k = reduced ? "k_over_kp" : "k";
    const std::string w = reduced ? "omega_over_wp" : "omega";
    switch (q)
    {
    case Quantity::Dispersion: return {k, "xi", w};
    case Quantity::Wavenumber: return {w, "xi", "branch", "re_" + k, "im_" + k, "regime"};
    case Quantity::Dielectric: return {w, "xi", "branch", "re_zeta", "im_zeta", "re_eta", "im_eta"};
    case Quantity::Reflectivity: return {w, "xi", "branch", "reflectivity"};
    case Quantity::Velocity:
        return reduced ? std::vector<std::string>{k, "xi", "v_phase_over_c", "v_group_over_c"}
                       : std::vector<std::string>{k, "xi", "v_phase", "v_group"};
    case Quantity::Spectrum:
        return {"omega", "xi", "omega_p", "p_major", "p_minor", "p_perp", "n", "effective_omega", "theta", "sigma_sq",
                "energy"};
    case Quantity::Force:
        return {"omega", "xi", "separation", "area", "charges", "photons", "omega_p", "force"};
    }
    return {};
}

namespace detail
{
// Branch rows for one frequency. Linear polarization has a single physical
// branch, reported as "lp" (the nonzero member of the pair).
struct BranchSample
{
    const char* name;
    std::complex<double> k;
    Branch branch;
};

inline std::vector<BranchSample> branch_samples(double y, Polarization pol)
{
    const auto pair = k_branches(y, pol);
    if (pol.is_linear())
        return {{"lp", pair.plus.value + pair.minus.value, Branch::Plus}};
    return {{"plus", pair.plus.value, Branch::Plus}, {"minus", pair.minus.value, Branch::Minus}};
}

inline std::complex<double> lp_dielectric(double y) { return {1.0 - 1.0 / (y * y), 0.0}; }

inline std::vector<Row> sweep_rows(const SweepSpec& spec, double xi, double v)
{
    const Polarization pol(xi);
    const bool reduced = spec.units == UnitMode::Reduced;
    const double k_scale = reduced ? 1.0 : spec.omega_p / spec.c; // k_p
    const double w_scale = reduced ? 1.0 : spec.omega_p;
    const double v_scale = reduced ? 1.0 : spec.c;
    std::vector<Row> rows;

    switch (spec.quantity)
    {
    case Quantity::Dispersion:
        rows.push_back({v, xi, omega_of_k(v / k_scale, pol) * w_scale});
        break;
    case Quantity::Velocity:
    {
        const auto vp = velocity_point(v / k_scale, pol);
        rows.push_back({v, xi, vp.v_ph * v_scale, vp.v_g * v_scale});
        break;
    }
    case Quantity::Wavenumber:
    {
        const double y = v / w_scale;
        const std::string regime(to_string(classify_regime(y, pol)));
        for (const auto& b : branch_samples(y, pol))
            rows.push_back({v, xi, std::string(b.name), b.k.real() * k_scale, b.k.imag() * k_scale, regime});
        break;
    }
    case Quantity::Dielectric:
    case Quantity::Reflectivity:
    {
        const double y = v / w_scale;
        for (const auto& b : branch_samples(y, pol))
        {
            const auto zeta = pol.is_linear() ? lp_dielectric(y) : dielectric(y, pol, b.branch);
            const auto eta = refractive_index(zeta);
            if (spec.quantity == Quantity::Dielectric)
                rows.push_back({v, xi, std::string(b.name), zeta.real(), zeta.imag(), eta.real(), eta.imag()});
            else
                rows.push_back({v, xi, std::string(b.name), reflectivity(eta)});
        }
        break;
    }
    case Quantity::Spectrum:
    {
        const ModelParams params(pol, v, spec.omega_p, {1.0, 1.0, spec.c});
        const auto& p = spec.momentum;
        for (int n = 0; n < spec.levels; ++n)
        {
            const auto level = energy_level(params, p, n, spec.charges);
            rows.push_back({v, xi, spec.omega_p, p.p_major, p.p_minor, p.p_perp, std::int64_t{n}, level.Omega,
                            level.theta, level.sigma_sq, level.energy});
        }
        break;
    }
    case Quantity::Force:
    {
        const PlateGeometry geometry(spec.separation, spec.area, spec.charges, spec.photons);
        const double wp = plasma_frequency_plates(geometry);
        rows.push_back({v, xi, spec.separation, spec.area, std::int64_t{spec.charges}, std::int64_t{spec.photons}, wp,
                        force_general(v, geometry, pol)});
        break;
    }
    }
    // Extreme grid values can overflow intermediate squares; refuse to emit
    // a silently wrong number.
    for (const auto& row : rows)
        for (const auto& cell : row)
            if (const double* d = std::get_if<double>(&cell); d && !std::isfinite(*d))
                throw DomainError("result is not representable in double precision at this grid point");
    return rows;
}
} // namespace detail

/// Evaluates the sweep. Rows are ordered xi (outer), grid (inner), branch or
/// level (innermost); grid points are evaluated in parallel.
inline Table run_sweep(const SweepSpec& spec)
{
    spec.validate();
    const auto points = spec.grid.points();
    const std::size_t per_xi = points.size();
    const std::string grid_name = sweep_columns(spec.quantity, spec.units).front();

    auto chunks = parallel_map(spec.xi_list.size() * per_xi, [&](std::size_t i) {
        const double xi = spec.xi_list[i / per_xi];
        const double v = points[i % per_xi];
        try
        {
            return detail::sweep_rows(spec, xi, v);
        }
        catch (const DomainError& e)
        {
            throw RowDomainError(e.what(), fmt::format("grid point {} (xi={}, {}={})", i, xi, grid_name, v));
        }
    });

    Table table{sweep_columns(spec.quantity, spec.units), {}};
    for (auto& chunk : chunks)
        for (auto& row : chunk)
            table.rows.push_back(std::move(row));
    return table;
}

inline nlohmann::json sweep_to_json(const SweepSpec& spec, const Table& table)
{
    nlohmann::json j = table_to_json(table);
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "sweep";
    j["quantity"] = to_string(spec.quantity);
    j["units"] = to_string(spec.units);
    return j;
}

} // namespace quasimode

#endif // QUASIMODE_SWEEP_HPP
