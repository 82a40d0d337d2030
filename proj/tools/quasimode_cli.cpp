// quasimode: parameter sweeps, figure datasets, Fock-space verification and
// plate-force tables. Exit codes: 0 ok, 1 verification failure, 2 usage or
// spec error, 3 domain error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "quasimode/quasimode.hpp"

namespace qm = quasimode;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

enum class Format
{
    Csv,
    Json
};

Format parse_format(const std::string& name)
{
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    throw qm::SpecError("format must be csv or json");
}

qm::UnitMode parse_units(const std::string& name)
{
    if (name == "reduced")
        return qm::UnitMode::Reduced;
    if (name == "atomic")
        return qm::UnitMode::Atomic;
    throw qm::SpecError("units must be reduced or atomic");
}

qm::Momentum parse_momentum(const std::string& text)
{
    const auto v = qm::parse_list(text);
    if (v.size() != 3)
        throw qm::SpecError("momentum must be three comma-separated components p_major,p_minor,p_perp");
    return {v[0], v[1], v[2]};
}

// Writes to `path`, or stdout when it is empty. Binary mode keeps LF endings.
template <class Writer>
void emit(const std::string& path, Writer&& write)
{
    if (path.empty() || path == "-")
    {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::filesystem::filesystem_error("cannot open output", path,
                                                std::make_error_code(std::errc::permission_denied));
    write(out);
}

void emit_table(const std::string& path, Format format, const qm::Table& table, nlohmann::json header)
{
    emit(path, [&](std::ostream& out) {
        if (format == Format::Csv)
        {
            qm::write_csv(out, table);
            return;
        }
        nlohmann::json j = qm::table_to_json(table);
        j.update(header);
        out << j.dump(2) << '\n';
    });
}

struct CommonOptions
{
    std::string out;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--out", o.out, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

struct SweepOptions
{
    std::string quantity;
    std::string xi = "0";
    std::string k;
    std::string omega;
    std::string units;
    double omega_p = 1.0;
    double c = qm::UnitSystem::atomic().c;
    std::string p = "0,0,0";
    int levels = 1;
    int charges = 1;
    int photons = 0;
    double d = 1.0;
    double area = 1.0;
    CommonOptions io;
};

int run_sweep_command(const SweepOptions& o)
{
    const auto quantity = qm::parse_quantity(o.quantity);
    if (!quantity)
        throw qm::SpecError("unknown quantity '" + o.quantity + "'");

    qm::SweepSpec spec;
    spec.quantity = *quantity;
    spec.xi_list = qm::parse_list(o.xi);
    spec.units = o.units.empty() ? (qm::requires_atomic_units(*quantity) ? qm::UnitMode::Atomic : qm::UnitMode::Reduced)
                                 : parse_units(o.units);
    const bool by_k = qm::sweeps_wavenumber(*quantity);
    if (by_k && !o.omega.empty())
        throw qm::SpecError(fmt::format("{} sweeps the wavenumber; use --k", qm::to_string(*quantity)));
    if (!by_k && !o.k.empty())
        throw qm::SpecError(fmt::format("{} sweeps a frequency; use --omega", qm::to_string(*quantity)));
    const std::string& grid = by_k ? o.k : o.omega;
    if (!grid.empty())
        spec.grid = qm::parse_grid(grid);
    spec.omega_p = o.omega_p;
    spec.c = o.c;
    spec.momentum = parse_momentum(o.p);
    spec.levels = o.levels;
    spec.charges = o.charges;
    spec.photons = o.photons;
    spec.separation = o.d;
    spec.area = o.area;

    const auto table = qm::run_sweep(spec);
    emit_table(o.io.out, parse_format(o.io.format), table,
               {{"schema_version", qm::kSchemaVersion},
                {"kind", "sweep"},
                {"quantity", qm::to_string(spec.quantity)},
                {"units", qm::to_string(spec.units)}});
    return kExitOk;
}

struct VerifyCliOptions
{
    std::string xi = "0,0.5,1";
    std::string omega = "1";
    std::string omega_p = "0.5,2";
    std::vector<std::string> p;
    int levels = 5;
    double tol = 1e-6;
    int start_cutoff = 64;
    int cutoff_cap = 1024;
    std::string out;
    std::string format = "json";
};

int run_verify_command(const VerifyCliOptions& o)
{
    if (!(o.tol > 0.0))
        throw qm::SpecError("--tol must be positive");
    if (o.start_cutoff < qm::kMinimumCutoff || o.cutoff_cap < o.start_cutoff)
        throw qm::SpecError("need 8 <= start cutoff <= cutoff cap");
    if (o.levels < 1 || o.levels > o.start_cutoff / 4)
        throw qm::SpecError("--levels must lie in [1, start_cutoff/4]");

    std::vector<std::pair<double, double>> frequencies;
    for (double w : qm::parse_list(o.omega))
        for (double wp : qm::parse_list(o.omega_p))
            frequencies.emplace_back(w, wp);
    std::vector<qm::Momentum> momenta;
    for (const auto& text : o.p)
        momenta.push_back(parse_momentum(text));
    if (momenta.empty())
        momenta = {qm::Momentum{}, qm::Momentum{0.2, 0.1, 0.05}};
    const auto xis = qm::parse_list(o.xi);
    for (double xi : xis)
        if (!(xi >= 0.0 && xi <= 1.0))
            throw qm::SpecError("xi must lie in [0, 1]");
    for (const auto& [w, wp] : frequencies)
        if (!(w > 0.0) || !(wp >= 0.0))
            throw qm::SpecError("verification needs omega > 0 and omega_p >= 0");

    qm::VerifyConfig config;
    config.cases = qm::cartesian_cases(xis, frequencies, momenta);
    config.levels = o.levels;
    config.tol = o.tol;
    config.options = {o.start_cutoff, o.cutoff_cap};

    const auto summary = qm::run_verify(config);
    const Format format = parse_format(o.format);
    emit(o.out, [&](std::ostream& out) {
        if (format == Format::Json)
        {
            out << qm::verify_to_json(config, summary).dump(2) << '\n';
            return;
        }
        qm::Table t{{"xi", "omega", "omega_p", "p_major", "p_minor", "p_perp", "cutoff_used", "max_rel_err",
                     "max_spacing_rel_err", "converged", "passed"},
                    {}};
        for (const auto& r : summary.results)
            t.rows.push_back({r.input.xi, r.input.omega, r.input.omega_p, r.input.p.p_major, r.input.p.p_minor,
                              r.input.p.p_perp, std::int64_t{r.report.cutoff_used}, r.report.max_rel_err,
                              r.report.max_spacing_rel_err, std::int64_t{r.report.converged},
                              std::int64_t{r.passed}});
        qm::write_csv(out, t);
    });

    for (const auto& r : summary.results)
        if (!r.passed)
            std::cerr << fmt::format("verification failed: xi={} omega={} omega_p={} p=({},{},{}) "
                                     "max_rel_err={:.3e} spacing_err={:.3e} cutoff_used={} {}\n",
                                     r.input.xi, r.input.omega, r.input.omega_p, r.input.p.p_major,
                                     r.input.p.p_minor, r.input.p.p_perp, r.report.max_rel_err,
                                     r.report.max_spacing_rel_err, r.report.cutoff_used,
                                     r.report.truncation_stable ? "" : "(truncation did not stabilize)");
    return summary.all_passed ? kExitOk : kExitVerifyFailed;
}

struct ForceOptions
{
    std::string xi = "0,0.5,1";
    std::string d = "1";
    double area = 1.0;
    int charges = 1;
    int photons = 0;
    std::string mode = "recompute";
    double d_ref = 1.0;
    CommonOptions io;
};

int run_force_command(const ForceOptions& o)
{
    const auto xis = qm::parse_list(o.xi);
    for (double xi : xis)
        if (!(xi >= 0.0 && xi <= 1.0))
            throw qm::SpecError("xi must lie in [0, 1]");
    const auto separations = qm::parse_grid(o.d).points();
    for (double d : separations)
        if (!(d > 0.0))
            throw qm::SpecError("separations must be positive");
    if (!(o.area > 0.0) || !(o.d_ref > 0.0) || o.charges < 0 || o.photons < 0)
        throw qm::SpecError("area and reference separation must be positive, counts non-negative");

    const bool frozen = o.mode == "frozen";
    qm::Table t;
    t.columns = frozen ? std::vector<std::string>{"separation", "xi", "omega_p", "force_star"}
                       : std::vector<std::string>{"separation",        "xi",         "omega_p", "omega_min",
                                                  "zero_point_energy", "force_star", "force_star_bohr_form"};
    const qm::PlateGeometry reference(o.d_ref, o.area, o.charges, o.photons);
    for (double xi : xis)
    {
        const qm::Polarization pol(xi);
        for (double d : separations)
        {
            if (frozen)
            {
                t.rows.push_back({d, xi, qm::plasma_frequency_plates(reference),
                                  qm::force_at_separation(reference, d, pol, qm::OmegaPScaling::Frozen)});
                continue;
            }
            const auto geometry = reference.with_separation(d);
            const double wp = qm::plasma_frequency_plates(geometry);
            const auto f = qm::force_at_minimum(geometry, pol);
            if (wp > 0.0)
            {
                const auto zp = qm::zero_point_minimum(pol, wp);
                t.rows.push_back({d, xi, wp, zp.omega_min, zp.energy, f.plasma_form, f.bohr_form});
            }
            else
                t.rows.push_back({d, xi, wp, 0.0, 0.0, f.plasma_form, f.bohr_form});
        }
    }
    emit_table(o.io.out, parse_format(o.io.format), t,
               {{"schema_version", qm::kSchemaVersion}, {"kind", "force"}, {"mode", o.mode}});
    return kExitOk;
}

struct SpectrumOptions
{
    std::string xi = "0,1";
    std::string omega = "1";
    double omega_p = 1.0;
    std::string p = "0,0,0";
    int levels = 5;
    int charges = 1;
    CommonOptions io;
};

int run_spectrum_command(const SpectrumOptions& o)
{
    qm::SweepSpec spec;
    spec.quantity = qm::Quantity::Spectrum;
    spec.units = qm::UnitMode::Atomic;
    spec.xi_list = qm::parse_list(o.xi);
    spec.grid = qm::parse_grid(o.omega);
    spec.omega_p = o.omega_p;
    spec.momentum = parse_momentum(o.p);
    spec.levels = o.levels;
    spec.charges = o.charges;
    const auto table = qm::run_sweep(spec);
    emit_table(o.io.out, parse_format(o.io.format), table,
               {{"schema_version", qm::kSchemaVersion}, {"kind", "spectrum"}, {"units", "atomic"}});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Single-mode plasma quasiparticle calculator"};
    app.require_subcommand(1);

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate one quantity over xi and a k or omega grid");
    sweep_cmd->add_option("quantity", sweep.quantity,
                          "dispersion | wavenumber | dielectric | reflectivity | velocity | spectrum | force")
        ->required();
    sweep_cmd->add_option("--xi", sweep.xi, "Comma-separated polarization parameters in [0, 1]");
    sweep_cmd->add_option("--k", sweep.k, "Wavenumber grid start:stop:count[:log] or list");
    sweep_cmd->add_option("--omega", sweep.omega, "Frequency grid start:stop:count[:log] or list");
    sweep_cmd->add_option("--units", sweep.units, "reduced or atomic")->check(CLI::IsMember({"reduced", "atomic"}));
    sweep_cmd->add_option("--omega-p", sweep.omega_p, "Plasma frequency (atomic units)");
    sweep_cmd->add_option("--c", sweep.c, "Speed of light (atomic units)");
    sweep_cmd->add_option("--p", sweep.p, "Momentum p_major,p_minor,p_perp");
    sweep_cmd->add_option("--levels", sweep.levels, "Levels per point (spectrum)");
    sweep_cmd->add_option("--charges", sweep.charges, "Number of charges N");
    sweep_cmd->add_option("--photons", sweep.photons, "Photon number n (force)");
    sweep_cmd->add_option("--d", sweep.d, "Plate separation (force)");
    sweep_cmd->add_option("--area", sweep.area, "Plate area (force)");
    add_output_options(sweep_cmd, sweep.io);

    std::string figures_out = "figures";
    auto* figures_cmd = app.add_subcommand("figures", "Write the six plot datasets as CSV");
    figures_cmd->add_option("--out", figures_out, "Output directory");

    VerifyCliOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Compare analytic levels with Fock-space diagonalization");
    verify_cmd->add_option("--xi", verify.xi, "Comma-separated xi values");
    verify_cmd->add_option("--omega", verify.omega, "Comma-separated field frequencies");
    verify_cmd->add_option("--omega-p", verify.omega_p, "Comma-separated plasma frequencies");
    verify_cmd->add_option("--p", verify.p, "Momentum p_major,p_minor,p_perp (repeatable)");
    verify_cmd->add_option("--levels", verify.levels, "Number of lowest levels compared");
    verify_cmd->add_option("--tol", verify.tol, "Relative tolerance");
    verify_cmd->add_option("--start-cutoff", verify.start_cutoff, "First Fock cutoff");
    verify_cmd->add_option("--cutoff-cap", verify.cutoff_cap, "Largest Fock cutoff tried");
    verify_cmd->add_option("--out", verify.out, "Report file (default: stdout)");
    verify_cmd->add_option("--format", verify.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));

    ForceOptions force;
    auto* force_cmd = app.add_subcommand("force", "Plate force at the zero-point minimum");
    force_cmd->add_option("--xi", force.xi, "Comma-separated xi values");
    force_cmd->add_option("--d", force.d, "Separation grid start:stop:count[:log] or list");
    force_cmd->add_option("--area", force.area, "Plate area");
    force_cmd->add_option("--charges", force.charges, "Number of charges N");
    force_cmd->add_option("--photons", force.photons, "Photon number n");
    force_cmd->add_option("--mode", force.mode, "recompute (omega_p follows d) or frozen")
        ->check(CLI::IsMember({"recompute", "frozen"}));
    force_cmd->add_option("--d-ref", force.d_ref, "Reference separation fixing omega_p in frozen mode");
    add_output_options(force_cmd, force.io);

    SpectrumOptions spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy levels E_n (atomic units)");
    spectrum_cmd->add_option("--xi", spectrum.xi, "Comma-separated xi values");
    spectrum_cmd->add_option("--omega", spectrum.omega, "Field frequency grid or list");
    spectrum_cmd->add_option("--omega-p", spectrum.omega_p, "Plasma frequency");
    spectrum_cmd->add_option("--p", spectrum.p, "Momentum p_major,p_minor,p_perp");
    spectrum_cmd->add_option("--levels", spectrum.levels, "Number of levels");
    spectrum_cmd->add_option("--charges", spectrum.charges, "Number of charges N");
    add_output_options(spectrum_cmd, spectrum.io);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        if (*sweep_cmd)
            return run_sweep_command(sweep);
        if (*figures_cmd)
        {
            for (const auto& path : qm::emit_figure_datasets(figures_out))
                std::cerr << "wrote " << path.string() << '\n';
            return kExitOk;
        }
        if (*verify_cmd)
            return run_verify_command(verify);
        if (*force_cmd)
            return run_force_command(force);
        if (*spectrum_cmd)
            return run_spectrum_command(spectrum);
    }
    catch (const qm::SpecError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const qm::RowDomainError& e)
    {
        std::cerr << "domain error at " << e.where() << ": " << e.what() << '\n';
        return kExitDomain;
    }
    catch (const qm::DomainError& e)
    {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    catch (const std::filesystem::filesystem_error& e)
    {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const qm::EigenSolverError& e)
    {
        std::cerr << "eigensolver error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
