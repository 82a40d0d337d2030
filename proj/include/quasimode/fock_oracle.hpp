#ifndef QUASIMODE_FOCK_ORACLE_HPP
#define QUASIMODE_FOCK_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quasimode/spectrum.hpp"
#include "quasimode/units.hpp"

// Brute-force check of the analytic spectrum: the undiagonalized Hamiltonian
// in a truncated photon-number basis |0>, ..., |N_max>, solved numerically.
//
//   H = p^2/2m - g p.E a - g p.E* a† + (hbar omega + quad)(a†a + 1/2)
//       + (quad/2)(1 - xi^2)/(1 + xi^2) (a^2 + a†^2)
//
// with E = (Re u + i xi Im u)/sqrt(1 + xi^2), u = (1, i).

namespace quasimode
{

class EigenSolverError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class HamiltonianVariant
{
    Dipole,
    PlaneWave // adds -(hbar k p_perp/m)(n + 1/2) + (hbar^2 k^2 / 2m)(n + 1/2)^2, k = omega / c
};

struct FockHamiltonian
{
    int cutoff;
    Eigen::MatrixXcd matrix;
    ModelParams params;
    Momentum momentum;
    HamiltonianVariant variant;

    Eigen::Index dimension() const { return matrix.rows(); }
};

inline constexpr int kMinimumCutoff = 8;

inline FockHamiltonian build_dipole_hamiltonian(const ModelParams& params, const Momentum& p, int cutoff)
{
    detail::require(cutoff >= kMinimumCutoff, "Fock cutoff must be at least 8");
    detail::require(params.omega() > 0.0, "Fock Hamiltonian requires a positive field frequency omega");
    const auto dc = derived_constants(params);
    const double xi = params.xi();
    const double level = params.hbar() * params.omega() + dc.quad;
    const double squeeze = 0.5 * dc.quad * params.polarization().anisotropy();
    const std::complex<double> p_dot_e = std::complex<double>(p.p_major, xi * p.p_minor) / std::sqrt(1.0 + xi * xi);
    const std::complex<double> linear = -dc.g * p_dot_e; // coefficient of a
    const double kinetic = p.norm_sq() / (2.0 * params.mass());

    const Eigen::Index dim = cutoff + 1;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n)
    {
        const double nd = static_cast<double>(n);
        h(n, n) = kinetic + level * (nd + 0.5);
        if (n + 1 < dim)
        {
            // <n| a |n+1> = sqrt(n+1)
            const std::complex<double> v = linear * std::sqrt(nd + 1.0);
            h(n, n + 1) = v;
            h(n + 1, n) = std::conj(v);
        }
        if (n + 2 < dim)
        {
            const double v = squeeze * std::sqrt((nd + 1.0) * (nd + 2.0));
            h(n, n + 2) = v;
            h(n + 2, n) = v;
        }
    }
    return {cutoff, std::move(h), params, p, HamiltonianVariant::Dipole};
}

inline FockHamiltonian build_planewave_hamiltonian(const ModelParams& params, const Momentum& p, int cutoff)
{
    FockHamiltonian h = build_dipole_hamiltonian(params, p, cutoff);
    const double k = params.omega() / params.c();
    const double hbar = params.hbar();
    const double m = params.mass();
    const double recoil = hbar * hbar * k * k / (2.0 * m);
    const double doppler = hbar * k * p.p_perp / m;
    for (Eigen::Index n = 0; n < h.dimension(); ++n)
    {
        const double occ = static_cast<double>(n) + 0.5;
        h.matrix(n, n) += -doppler * occ + recoil * occ * occ;
    }
    h.variant = HamiltonianVariant::PlaneWave;
    return h;
}

inline bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-14)
{
    if (m.rows() != m.cols())
        return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                return false;
    return true;
}

/// True when every entry off the diagonals 0, ±1, ±2 is exactly zero.
inline bool is_pentadiagonal(const Eigen::MatrixXcd& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (std::abs(i - j) > 2 && m(i, j) != std::complex<double>(0.0, 0.0))
                return false;
    return true;
}

/// The `count` smallest eigenvalues of a Hermitian matrix, ascending.
inline std::vector<double> lowest_eigenvalues(const Eigen::MatrixXcd& m, int count)
{
    detail::require(m.rows() == m.cols(), "eigenvalue solve needs a square matrix");
    detail::require(count >= 0 && count <= m.rows(), "requested more eigenvalues than the matrix dimension");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigenSolverError("Hermitian eigensolver failed to converge (dimension " + std::to_string(m.rows()) + ")");
    const Eigen::VectorXd& values = solver.eigenvalues();
    return {values.data(), values.data() + count};
}

/// Refuses counts above cutoff/4, where truncation contaminates the levels.
inline std::vector<double> lowest_eigenvalues(const FockHamiltonian& h, int count)
{
    detail::require(count <= h.cutoff / 4, "level count must not exceed cutoff/4");
    return lowest_eigenvalues(h.matrix, count);
}

struct CutoffStep
{
    int cutoff;
    double max_rel_change; // vs the previous cutoff; 0 for the first step
};

struct VerificationReport
{
    std::vector<double> lowest_analytic;
    std::vector<double> lowest_numeric;
    double max_rel_err = 0.0;
    double max_spacing_rel_err = 0.0; // |(E_{n+1} - E_n) - hbar Omega| / hbar Omega
    int cutoff_used = 0;
    bool truncation_stable = false;
    bool converged = false;
    std::vector<CutoffStep> history;
};

struct VerifyOptions
{
    int start_cutoff = 64;
    int cutoff_cap = 1024;
};

namespace detail
{
inline double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        const double scale = std::max(std::abs(b[i]), std::numeric_limits<double>::min());
        worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
    }
    return worst;
}
} // namespace detail

/// Doubles the cutoff from `start_cutoff` until the lowest `n_levels`
/// eigenvalues move by less than tol/10 (relative) between successive
/// cutoffs, then compares the lower cutoff of that pair with the analytic
/// levels. Hitting the cap without settling is reported, not thrown.
inline VerificationReport verify_spectrum(const ModelParams& params, const Momentum& p, int n_levels, double tol,
                                          VerifyOptions options = {})
{
    detail::require(tol > 0.0, "verification tolerance must be positive");
    detail::require(n_levels >= 1, "at least one level must be verified");
    detail::require(options.start_cutoff >= kMinimumCutoff, "start cutoff must be at least 8");
    detail::require(n_levels <= options.start_cutoff / 4, "level count must not exceed start_cutoff/4");

    VerificationReport report;
    for (int n = 0; n < n_levels; ++n)
        report.lowest_analytic.push_back(energy_level(params, p, n).energy);

    int cutoff = options.start_cutoff;
    std::vector<double> current = lowest_eigenvalues(build_dipole_hamiltonian(params, p, cutoff), n_levels);
    report.history.push_back({cutoff, 0.0});
    while (true)
    {
        const int next_cutoff = cutoff * 2;
        if (next_cutoff > options.cutoff_cap)
            break;
        std::vector<double> next = lowest_eigenvalues(build_dipole_hamiltonian(params, p, next_cutoff), n_levels);
        const double change = detail::max_rel_diff(current, next);
        report.history.push_back({next_cutoff, change});
        if (change < tol / 10.0)
        {
            report.truncation_stable = true;
            break;
        }
        cutoff = next_cutoff;
        current = std::move(next);
    }

    report.cutoff_used = cutoff;
    report.lowest_numeric = std::move(current);
    report.max_rel_err = detail::max_rel_diff(report.lowest_numeric, report.lowest_analytic);

    const double quantum = params.hbar() * effective_frequency(params);
    for (std::size_t i = 0; i + 1 < report.lowest_numeric.size(); ++i)
    {
        const double spacing = report.lowest_numeric[i + 1] - report.lowest_numeric[i];
        report.max_spacing_rel_err = std::max(report.max_spacing_rel_err, std::abs(spacing - quantum) / quantum);
    }
    report.converged = report.truncation_stable && report.max_rel_err <= tol;
    return report;
}

/// <(n + 1/2)> and <(n + 1/2)^2> in the squeezed vacuum with parameter theta.
struct SqueezedVacuumMoments
{
    double occupation_half;
    double occupation_half_sq;
};

inline SqueezedVacuumMoments squeezed_vacuum_moments(double theta)
{
    const double s2 = std::sinh(theta) * std::sinh(theta);
    const double c2 = std::cosh(theta) * std::cosh(theta);
    // <n> = s^2, <n^2> = s^4 + 2 s^2 c^2
    return {s2 + 0.5, s2 * s2 + 2.0 * s2 * c2 + s2 + 0.25};
}

/// First-order shift of the ground level from the plane-wave terms. Valid
/// when the in-plane momentum vanishes, so the unperturbed ground state is the
/// squeezed vacuum.
inline double first_order_planewave_shift(const ModelParams& params, const Momentum& p)
{
    detail::require(p.p_major == 0.0 && p.p_minor == 0.0,
                    "first-order plane-wave shift needs zero in-plane momentum");
    const auto moments = squeezed_vacuum_moments(bogoliubov_theta(params));
    const double k = params.omega() / params.c();
    const double recoil = params.hbar() * params.hbar() * k * k / (2.0 * params.mass());
    const double doppler = params.hbar() * k * p.p_perp / params.mass();
    return -doppler * moments.occupation_half + recoil * moments.occupation_half_sq;
}

} // namespace quasimode

#endif // QUASIMODE_FOCK_ORACLE_HPP
