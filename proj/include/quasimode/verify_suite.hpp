#ifndef QUASIMODE_VERIFY_SUITE_HPP
#define QUASIMODE_VERIFY_SUITE_HPP

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasimode/fock_oracle.hpp"
#include "quasimode/parallel.hpp"
#include "quasimode/table.hpp"

// Batch comparison of the analytic spectrum against the truncated Fock-space
// diagonalization over a parameter grid.

namespace quasimode
{

struct VerifyCase
{
    double xi;
    double omega;
    double omega_p;
    Momentum p;

    bool operator==(const VerifyCase& o) const
    {
        return xi == o.xi && omega == o.omega && omega_p == o.omega_p && p.p_major == o.p.p_major
            && p.p_minor == o.p.p_minor && p.p_perp == o.p.p_perp;
    }
};

struct VerifyConfig
{
    std::vector<VerifyCase> cases;
    int levels = 5;
    double tol = 1e-6;
    VerifyOptions options{};
};

/// Cartesian product in the order xi, (omega, omega_p), p; duplicates dropped.
inline std::vector<VerifyCase> cartesian_cases(const std::vector<double>& xis,
                                               const std::vector<std::pair<double, double>>& frequencies,
                                               const std::vector<Momentum>& momenta)
{
    std::vector<VerifyCase> cases;
    for (double xi : xis)
        for (const auto& [w, wp] : frequencies)
            for (const auto& p : momenta)
            {
                const VerifyCase c{xi, w, wp, p};
                if (std::find(cases.begin(), cases.end(), c) == cases.end())
                    cases.push_back(c);
            }
    return cases;
}

inline VerifyConfig default_verify_config()
{
    VerifyConfig config;
    config.cases = cartesian_cases({0.0, 0.5, 1.0}, {{1.0, 0.5}, {1.0, 2.0}}, {Momentum{}, Momentum{0.2, 0.1, 0.05}});
    return config;
}

struct VerifyCaseResult
{
    VerifyCase input;
    VerificationReport report;
    bool passed = false; // converged and level spacing within tol
};

struct VerifySummary
{
    std::vector<VerifyCaseResult> results;
    bool all_passed = false;
};

inline VerifySummary run_verify(const VerifyConfig& config)
{
    detail::require(!config.cases.empty(), "verification needs at least one case");
    VerifySummary summary;
    summary.results = parallel_map(config.cases.size(), [&](std::size_t i) {
        const auto& c = config.cases[i];
        const ModelParams params(Polarization(c.xi), c.omega, c.omega_p);
        VerifyCaseResult r{c, verify_spectrum(params, c.p, config.levels, config.tol, config.options)};
        r.passed = r.report.converged && r.report.max_spacing_rel_err <= config.tol;
        return r;
    });
    summary.all_passed = std::all_of(summary.results.begin(), summary.results.end(),
                                     [](const VerifyCaseResult& r) { return r.passed; });
    return summary;
}

inline nlohmann::json verify_to_json(const VerifyConfig& config, const VerifySummary& summary)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& r : summary.results)
    {
        nlohmann::json history = nlohmann::json::array();
        for (const auto& step : r.report.history)
            history.push_back({{"cutoff", step.cutoff}, {"max_rel_change", step.max_rel_change}});
        cases.push_back({
            {"xi", r.input.xi},
            {"omega", r.input.omega},
            {"omega_p", r.input.omega_p},
            {"p", {r.input.p.p_major, r.input.p.p_minor, r.input.p.p_perp}},
            {"passed", r.passed},
            {"converged", r.report.converged},
            {"truncation_stable", r.report.truncation_stable},
            {"cutoff_used", r.report.cutoff_used},
            {"max_rel_err", r.report.max_rel_err},
            {"max_spacing_rel_err", r.report.max_spacing_rel_err},
            {"lowest_analytic", r.report.lowest_analytic},
            {"lowest_numeric", r.report.lowest_numeric},
            {"history", std::move(history)},
        });
    }
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "verify"},
        {"tol", config.tol},
        {"levels", config.levels},
        {"start_cutoff", config.options.start_cutoff},
        {"cutoff_cap", config.options.cutoff_cap},
        {"all_passed", summary.all_passed},
        {"cases", std::move(cases)},
    };
}

} // namespace quasimode

#endif // QUASIMODE_VERIFY_SUITE_HPP
