#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlj/scalar.hpp"

namespace tlj {

/// c_t(n) = [2n+1] in t over [2n+1]_q, as an exact pair.
struct CpaiExact {
    TPoly numerator;  ///< [2n+1] as a polynomial in t
    Scalar denominator; ///< [2n+1]_q
};
CpaiExact cpai_exact(int n);

/// Numeric value of c_t(n) at the given parameters (exact rational
/// evaluation, rounded once).
double cpai_numeric(int n, const NumericParams& params);

/// One row of the coefficient table. c_diagram is present when n is inside
/// the exact-diagram range (the Jones-Wenzl pipeline ran).
struct CPAIRow {
    int n = 0;
    double c_formula = 0.0;
    std::optional<double> c_diagram;
    double abs_gap = 0.0;
};

/// Diagram-side cross-check: c_diagram = atr(p_2n)/tr(p_2n) evaluated
/// numerically against the closed formula.
CPAIRow coefficient_cross_check(int n, const NumericParams& params);

struct DecayReport {
    std::vector<CPAIRow> rows;
    double final_c = 0.0;
    double max_last_third = 0.0;
    bool monotone = false; ///< reported, not asserted
    bool pass = false;     ///< final_c < 1e-2 and max over last third < 2e-2
};
/// Requires 0 < t < delta (the decay claim needs t strictly below delta).
DecayReport decay_report(const NumericParams& params, int n_max);

struct ConvergenceRow {
    double eps = 0.0;
    double max_abs_gap = 0.0; ///< max over n <= n_max of |c_{delta-eps}(n) - 1|
    std::vector<double> per_n;
};
struct ConvergenceReport {
    double delta = 0.0;
    int n_max = 0;
    std::vector<ConvergenceRow> rows;
};
ConvergenceReport convergence_report(int n_max, double delta, const std::vector<double>& eps_list);

/// Exact orthogonality probe: inner(x * g_n * y, g_m) with both Jones-Wenzl
/// elements included into TL_{2 max(n,m)}; all inner products must vanish
/// exactly. n == m is a precondition error.
bool orthogonality_check(int n, int m, int trials, std::mt19937_64& rng);

/// Numeric spectrum of the weight-n Gram matrix.
struct SpectrumRow {
    int n = 0;
    double delta = 0.0;
    double t = 0.0;
    double min_eig = 0.0;
    double max_eig = 0.0;
};
SpectrumRow gram_spectrum(int n, const NumericParams& params);
/// Sweep over t grids in (0, delta], `t_points` points per delta.
std::vector<SpectrumRow> psd_sweep(int n_max, const std::vector<double>& deltas, int t_points);
std::string spectra_csv(const std::vector<SpectrumRow>& rows);

/// CSV with columns n,delta,t,c_formula,c_diagram,abs_gap.
std::string cpai_csv(const std::vector<CPAIRow>& rows, double delta, double t);
nlohmann::json cpai_json(const std::vector<CPAIRow>& rows, double delta, double t);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct Certificate {
    double delta = 2.5;
    std::vector<double> t_grid;
    int n_max = 4;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool pass = false;
};

struct CertificateOptions {
    double delta = 2.5;
    double t_grid_min = 0.0; ///< 0: derive a default grid in (0, delta)
    double t_grid_max = 0.0;
    int t_grid_steps = 10;
    int n_max = 4;
    std::uint64_t seed = 0x5eed;
};

/// Runs every check suite and aggregates the verdicts.
Certificate run_certificate(const CertificateOptions& opts);
nlohmann::json certificate_to_json(const Certificate& c);

} // namespace tlj
