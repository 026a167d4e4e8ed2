#include "tlj/report.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "tlj/annular.hpp"
#include "tlj/boxalg.hpp"
#include "tlj/config.hpp"
#include "tlj/jw.hpp"
#include "tlj/tl.hpp"

namespace tlj {

CpaiExact cpai_exact(int n) {
    if (n < 0) throw domain_error("cpai requires n >= 0");
    return CpaiExact{qint_t(2 * n + 1), qint(2 * n + 1)};
}

namespace {

mpq_class cpai_exact_value(int n, const NumericParams& p) {
    CpaiExact e = cpai_exact(n);
    mpq_class q(p.q), t(p.t);
    mpq_class den = e.denominator.eval_exact(q);
    if (den == 0) throw eval_error("[2n+1]_q vanished at the evaluation point");
    mpq_class v = e.numerator.eval_exact(q, t) / den;
    v.canonicalize();
    return v;
}

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

} // namespace

double cpai_numeric(int n, const NumericParams& params) {
    return cpai_exact_value(n, params).get_d();
}

CPAIRow coefficient_cross_check(int n, const NumericParams& params) {
    if (n < 0) throw domain_error("cross check requires n >= 0");
    if (2 * n > max_strands())
        throw resource_limit_error("coefficient_cross_check: n exceeds strand cap");
    CPAIRow row;
    row.n = n;
    mpq_class q(params.q), t(params.t);
    mpq_class formula = cpai_exact_value(n, params);
    const TLElement& p = jones_wenzl(2 * n);
    mpq_class tr = markov_trace(p).eval_exact(q);
    if (tr == 0) throw eval_error("tr(p_2n) vanished at the evaluation point");
    mpq_class diagram = annular_trace(p).eval_exact(q, t) / tr;
    diagram.canonicalize();
    row.c_formula = formula.get_d();
    row.c_diagram = diagram.get_d();
    mpq_class gap = formula - diagram;
    row.abs_gap = std::abs(gap.get_d());
    return row;
}

DecayReport decay_report(const NumericParams& params, int n_max) {
    if (!(params.t < params.delta))
        throw domain_error("decay_report requires t < delta");
    DecayReport rep;
    for (int n = 0; n <= n_max; ++n) {
        CPAIRow row;
        row.n = n;
        row.c_formula = cpai_numeric(n, params);
        rep.rows.push_back(row);
    }
    rep.final_c = rep.rows.back().c_formula;
    rep.monotone = true;
    for (int n = 2; n <= n_max; ++n)
        if (rep.rows[static_cast<std::size_t>(n)].c_formula >=
            rep.rows[static_cast<std::size_t>(n - 1)].c_formula)
            rep.monotone = false;
    int last_third_start = n_max - n_max / 3;
    rep.max_last_third = 0.0;
    for (int n = last_third_start; n <= n_max; ++n)
        rep.max_last_third =
            std::max(rep.max_last_third, std::abs(rep.rows[static_cast<std::size_t>(n)].c_formula));
    rep.pass = rep.final_c < 1e-2 && rep.max_last_third < 2e-2;
    return rep;
}

ConvergenceReport convergence_report(int n_max, double delta, const std::vector<double>& eps_list) {
    ConvergenceReport rep;
    rep.delta = delta;
    rep.n_max = n_max;
    for (double eps : eps_list) {
        if (!(eps > 0)) throw domain_error("convergence_report requires eps > 0");
        NumericParams p = NumericParams::make(delta, delta - eps);
        ConvergenceRow row;
        row.eps = eps;
        for (int n = 0; n <= n_max; ++n) {
            double gap = std::abs(cpai_numeric(n, p) - 1.0);
            row.per_n.push_back(gap);
            row.max_abs_gap = std::max(row.max_abs_gap, gap);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

bool orthogonality_check(int n, int m, int trials, std::mt19937_64& rng) {
    if (n == m) throw domain_error("orthogonality_check requires n != m");
    const int size = 2 * std::max(n, m);
    TLElement gn = include_to(jones_wenzl(2 * n), size);
    TLElement gm = include_to(jones_wenzl(2 * m), size);
    for (int k = 0; k < trials; ++k) {
        TLElement x = random_element(size, 3, rng);
        TLElement y = random_element(size, 3, rng);
        if (!inner(x * gn * y, gm).is_zero()) return false;
    }
    return true;
}

SpectrumRow gram_spectrum(int n, const NumericParams& params) {
    auto g = gram_matrix(n);
    const auto dim = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            a(i, j) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    SpectrumRow row;
    row.n = n;
    row.delta = params.delta;
    row.t = params.t;
    row.min_eig = solver.eigenvalues().minCoeff();
    row.max_eig = solver.eigenvalues().maxCoeff();
    return row;
}

std::vector<SpectrumRow> psd_sweep(int n_max, const std::vector<double>& deltas, int t_points) {
    std::vector<SpectrumRow> rows;
    for (double delta : deltas) {
        for (int k = 1; k <= t_points; ++k) {
            double t = delta * static_cast<double>(k) / static_cast<double>(t_points);
            NumericParams p = NumericParams::make(delta, t);
            for (int n = 0; n <= n_max; ++n) rows.push_back(gram_spectrum(n, p));
        }
    }
    return rows;
}

std::string spectra_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream out;
    out << "n,t,delta,min_eig,max_eig\n";
    for (const auto& r : rows)
        out << r.n << "," << fmt(r.t) << "," << fmt(r.delta) << "," << fmt(r.min_eig) << ","
            << fmt(r.max_eig) << "\n";
    return out.str();
}

std::string cpai_csv(const std::vector<CPAIRow>& rows, double delta, double t) {
    std::ostringstream out;
    out << "n,delta,t,c_formula,c_diagram,abs_gap\n";
    for (const auto& r : rows) {
        out << r.n << "," << fmt(delta) << "," << fmt(t) << "," << fmt(r.c_formula) << ",";
        if (r.c_diagram) out << fmt(*r.c_diagram);
        out << "," << fmt(r.abs_gap) << "\n";
    }
    return out.str();
}

nlohmann::json cpai_json(const std::vector<CPAIRow>& rows, double delta, double t) {
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"n", r.n}, {"c_formula", r.c_formula}, {"abs_gap", r.abs_gap}};
        if (r.c_diagram) j["c_diagram"] = *r.c_diagram;
        jrows.push_back(j);
    }
    return nlohmann::json{{"schema", 1}, {"delta", delta}, {"t", t}, {"rows", jrows}};
}

namespace {

using Matrix = std::vector<std::vector<TPoly>>;

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix r(a[0].size(), std::vector<TPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    Matrix r(a.size(), std::vector<TPoly>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

// Hole-free disc pairing: glue two matchings, count all loops, weight delta
// each. Independent of the annular machinery (ignores the holes entirely).
Scalar disc_pairing(const TLDiagram& a, const TLDiagram& b) {
    const int N = 2 * a.size();
    std::vector<bool> visited(static_cast<std::size_t>(N), false);
    int loops = 0;
    for (int p = 0; p < N; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        ++loops;
        int cur = p;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            int qa = a.partner(cur);
            visited[static_cast<std::size_t>(qa)] = true;
            cur = b.partner(qa);
        } while (cur != p);
    }
    return delta_scalar().pow(loops);
}

struct CheckRunner {
    CertificateOptions opts;
    std::vector<CheckResult> results;
    std::mt19937_64 rng;

    explicit CheckRunner(const CertificateOptions& o) : opts(o), rng(o.seed) {}

    void add(const std::string& name, bool pass, const std::string& details) {
        results.push_back(CheckResult{name, pass, details});
    }

    int annular_cap() const { return std::min(4, max_strands() / 2); }

    void trace_identity() {
        for (int n = 1; n <= annular_cap(); ++n) {
            if (markov_trace(jones_wenzl(2 * n)) != qint(2 * n + 1)) {
                add("trace_identity", false, "failed at n = " + std::to_string(n));
                return;
            }
        }
        add("trace_identity", true,
            "tr(p_2n) = [2n+1]_q exactly for n = 1.." + std::to_string(annular_cap()));
    }

    void annular_identity() {
        for (int n = 1; n <= annular_cap(); ++n) {
            if (annular_trace(jones_wenzl(2 * n)) != qint_t(2 * n + 1)) {
                add("annular_identity", false, "failed at n = " + std::to_string(n));
                return;
            }
        }
        add("annular_identity", true,
            "atr(p_2n) = [2n+1] in t exactly for n = 1.." + std::to_string(annular_cap()));
    }

    void cpai_cross_check(const std::vector<double>& grid) {
        double worst = 0.0;
        for (double t : grid) {
            NumericParams p = NumericParams::make(opts.delta, t);
            for (int n = 0; n <= annular_cap(); ++n) {
                CPAIRow row = coefficient_cross_check(n, p);
                worst = std::max(worst, row.abs_gap);
                if (row.abs_gap > 1e-12) {
                    add("cpai_cross_check", false,
                        "gap " + fmt(row.abs_gap) + " at n = " + std::to_string(n) +
                            ", t = " + fmt(t));
                    return;
                }
            }
        }
        add("cpai_cross_check", true, "max gap " + fmt(worst) + " over the t grid");
    }

    void decay_limit() {
        NumericParams p = NumericParams::make(opts.delta, 0.96 * opts.delta);
        DecayReport rep = decay_report(p, 60);
        add("decay_limit", rep.pass,
            "c(60) = " + fmt(rep.final_c) + " at t = " + fmt(p.t) +
                (rep.monotone ? ", strictly decreasing" : ", not monotone"));
    }

    void convergence_limit() {
        ConvergenceReport rep = convergence_report(10, opts.delta, {1e-3, 1e-4, 1e-5});
        double gap = 0.0;
        for (const auto& row : rep.rows)
            if (row.eps == 1e-4) gap = row.max_abs_gap;
        bool monotone = true;
        for (std::size_t k = 1; k < rep.rows.size(); ++k)
            if (rep.rows[k].max_abs_gap > rep.rows[k - 1].max_abs_gap) monotone = false;
        add("convergence_limit", gap < 1e-2,
            "max |c - 1| = " + fmt(gap) + " at eps = 1e-4, n <= 10" +
                (monotone ? ", decreasing in eps" : ""));
    }

    void gram_psd() {
        auto rows = psd_sweep(annular_cap(), {opts.delta}, 20);
        double worst = 0.0;
        for (const auto& r : rows) worst = std::min(worst, r.min_eig);
        add("gram_psd", worst >= -1e-9,
            "min eigenvalue " + fmt(worst) + " over 20-point t grid, n <= " +
                std::to_string(annular_cap()));
    }

    void t_delta_oracle() {
        const Scalar& delta = delta_scalar();
        for (int n = 0; n <= annular_cap(); ++n) {
            const auto& basis = enumerate_annular_basis(n);
            auto g = gram_matrix(n);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    if (g[i][j].subst_t(delta) !=
                        disc_pairing(basis[i].matching(), basis[j].matching())) {
                        add("t_delta_oracle", false, "gram mismatch at n = " + std::to_string(n));
                        return;
                    }
                }
            }
        }
        for (int k = 0; k < 100; ++k) {
            int size = 2 + 2 * static_cast<int>(rng() % 3); // 2, 4, 6
            TLElement x = random_element(size, 3, rng);
            if (annular_trace(x).subst_t(delta) != markov_trace(x)) {
                add("t_delta_oracle", false, "trace mismatch at size " + std::to_string(size));
                return;
            }
        }
        add("t_delta_oracle", true,
            "gram and annular trace degenerate to the hole-free pairing at t = delta");
    }

    void jw_defining() {
        int cap = std::min(8, jones_wenzl_cap());
        for (int m = 1; m <= cap; ++m) {
            JWVerdict v = verify_jw(jones_wenzl(m));
            if (!v.all()) {
                add("jw_defining", false, "failed at m = " + std::to_string(m));
                return;
            }
        }
        add("jw_defining", true, "idempotent, e_i-killing, self-adjoint for m <= " +
                                     std::to_string(cap));
    }

    void orthogonality() {
        for (int n = 0; n <= 3; ++n) {
            for (int m = 0; m <= 3; ++m) {
                if (n == m || 2 * std::max(n, m) > max_strands()) continue;
                if (!orthogonality_check(n, m, 20, rng)) {
                    add("orthogonality", false,
                        "nonzero inner product at (n, m) = (" + std::to_string(n) + ", " +
                            std::to_string(m) + ")");
                    return;
                }
            }
        }
        add("orthogonality", true, "x g_n y orthogonal to g_m for n != m <= 3, 20 trials each");
    }

    void adjoint_law() {
        int cap = std::min(3, max_strands() / 2 - 1);
        for (int n = 0; n <= cap; ++n) {
            Matrix g_n = gram_matrix(n);
            std::vector<Tangle> tangles;
            if (n >= 1)
                for (int i = 0; i < 2 * n; ++i) tangles.push_back(Tangle::cap(i));
            for (int i = 0; i < 2 * n + 2; ++i) tangles.push_back(Tangle::cup(i));
            tangles.push_back(Tangle::rotate());
            tangles.push_back(Tangle::rotate_inv());
            for (const Tangle& a : tangles) {
                Matrix m_a = action_matrix(a, n);
                Matrix g_m = gram_matrix(tangle_target(a, n));
                Matrix m_dag = action_matrix(dagger(a), tangle_target(a, n));
                if (!mat_equal(mat_mul(transpose(m_a), g_m), mat_mul(g_n, m_dag))) {
                    add("adjoint_law", false, "failed at weight " + std::to_string(n));
                    return;
                }
            }
            // rotation isometry
            Matrix rot = action_matrix(Tangle::rotate(), n);
            if (!mat_equal(mat_mul(transpose(rot), mat_mul(g_n, rot)), g_n)) {
                add("adjoint_law", false, "rotation not isometric at weight " + std::to_string(n));
                return;
            }
        }
        add("adjoint_law", true,
            "transpose(M(a)) G = G M(a-dagger) exactly for cap/cup/rotate, n <= " +
                std::to_string(cap));
    }

    void bacher_laws() {
        for (int k = 0; k < 25; ++k) {
            BoxElement x = random_box(2, 2, rng);
            BoxElement y = random_box(2, 2, rng);
            BoxElement z = random_box(2, 2, rng);
            if (bacher_mul(bacher_mul(x, y), z) != bacher_mul(x, bacher_mul(y, z))) {
                add("bacher_laws", false, "associativity failed");
                return;
            }
        }
        for (int k = 0; k < 50; ++k) {
            BoxElement x = random_box(2, 2, rng);
            BoxElement y = random_box(2, 2, rng);
            if (tau(bacher_mul(x, y)) != tau(bacher_mul(y, x))) {
                add("bacher_laws", false, "traciality failed");
                return;
            }
            if (dagger(bacher_mul(x, y)) != bacher_mul(dagger(y), dagger(x))) {
                add("bacher_laws", false, "dagger anti-multiplicativity failed");
                return;
            }
        }
        // unit and tau-gram positivity
        BoxElement u = BoxElement::unit();
        BoxElement probe = random_box(2, 3, rng);
        if (bacher_mul(u, probe) != probe || bacher_mul(probe, u) != probe) {
            add("bacher_laws", false, "unit law failed");
            return;
        }
        auto basis = box_basis(2);
        NumericParams p = NumericParams::make(opts.delta);
        const auto dim = static_cast<Eigen::Index>(basis.size());
        Eigen::MatrixXd gram(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto& [ni, mi, di] = basis[static_cast<std::size_t>(i)];
            BoxElement bi = BoxElement::from_component(ni, mi, TLElement(di));
            for (Eigen::Index j = 0; j < dim; ++j) {
                const auto& [nj, mj, dj] = basis[static_cast<std::size_t>(j)];
                BoxElement bj = BoxElement::from_component(nj, mj, TLElement(dj));
                gram(i, j) = tau(bacher_mul(dagger(bi), bj)).eval(p);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
        double min_eig = solver.eigenvalues().minCoeff();
        bool diag_pos = true;
        for (Eigen::Index i = 0; i < dim; ++i)
            if (gram(i, i) <= 0) diag_pos = false;
        add("bacher_laws", min_eig >= -1e-9 && diag_pos,
            "laws exact at degree <= 2; tau-gram min eigenvalue " + fmt(min_eig));
    }

    void state_centrality() {
        const int weight_cap = 6;
        ModuleVector xi = ModuleVector::vacuum(weight_cap);
        for (int k = 0; k < 50; ++k) {
            BoxElement x = random_box(2, 2, rng);
            ActionResult res = pi0_act_left(x, xi);
            if (res.overflowed()) {
                add("state_centrality", false, "unexpected truncation overflow");
                return;
            }
            if (module_inner(res.value, xi) != TPoly(tau(x))) {
                add("state_centrality", false, "state identity failed");
                return;
            }
        }
        for (int n = 0; n <= 2; ++n) {
            for (int m = 0; n + m <= 2; ++m) {
                TLElement a = n == 0 ? TLElement::identity(0) : random_element(n, 2, rng);
                TLElement b = m == 0 ? TLElement::identity(0) : random_element(m, 2, rng);
                BoxElement split = bacher_mul(BoxElement::embed_left(a), BoxElement::embed_right(b));
                ActionResult l = pi0_act_left(split, xi);
                ActionResult r = pi0_act_right(split, xi);
                if (l.overflowed() || r.overflowed() || l.value != r.value) {
                    add("state_centrality", false,
                        "centrality failed at degree (" + std::to_string(n) + ", " +
                            std::to_string(m) + ")");
                    return;
                }
            }
        }
        add("state_centrality", true,
            "vector state equals tau and split elements act centrally on xi (N_max = 6)");
    }

    void rotation_period() {
        std::ostringstream out;
        for (int n = 1; n <= std::min(3, max_strands() / 2); ++n) {
            if (n > 1) out << ", ";
            out << "n=" << n << ": " << tlj::rotation_period(n);
        }
        add("rotation_period", true, "measured periods: " + out.str());
    }
};

} // namespace

Certificate run_certificate(const CertificateOptions& opts) {
    Certificate cert;
    cert.delta = opts.delta;
    cert.n_max = opts.n_max;
    cert.seed = opts.seed;
    NumericParams::make(opts.delta); // validates delta >= 2

    std::vector<double> grid;
    if (opts.t_grid_min > 0 && opts.t_grid_max > 0 && opts.t_grid_steps > 0) {
        for (int k = 0; k < opts.t_grid_steps; ++k) {
            double t = opts.t_grid_min +
                       (opts.t_grid_max - opts.t_grid_min) * k /
                           std::max(1, opts.t_grid_steps - 1);
            grid.push_back(t);
        }
    } else {
        for (int k = 1; k <= opts.t_grid_steps; ++k)
            grid.push_back(opts.delta * k / (opts.t_grid_steps + 1));
    }
    cert.t_grid = grid;

    CheckRunner runner(opts);
    runner.trace_identity();
    runner.annular_identity();
    runner.cpai_cross_check(grid);
    runner.decay_limit();
    runner.convergence_limit();
    runner.gram_psd();
    runner.t_delta_oracle();
    runner.jw_defining();
    runner.orthogonality();
    runner.adjoint_law();
    runner.bacher_laws();
    runner.state_centrality();
    runner.rotation_period();

    cert.checks = runner.results;
    cert.pass = true;
    for (const auto& c : cert.checks) cert.pass = cert.pass && c.pass;
    return cert;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& chk : c.checks)
        checks.push_back(
            nlohmann::json{{"name", chk.name}, {"pass", chk.pass}, {"details", chk.details}});
    return nlohmann::json{{"schema", 1},
                          {"params",
                           {{"delta", c.delta}, {"t_grid", c.t_grid}, {"n_max", c.n_max}}},
                          {"seed", c.seed},
                          {"checks", checks},
                          {"pass", c.pass}};
}

} // namespace tlj
