#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "tlj/annular.hpp"
#include "tlj/config.hpp"
#include "tlj/io.hpp"
#include "tlj/jw.hpp"
#include "tlj/parser.hpp"
#include "tlj/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

bool parse_t_grid(const std::string& spec, tlj::CertificateOptions& opts) {
    // a:b:steps
    auto p1 = spec.find(':');
    auto p2 = spec.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) return false;
    try {
        opts.t_grid_min = std::stod(spec.substr(0, p1));
        opts.t_grid_max = std::stod(spec.substr(p1 + 1, p2 - p1 - 1));
        opts.t_grid_steps = std::stoi(spec.substr(p2 + 1));
    } catch (const std::exception&) {
        return false;
    }
    return opts.t_grid_steps > 0;
}

int cmd_certificate(double delta, const std::string& t_grid, int n_max, std::uint64_t seed,
                    const std::string& out_path) {
    tlj::CertificateOptions opts;
    opts.delta = delta;
    opts.n_max = n_max;
    opts.seed = seed;
    if (!t_grid.empty() && !parse_t_grid(t_grid, opts)) {
        std::cerr << "invalid --t-grid, expected a:b:steps\n";
        return kExitUsage;
    }
    tlj::Certificate cert = tlj::run_certificate(opts);
    for (const auto& c : cert.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.details << "\n";
    std::cout << (cert.pass ? "certificate: PASS" : "certificate: FAIL")
              << " (delta = " << cert.delta << ", seed = " << cert.seed << ")\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << tlj::certificate_to_json(cert).dump(2) << "\n";
    }
    return cert.pass ? kExitPass : kExitCheckFailure;
}

int cmd_cpai(double delta, double t, int n_max, const std::string& format) {
    tlj::NumericParams params = tlj::NumericParams::make(delta, t);
    std::vector<tlj::CPAIRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        if (2 * n <= tlj::max_strands()) {
            rows.push_back(tlj::coefficient_cross_check(n, params));
        } else {
            tlj::CPAIRow row;
            row.n = n;
            row.c_formula = tlj::cpai_numeric(n, params);
            rows.push_back(row);
        }
    }
    if (format == "json")
        std::cout << tlj::cpai_json(rows, delta, t).dump(2) << "\n";
    else
        std::cout << tlj::cpai_csv(rows, delta, t);
    return kExitPass;
}

int cmd_gram(int n, bool symbolic, std::optional<double> t, double delta, bool check_psd) {
    if (symbolic) {
        std::cout << tlj::gram_to_json(n).dump(2) << "\n";
        return kExitPass;
    }
    double tv = t.value_or(delta);
    tlj::NumericParams params = tlj::NumericParams::make(delta, tv);
    tlj::SpectrumRow row = tlj::gram_spectrum(n, params);
    std::cout << tlj::spectra_csv({row});
    if (check_psd) {
        bool ok = row.min_eig >= -1e-9;
        std::cout << (ok ? "psd: PASS" : "psd: FAIL") << "\n";
        return ok ? kExitPass : kExitCheckFailure;
    }
    return kExitPass;
}

int cmd_eval(const std::string& expr, std::optional<double> delta, std::optional<double> t) {
    tlj::ExprAST ast = tlj::parse(expr);
    tlj::Value v = tlj::evaluate(ast);
    std::cout << tlj::value_str(v) << "\n";
    if (delta) {
        tlj::NumericParams params = tlj::NumericParams::make(*delta, t.value_or(*delta));
        if (std::holds_alternative<tlj::Scalar>(v))
            std::cout << "= " << std::get<tlj::Scalar>(v).eval(params) << "\n";
        else if (std::holds_alternative<tlj::TPoly>(v))
            std::cout << "= " << std::get<tlj::TPoly>(v).eval(params) << "\n";
    }
    return kExitPass;
}

int cmd_jw(int m, bool verify) {
    const tlj::TLElement& p = tlj::jones_wenzl(m);
    std::cout << tlj::to_json(p).dump(2) << "\n";
    if (verify) {
        tlj::JWVerdict v = tlj::verify_jw(p);
        std::cout << "idempotent: " << (v.idempotent ? "yes" : "no")
                  << ", kills e_i left: " << (v.kills_left ? "yes" : "no")
                  << ", kills e_i right: " << (v.kills_right ? "yes" : "no")
                  << ", self-adjoint: " << (v.self_adjoint ? "yes" : "no") << "\n";
        return v.all() ? kExitPass : kExitCheckFailure;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Temperley-Lieb-Jones kernel and Haagerup certificate"};
    app.require_subcommand(1);

    auto* cert = app.add_subcommand("certificate", "run every check suite and emit the certificate");
    double cert_delta = 2.5;
    std::string cert_grid;
    int cert_nmax = 4;
    std::uint64_t cert_seed = 0x5eed;
    std::string cert_out;
    cert->add_option("--delta", cert_delta, "loop parameter, >= 2");
    cert->add_option("--t-grid", cert_grid, "t grid as a:b:steps");
    cert->add_option("--n-max", cert_nmax, "largest n for the coefficient table");
    cert->add_option("--seed", cert_seed, "seed for the randomized checks");
    cert->add_option("--out", cert_out, "path for the JSON certificate");

    auto* cpai = app.add_subcommand("cpai", "table of c_t(n) values");
    double cpai_delta = 2.5, cpai_t = 2.0;
    int cpai_nmax = 4;
    std::string cpai_format = "csv";
    cpai->add_option("--delta", cpai_delta, "loop parameter, >= 2")->required();
    cpai->add_option("--t", cpai_t, "module parameter, 0 < t <= delta")->required();
    cpai->add_option("--n-max", cpai_nmax, "largest n");
    cpai->add_option("--format", cpai_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* gram = app.add_subcommand("gram", "annular Gram matrix");
    int gram_n = 1;
    bool gram_symbolic = false;
    bool gram_psd = false;
    double gram_delta = 2.5;
    std::optional<double> gram_t;
    gram->add_option("--n", gram_n, "annular weight")->required();
    gram->add_flag("--symbolic", gram_symbolic, "emit the exact matrix as JSON");
    gram->add_option("--t", gram_t, "numeric t (default: delta)");
    gram->add_option("--delta", gram_delta, "loop parameter, >= 2");
    gram->add_flag("--check-psd", gram_psd, "verify the spectrum is nonnegative");

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    std::string eval_expr;
    std::optional<double> eval_delta, eval_t;
    eval->add_option("expr", eval_expr, "expression")->required();
    eval->add_option("--delta", eval_delta, "numeric loop parameter");
    eval->add_option("--t", eval_t, "numeric t");

    auto* jw = app.add_subcommand("jw", "Jones-Wenzl idempotent");
    int jw_m = 2;
    bool jw_verify = false;
    jw->add_option("--m", jw_m, "strand count")->required();
    jw->add_flag("--verify", jw_verify, "check the defining properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cert->parsed())
            return cmd_certificate(cert_delta, cert_grid, cert_nmax, cert_seed, cert_out);
        if (cpai->parsed()) return cmd_cpai(cpai_delta, cpai_t, cpai_nmax, cpai_format);
        if (gram->parsed()) return cmd_gram(gram_n, gram_symbolic, gram_t, gram_delta, gram_psd);
        if (eval->parsed()) return cmd_eval(eval_expr, eval_delta, eval_t);
        if (jw->parsed()) return cmd_jw(jw_m, jw_verify);
    } catch (const tlj::resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const tlj::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tlj::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tlj::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
