// theta-means: evaluation, identity sweeps, mean-iteration traces, reports.
//
// Exit codes: 0 all good, 1 an identity check failed, 2 usage error,
// 3 domain/parameter error, 4 I/O error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetameans/hypergeometric.hpp"
#include "thetameans/identities.hpp"
#include "thetameans/means.hpp"
#include "thetameans/theta.hpp"

namespace {

using thetameans::Cx;

// complex literal `a`, `a+bi`, `a-bi` (also plain `bi`), e.g. 0.3+1.7i
std::optional<Cx> parse_complex(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double re = 0.0, im = 0.0;
    const char* s = text.c_str();
    char* end = nullptr;
    double first = std::strtod(s, &end);
    if (end == s) return std::nullopt;
    if (*end == '\0') return Cx(first, 0.0);
    if (*end == 'i' && end[1] == '\0') return Cx(0.0, first);
    re = first;
    const char* s2 = end;
    if (*s2 != '+' && *s2 != '-') return std::nullopt;
    char* end2 = nullptr;
    im = std::strtod(s2, &end2);
    if (end2 == s2 || *end2 != 'i' || end2[1] != '\0') return std::nullopt;
    return Cx(re, im);
}

std::string format_complex(Cx v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real(), v.imag());
    return buf;
}

double env_default_tol() {
    const char* s = std::getenv("THETA_MEANS_TOL");
    if (!s || !*s) return 0.0;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    return (end != s && *end == '\0' && v > 0.0) ? v : 0.0;
}

int run_eval(const std::string& kind, const std::string& a, const std::string& b,
             const std::string& c, const std::string& z, const std::string& tau_text,
             int p, int q, double x, double y) {
    using namespace thetameans;
    if (kind == "hgf") {
        const auto pa = parse_complex(a), pb = parse_complex(b), pc = parse_complex(c),
                   pz = parse_complex(z);
        if (!pa || !pb || !pc || !pz) {
            std::cerr << "eval hgf: --a --b --c --z must be complex literals like 0.3+1.7i\n";
            return 2;
        }
        const HValue v = hgf({*pa, *pb, *pc}, *pz);
        std::cout << "value = " << format_complex(v.value) << "\n"
                  << "terms_used = " << v.terms_used << "\n"
                  << "path = " << eval_path_name(v.path) << "\n";
        return 0;
    }
    if (kind == "theta" || kind == "lambda" || kind == "zeta") {
        const auto pt = parse_complex(tau_text);
        if (!pt) {
            std::cerr << "eval " << kind << ": --tau must be a complex literal like 0.3+1.7i\n";
            return 2;
        }
        const Tau tau{*pt};
        Cx v;
        if (kind == "theta") v = theta_pq(p, q, tau);
        else if (kind == "lambda") v = lambda_map(tau);
        else v = zeta_map(tau);
        std::cout << "value = " << format_complex(v) << "\n";
        return 0;
    }
    if (kind == "mu1" || kind == "mu2") {
        const double v = kind == "mu1" ? mu1(x, y) : mu2(x, y);
        std::printf("value = %.15g\n", v);
        return 0;
    }
    std::cerr << "eval: unknown kind (hgf, theta, lambda, zeta, mu1, mu2)\n";
    return 2;
}

int run_check(const std::string& id, long long samples, unsigned long long seed, double tol) {
    using namespace thetameans;
    if (!find_identity(id)) {
        std::cerr << "check: unknown identity id '" << id << "'\n";
        return 2;
    }
    if (tol <= 0.0) tol = env_default_tol();
    int skipped = 0;
    const IdentityReport report = run_identity(id, samples, seed, tol, &skipped);
    std::cout << report_to_json({report});
    if (skipped > 0) std::cerr << "skipped " << skipped << " cut-landing samples\n";
    return report.passed ? 0 : 1;
}

int run_iterate(double x, double y, bool show_trace) {
    using namespace thetameans;
    const IterTrace trace = mu_iterate(x, y);
    if (show_trace) {
        std::printf("%4s %24s %24s %14s\n", "n", "x_n", "y_n", "x_n-y_n");
        for (std::size_t n = 0; n < trace.pairs.size(); ++n) {
            const auto [xn, yn] = trace.pairs[n];
            std::printf("%4zu %24.16g %24.16g %14.6g\n", n, xn, yn, xn - yn);
        }
    }
    std::printf("limit         = %.15g  (%d iterations, ordered from n = %d)\n", trace.limit,
                trace.iterations, trace.n_ordered);
    std::printf("limit_via_hgf = %.15g\n", limit_via_hgf(trace));
    return 0;
}

int run_report(bool all, const std::string& only, const std::string& format,
               const std::string& out_path, long long samples, unsigned long long seed,
               double tol) {
    using namespace thetameans;
    std::vector<std::string> ids;
    if (!only.empty()) {
        std::stringstream ss(only);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (!find_identity(item)) {
                std::cerr << "report: unknown identity id '" << item << "'\n";
                return 2;
            }
            ids.push_back(item);
        }
    } else if (all) {
        for (const IdentitySpec& s : identity_catalog()) ids.emplace_back(s.id);
    }
    if (ids.empty()) {
        std::cerr << "report: nothing selected (use --all or --only id1,id2,...)\n";
        return 2;
    }
    if (tol <= 0.0) tol = env_default_tol();
    std::vector<IdentityReport> reports;
    reports.reserve(ids.size());
    bool all_passed = true;
    for (const std::string& id : ids) {
        reports.push_back(run_identity(id, samples, seed, tol));
        all_passed = all_passed && reports.back().passed;
    }
    const std::string body = format == "csv" ? report_to_csv(reports) : report_to_json(reports);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "report: cannot open '" << out_path << "' for writing\n";
            return 4;
        }
        out << body;
        if (!out.good()) {
            std::cerr << "report: write failed for '" << out_path << "'\n";
            return 4;
        }
    }
    return all_passed ? 0 : 1;
}

std::string catalog_help() {
    std::string text = "Identity catalog (id, default samples, default tolerance):\n";
    for (const thetameans::IdentitySpec& s : thetameans::identity_catalog()) {
        char head[128];
        std::snprintf(head, sizeof head, "  %-18s n=%-5lld tol=%-8.2g ", std::string(s.id).c_str(),
                      s.default_samples, s.default_tol);
        text += head;
        text += s.note;
        text += "\n";
    }
    text +=
        "\nTHETA_MEANS_TOL overrides the default tolerance of checks run without --tol.\n"
        "Reports are deterministic per (identity, samples, seed) except the wall_ms field.\n";
    return text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-means: hypergeometric/theta identity kernels and verification sweeps"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    std::string kind, arg_a = "0", arg_b = "0", arg_c = "1", arg_z = "0", arg_tau = "1i";
    int arg_p = 0, arg_q = 0;
    double arg_x = 1.0, arg_y = 1.0;
    eval->add_option("kind", kind, "hgf | theta | lambda | zeta | mu1 | mu2")->required();
    eval->add_option("--a", arg_a, "parameter a (complex literal, e.g. 0.25)");
    eval->add_option("--b", arg_b, "parameter b");
    eval->add_option("--c", arg_c, "parameter c");
    eval->add_option("--z", arg_z, "argument z (complex literal, e.g. 0.3+1.7i)");
    eval->add_option("--tau", arg_tau, "upper-half-plane point (complex literal)");
    eval->add_option("--p", arg_p, "theta characteristic p (0 or 1)");
    eval->add_option("--q", arg_q, "theta characteristic q (0 or 1)");
    eval->add_option("--x", arg_x, "first argument of mu1/mu2");
    eval->add_option("--y", arg_y, "second argument of mu1/mu2");

    // check
    auto* check = app.add_subcommand("check", "run one identity sweep");
    check->footer(catalog_help());
    std::string check_id;
    long long check_samples = 0;
    unsigned long long check_seed = 1;
    double check_tol = 0.0;
    check->add_option("identity", check_id, "identity id (see --help for the catalog)")
        ->required();
    check->add_option("--samples", check_samples, "sample count (0 = catalog default)");
    check->add_option("--seed", check_seed, "PRNG seed (default 1)");
    check->add_option("--tol", check_tol, "tolerance override (0 = default)");

    // iterate
    auto* iterate = app.add_subcommand("iterate", "run the (mu1, mu2) mean iteration");
    double it_x = 1.0, it_y = 1.0;
    bool it_trace = false;
    iterate->add_option("--x", it_x, "x_0 (requires x > 0, x + y > 0)")->required();
    iterate->add_option("--y", it_y, "y_0")->required();
    iterate->add_flag("--trace", it_trace, "print every (x_n, y_n) row");

    // report
    auto* report = app.add_subcommand("report", "run identity sweeps and emit a report");
    report->footer(catalog_help());
    bool rep_all = false;
    std::string rep_only, rep_format = "json", rep_out;
    long long rep_samples = 0;
    unsigned long long rep_seed = 1;
    double rep_tol = 0.0;
    report->add_flag("--all", rep_all, "run the whole catalog");
    report->add_option("--only", rep_only, "comma-separated identity ids");
    report->add_option("--format", rep_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", rep_out, "output path (default: stdout)");
    report->add_option("--samples", rep_samples, "sample count override (0 = defaults)");
    report->add_option("--seed", rep_seed, "PRNG seed (default 1)");
    report->add_option("--tol", rep_tol, "tolerance override (0 = defaults)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(kind, arg_a, arg_b, arg_c, arg_z, arg_tau, arg_p, arg_q, arg_x, arg_y);
        if (check->parsed()) return run_check(check_id, check_samples, check_seed, check_tol);
        if (iterate->parsed()) return run_iterate(it_x, it_y, it_trace);
        if (report->parsed())
            return run_report(rep_all, rep_only, rep_format, rep_out, rep_samples, rep_seed,
                              rep_tol);
    } catch (const thetameans::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const thetameans::invalid_parameter& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return 3;
    } catch (const thetameans::unsupported_region& e) {
        std::cerr << "unsupported region: " << e.what() << "\n";
        return 3;
    } catch (const thetameans::pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const thetameans::non_convergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
