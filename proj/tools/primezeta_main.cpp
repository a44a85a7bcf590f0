// primezeta: evaluate the prime zeta function P(s) for Re(s) > 1/2, run
// figure-reproduction scans, convergence studies, and verification suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pzeta/pzeta.hpp"
#include "pzeta/selftest.hpp"

namespace {

using namespace pzeta;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_invalid_config = 2;
constexpr int exit_numeric_error = 3;

// Accepts "2", "-1.5", "0.75+2i", "0.75-0.1i", "2i".
std::optional<Complex> parse_complex(const std::string& text) {
    std::string body = text;
    bool imaginary_only = false;
    if (!body.empty() && (body.back() == 'i' || body.back() == 'j')) {
        imaginary_only = true;
        body.pop_back();
    }
    std::istringstream in(body);
    double first = 0.0;
    if (!(in >> first)) return std::nullopt;
    if (imaginary_only && in.eof()) return Complex{0.0, first};
    if (in.eof()) return imaginary_only ? Complex{0.0, first} : Complex{first, 0.0};
    double second = 0.0;
    if (!(in >> second) || !imaginary_only) return std::nullopt;
    if (!in.eof()) return std::nullopt;
    return Complex{first, second};
}

std::optional<std::vector<Method>> parse_methods(const std::string& list) {
    std::vector<Method> methods;
    std::istringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto method = method_from_name(token);
        if (!method) return std::nullopt;
        methods.push_back(*method);
    }
    if (methods.empty()) return std::nullopt;
    return methods;
}

std::vector<double> parse_double_list(const std::string& list) {
    std::vector<double> values;
    std::istringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(std::stod(token));
    return values;
}

std::string format_eval(const Evaluation& eval) {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer),
                  "P(s) = %.15g %+.15gi\nmethod      = %s\ntruncation  = %.15g\n"
                  "error bound = %.15g\non cut      = %s%s",
                  eval.value.real(), eval.value.imag(),
                  std::string(method_name(eval.method)).c_str(), eval.truncation,
                  eval.error_bound, eval.on_cut ? "true" : "false",
                  eval.zeta_branch_warning
                      ? "\nnote        = a log zeta(ns) term passed near its branch cut"
                      : "");
    return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << contents;
}

std::string plot_script(const std::string& csv, int column, const std::string& ylabel,
                        const std::string& png, const std::vector<Method>& methods) {
    std::ostringstream out;
    out << "# gnuplot script; run it from the directory holding " << csv << "\n"
        << "set datafile separator \",\"\n"
        << "set terminal pngcairo size 1200,700\n"
        << "set output \"" << png << "\"\n"
        << "set xlabel \"abscissa\"\n"
        << "set ylabel \"" << ylabel << "\"\n"
        << "plot ";
    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (i) out << ", \\\n     ";
        out << '"' << csv << "\" using 1:(strcol(2) eq \""
            << method_name(methods[i]) << "\" ? $" << column
            << " : NaN) with lines title \"" << method_name(methods[i]) << '"';
    }
    out << "\n";
    return out.str();
}

std::string scan_to_csv(const ScanTable& table) {
    std::ostringstream out;
    write_scan_csv(out, table);
    return out.str();
}

struct CommonOptions {
    double x = 1e4;
    std::int64_t prime_limit = 0;  // 0: derived as max(x, 10^6)
    std::int64_t n_max = 1000;
    std::string out_dir = ".";
    bool emit_plot = false;
    bool quiet = false;

    std::int64_t effective_prime_limit() const {
        return prime_limit > 0
                   ? prime_limit
                   : std::max<std::int64_t>(static_cast<std::int64_t>(x), 1'000'000);
    }
    void info(const std::string& line) const {
        if (!quiet) std::cerr << line << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime zeta function P(s): evaluation, scans, verification"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string s_text = "2";
    std::string methods_text = "mobius,rh";
    std::string method_text = "rh";
    std::string x_list_text = "100,1000,10000";
    double s_min = 0.5001, s_max = 2.0, step = 0.001;
    double sigma = 0.75, t_min = 0.1, t_max = 50.0, t_step = 0.1;
    double fig1_step = 0.001, fig_t_step = 0.1;

    auto add_common = [&](CLI::App* cmd, bool with_x = true) {
        if (with_x) cmd->add_option("--x", common.x, "limit variable x (>= 100)");
        cmd->add_option("--prime-limit", common.prime_limit,
                        "prime table limit (default max(x, 10^6))");
        cmd->add_option("--n-max", common.n_max, "Mobius series cutoff");
        cmd->add_option("--out", common.out_dir, "output directory for files");
        cmd->add_flag("--emit-plot", common.emit_plot, "also write gnuplot scripts");
        cmd->add_flag("--quiet", common.quiet, "suppress progress output");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate P(s) at one point");
    eval->add_option("--s", s_text, "complex s, e.g. 2 or 0.75+2i")->required();
    eval->add_option("--method", method_text, "direct|mobius|rh|rh-corrected");
    add_common(eval);

    CLI::App* scan = app.add_subcommand("scan", "scan real s, write scan.csv");
    scan->add_option("--s-min", s_min, "left end (> 0.5)");
    scan->add_option("--s-max", s_max, "right end");
    scan->add_option("--step", step, "abscissa step");
    scan->add_option("--methods", methods_text, "comma-separated method list");
    add_common(scan);

    CLI::App* vline =
        app.add_subcommand("vline", "scan s = sigma + it, write vline.csv");
    vline->add_option("--sigma", sigma, "real part of the line (> 0.5)");
    vline->add_option("--t-min", t_min, "first ordinate (> 0)");
    vline->add_option("--t-max", t_max, "last ordinate");
    vline->add_option("--step", t_step, "ordinate step");
    vline->add_option("--methods", methods_text, "comma-separated method list");
    add_common(vline);

    CLI::App* converge =
        app.add_subcommand("converge", "deviation vs envelope over a list of x");
    converge->add_option("--s", s_text, "complex s")->required();
    converge->add_option("--x-list", x_list_text, "comma-separated x values");
    add_common(converge, /*with_x=*/false);

    CLI::App* figures = app.add_subcommand(
        "figures", "write fig1.csv, fig2.csv, fig3.csv (+ plot scripts)");
    figures->add_option("--step", fig1_step, "real-axis step for fig1");
    figures->add_option("--t-step", fig_t_step, "ordinate step for fig2/fig3");
    add_common(figures);

    CLI::App* verify =
        app.add_subcommand("verify", "run the invariant suites and report");
    verify->add_flag("--quiet", common.quiet, "suppress per-check output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_config;
    }

    try {
        if (eval->parsed()) {
            const auto s = parse_complex(s_text);
            if (!s) {
                std::cerr << "error: cannot parse --s '" << s_text << "'\n";
                return exit_invalid_config;
            }
            const auto method = method_from_name(method_text);
            if (!method) {
                std::cerr << "error: unknown method '" << method_text << "'\n";
                return exit_invalid_config;
            }
            if (common.x < 100.0) {
                std::cerr << "error: --x must be at least 100\n";
                return exit_invalid_config;
            }
            Evaluation result;
            if (*method == Method::Mobius) {
                const MobiusTable mobius = mobius_sieve(common.n_max);
                result = prime_zeta_mobius(*s, common.n_max, mobius);
            } else {
                common.info("sieving primes to " +
                            std::to_string(common.effective_prime_limit()));
                const PrimeTable primes = sieve(common.effective_prime_limit());
                if (*method == Method::Direct)
                    result = prime_zeta_direct(*s, primes);
                else if (*method == Method::RH)
                    result = prime_zeta_rh(*s, common.x, primes);
                else
                    result = prime_zeta_rh_corrected(*s, common.x, primes);
            }
            std::cout << format_eval(result) << "\n";
            return exit_ok;
        }

        if (scan->parsed() || vline->parsed() || figures->parsed()) {
            const auto methods = parse_methods(methods_text);
            if (!methods) {
                std::cerr << "error: cannot parse --methods '" << methods_text << "'\n";
                return exit_invalid_config;
            }
            if (common.x < 100.0) {
                std::cerr << "error: --x must be at least 100\n";
                return exit_invalid_config;
            }
            const std::filesystem::path out_dir(common.out_dir);
            std::filesystem::create_directories(out_dir);
            common.info("sieving primes to " +
                        std::to_string(common.effective_prime_limit()));
            const PrimeTable primes = sieve(common.effective_prime_limit());
            const MobiusTable mobius = mobius_sieve(common.n_max);

            if (scan->parsed()) {
                if (!(0.5 < s_min && s_min < s_max && step > 0)) {
                    std::cerr << "error: need 0.5 < --s-min < --s-max and --step > 0\n";
                    return exit_invalid_config;
                }
                const ScanTable table = scan_real(s_min, s_max, step, common.x,
                                                  *methods, primes, mobius,
                                                  common.n_max);
                write_file(out_dir / "scan.csv", scan_to_csv(table));
                if (common.emit_plot)
                    write_file(out_dir / "scan.gp",
                               plot_script("scan.csv", 3, "Re P(s)", "scan.png",
                                           *methods));
                common.info("wrote " + (out_dir / "scan.csv").string() + " (" +
                            std::to_string(table.rows.size()) + " samples)");
                return exit_ok;
            }
            if (vline->parsed()) {
                if (!(sigma > 0.5 && 0 < t_min && t_min < t_max && t_step > 0)) {
                    std::cerr << "error: need --sigma > 0.5, 0 < --t-min < --t-max, "
                                 "--step > 0\n";
                    return exit_invalid_config;
                }
                const ScanTable table =
                    scan_vertical(sigma, t_min, t_max, t_step, common.x, *methods,
                                  primes, mobius, common.n_max);
                write_file(out_dir / "vline.csv", scan_to_csv(table));
                if (common.emit_plot) {
                    write_file(out_dir / "vline_re.gp",
                               plot_script("vline.csv", 3, "Re P(sigma+it)",
                                           "vline_re.png", *methods));
                    write_file(out_dir / "vline_im.gp",
                               plot_script("vline.csv", 4, "Im P(sigma+it)",
                                           "vline_im.png", *methods));
                }
                common.info("wrote " + (out_dir / "vline.csv").string() + " (" +
                            std::to_string(table.rows.size()) + " samples)");
                return exit_ok;
            }

            // figures: fig1 = real scan, fig2/fig3 = vertical line; fig2
            // and fig3 share the scan, their plot scripts select Re vs Im.
            const ScanTable fig1 = scan_real(0.5001, 2.0, fig1_step, common.x,
                                             *methods, primes, mobius, common.n_max);
            write_file(out_dir / "fig1.csv", scan_to_csv(fig1));
            const ScanTable vertical =
                scan_vertical(0.75, 0.1, 50.0, fig_t_step, common.x, *methods,
                              primes, mobius, common.n_max);
            const std::string vertical_csv = scan_to_csv(vertical);
            write_file(out_dir / "fig2.csv", vertical_csv);
            write_file(out_dir / "fig3.csv", vertical_csv);
            if (common.emit_plot) {
                write_file(out_dir / "fig1.gp",
                           plot_script("fig1.csv", 3, "Re P(s)", "fig1.png", *methods));
                write_file(out_dir / "fig2.gp",
                           plot_script("fig2.csv", 3, "Re P(0.75+it)", "fig2.png",
                                       *methods));
                write_file(out_dir / "fig3.gp",
                           plot_script("fig3.csv", 4, "Im P(0.75+it)", "fig3.png",
                                       *methods));
            }
            common.info("wrote fig1.csv, fig2.csv, fig3.csv under " +
                        out_dir.string());
            return exit_ok;
        }

        if (converge->parsed()) {
            const auto s = parse_complex(s_text);
            if (!s) {
                std::cerr << "error: cannot parse --s '" << s_text << "'\n";
                return exit_invalid_config;
            }
            const std::vector<double> xs = parse_double_list(x_list_text);
            if (xs.empty()) {
                std::cerr << "error: --x-list is empty\n";
                return exit_invalid_config;
            }
            const double x_top = *std::max_element(xs.begin(), xs.end());
            common.x = x_top;
            const PrimeTable primes = sieve(common.effective_prime_limit());
            const MobiusTable mobius = mobius_sieve(common.n_max);
            const Evaluation reference = prime_zeta_mobius(*s, common.n_max, mobius);
            const auto points = convergence_study(*s, xs, reference, primes);
            std::printf("%14s %16s %16s %s\n", "x", "abs_error", "bound", "status");
            bool all_under = true;
            for (const auto& point : points) {
                std::printf("%14.6g %16.6e %16.6e %s\n", point.x, point.abs_error,
                            point.bound, point.exceeds_bound ? "EXCEEDS" : "ok");
                if (point.exceeds_bound) all_under = false;
            }
            return all_under ? exit_ok : exit_verification_failure;
        }

        if (verify->parsed()) {
            const auto results = run_verification();
            int failures = 0;
            for (const auto& check : results) {
                if (!check.pass) ++failures;
                if (!common.quiet || !check.pass)
                    std::printf("[%s] %s (%s)\n", check.pass ? "PASS" : "FAIL",
                                check.name.c_str(), check.detail.c_str());
            }
            std::printf("%zu checks, %d failure%s\n", results.size(), failures,
                        failures == 1 ? "" : "s");
            return failures == 0 ? exit_ok : exit_verification_failure;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "numeric domain error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "numeric range error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const std::overflow_error& e) {
        std::cerr << "numeric overflow: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric_error;
    }
    return exit_invalid_config;
}
