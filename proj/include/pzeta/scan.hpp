#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "pzeta/prime_zeta.hpp"
#include "pzeta/quadrature.hpp"

namespace pzeta {

enum class ScanAxis { RealS, VerticalT };

struct ScanCell {
    Method method;
    Complex value{};
    double diff_vs_reference = std::numeric_limits<double>::quiet_NaN();
    bool ok = false;
    std::string message;  // evaluator diagnostic when !ok
};

struct ScanRow {
    double abscissa;
    bool pole_offset = false;  // sample landed on s = 1 and was nudged
    bool on_cut = false;
    std::vector<ScanCell> cells;  // one per requested method, in order
};

struct ScanTable {
    ScanAxis axis;
    double sigma;  // vertical scans only
    double x;
    std::vector<Method> methods;
    std::vector<ScanRow> rows;
};

namespace detail {

inline Evaluation evaluate_method(Method method, Complex s, double x,
                                  std::int64_t n_max, const PrimeTable& primes,
                                  const MobiusTable& mobius) {
    switch (method) {
        case Method::Direct: return prime_zeta_direct(s, primes);
        case Method::Mobius: return prime_zeta_mobius(s, n_max, mobius);
        case Method::RH: return prime_zeta_rh(s, x, primes);
        case Method::RHCorrected: return prime_zeta_rh_corrected(s, x, primes);
    }
    throw std::logic_error("unknown method");
}

// Reference for diffs: the Mobius evaluation when requested, else the first
// method in the list.
inline std::size_t reference_index(const std::vector<Method>& methods) {
    for (std::size_t i = 0; i < methods.size(); ++i)
        if (methods[i] == Method::Mobius) return i;
    return 0;
}

inline ScanRow scan_row(double abscissa, Complex s, double x,
                        const std::vector<Method>& methods, std::int64_t n_max,
                        const PrimeTable& primes, const MobiusTable& mobius) {
    ScanRow row;
    row.abscissa = abscissa;
    row.on_cut = on_branch_cut(s);
    for (Method method : methods) {
        ScanCell cell;
        cell.method = method;
        try {
            cell.value = evaluate_method(method, s, x, n_max, primes, mobius).value;
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.message = e.what();
        }
        row.cells.push_back(std::move(cell));
    }
    const std::size_t ref = reference_index(methods);
    if (row.cells[ref].ok) {
        const Complex ref_value = row.cells[ref].value;
        for (ScanCell& cell : row.cells) {
            if (!cell.ok) continue;
            cell.diff_vs_reference =
                row.on_cut ? std::abs(cell.value.real() - ref_value.real())
                           : std::abs(cell.value - ref_value);
        }
    }
    return row;
}

}  // namespace detail

// Samples s = s_min, s_min + step, ... <= s_max on the real axis. A sample
// landing exactly on the pole s = 1 is offset by step/2 and marked.
inline ScanTable scan_real(double s_min, double s_max, double step, double x,
                           std::vector<Method> methods,
                           const PrimeTable& primes, const MobiusTable& mobius,
                           std::int64_t n_max = 1000) {
    if (!(0.5 < s_min && s_min < s_max))
        throw std::invalid_argument("scan_real: requires 1/2 < s_min < s_max");
    if (!(step > 0.0)) throw std::invalid_argument("scan_real: requires step > 0");
    if (methods.empty()) throw std::invalid_argument("scan_real: no methods requested");

    ScanTable table{ScanAxis::RealS, 0.0, x, methods, {}};
    const auto count =
        static_cast<std::int64_t>(std::floor((s_max - s_min) / step + 1e-9)) + 1;
    for (std::int64_t i = 0; i < count; ++i) {
        double abscissa = s_min + static_cast<double>(i) * step;
        bool offset = false;
        if (std::abs(abscissa - 1.0) < 1e-12) {
            abscissa += step / 2.0;
            offset = true;
        }
        ScanRow row = detail::scan_row(abscissa, Complex{abscissa, 0.0}, x,
                                       methods, n_max, primes, mobius);
        row.pole_offset = offset;
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Samples s = sigma + i t for t = t_min, t_min + step, ... <= t_max.
inline ScanTable scan_vertical(double sigma, double t_min, double t_max,
                               double step, double x,
                               std::vector<Method> methods,
                               const PrimeTable& primes,
                               const MobiusTable& mobius,
                               std::int64_t n_max = 1000) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("scan_vertical: requires sigma > 1/2");
    if (!(0.0 < t_min && t_min < t_max))
        throw std::invalid_argument("scan_vertical: requires 0 < t_min < t_max");
    if (!(step > 0.0)) throw std::invalid_argument("scan_vertical: requires step > 0");
    if (methods.empty())
        throw std::invalid_argument("scan_vertical: no methods requested");

    ScanTable table{ScanAxis::VerticalT, sigma, x, methods, {}};
    const auto count =
        static_cast<std::int64_t>(std::floor((t_max - t_min) / step + 1e-9)) + 1;
    for (std::int64_t i = 0; i < count; ++i) {
        const double t = t_min + static_cast<double>(i) * step;
        table.rows.push_back(detail::scan_row(t, Complex{sigma, t}, x, methods,
                                              n_max, primes, mobius));
    }
    return table;
}

// Deviation of the truncated-sum continuation from a reference value as the
// limit variable x grows, next to the a-priori envelope.
struct ConvergencePoint {
    double x;
    double abs_error;
    double bound;
    bool exceeds_bound;
};

inline std::vector<ConvergencePoint> convergence_study(
    Complex s, const std::vector<double>& x_values, const Evaluation& reference,
    const PrimeTable& primes) {
    if (s.real() <= 0.5)
        throw std::domain_error("convergence_study: requires Re(s) > 1/2");
    for (std::size_t i = 1; i < x_values.size(); ++i)
        if (!(x_values[i - 1] < x_values[i]))
            throw std::invalid_argument("convergence_study: x_values must increase");

    std::vector<ConvergencePoint> points;
    for (double x : x_values) {
        const Evaluation eval = prime_zeta_rh(s, x, primes);
        const double deviation =
            eval.on_cut ? std::abs(eval.value.real() - reference.value.real())
                        : std::abs(eval.value - reference.value);
        points.push_back({x, deviation, eval.error_bound,
                          deviation > eval.error_bound});
    }
    return points;
}

// Residual |quadrature of int_x^inf dt/(t^s log t)  -  E1[(s-1) log x]|,
// with the substitution u = log t flattening the integrand to
// e^{(1-s)u} / u. Valid for Re(s) > 1.
inline double tail_identity_check(Complex s, double x) {
    if (s.real() <= 1.0)
        throw std::domain_error("tail_identity_check: requires Re(s) > 1");
    if (x < 2.0) throw std::domain_error("tail_identity_check: requires x >= 2");

    const double u0 = std::log(x);
    // Tail beyond U contributes < e^{-40} of the integrand scale at u0.
    const double upper = u0 + 40.0 / (s.real() - 1.0);
    const auto integrand = [s](double u) { return std::exp((1.0 - s) * u) / u; };
    const Complex lhs = integrate_adaptive(integrand, u0, upper, 1e-13, 1e-13).value;
    const Complex rhs = exp_integral_e1((s - 1.0) * u0);
    return std::abs(lhs - rhs);
}

// --- CSV emission ----------------------------------------------------------

namespace detail {

inline std::string format_significant(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.15g", v);
    return buffer;
}

// RFC-4180 quoting; only applied when a field needs it.
inline std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace detail

// Long-format table, one row per (sample, method), 15 significant digits.
inline void write_scan_csv(std::ostream& out, const ScanTable& table) {
    out << "t_or_s,method,re,im,abs_diff_vs_reference\n";
    for (const ScanRow& row : table.rows) {
        for (const ScanCell& cell : row.cells) {
            out << detail::format_significant(row.abscissa) << ','
                << detail::csv_field(std::string(method_name(cell.method))) << ',';
            if (cell.ok) {
                out << detail::format_significant(cell.value.real()) << ','
                    << detail::format_significant(cell.value.imag()) << ','
                    << detail::format_significant(cell.diff_vs_reference);
            } else {
                out << "nan,nan,nan";
            }
            out << '\n';
        }
    }
}

}  // namespace pzeta
