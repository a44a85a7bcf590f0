#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pzeta/common.hpp"
#include "pzeta/quadrature.hpp"

namespace pzeta {

namespace detail {

using ComplexL = std::complex<long double>;

// Principal log, except that arguments on the negative real axis (either
// zero sign) take the limit from the upper half-plane: log(-x) = ln x + i*pi.
inline ComplexL log_upper_limit(ComplexL z) {
    if (z.imag() == 0.0L && z.real() < 0.0L)
        return {std::log(-z.real()), pi_l};
    return std::log(z);
}

// E1 power series:  E1(z) = -gamma - log(z) - sum_{k>=1} (-z)^k / (k k!).
// Accumulated in extended precision; the alternating tail for |z| near the
// series/fraction crossover loses a few digits in binary64 otherwise.
inline Complex e1_series(Complex z, SeriesControl control = {}) {
    const ComplexL zl(z.real(), z.imag());
    ComplexL sum = -euler_gamma_l - log_upper_limit(zl);
    ComplexL term(1.0L, 0.0L);  // (-z)^k / k!
    for (int k = 1; k <= control.max_terms; ++k) {
        term *= -zl / static_cast<long double>(k);
        const ComplexL contribution = -term / static_cast<long double>(k);
        sum += contribution;
        if (std::abs(contribution) <= control.rel_tolerance * std::abs(sum))
            return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    throw std::runtime_error("exp_integral_e1: power series did not converge");
}

// Modified Lentz evaluation of the continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
inline Complex e1_continued_fraction(Complex z) {
    constexpr long double tiny = 1e-300L;
    constexpr long double eps = 1e-18L;
    constexpr int max_iter = 20000;

    const ComplexL zl(z.real(), z.imag());
    ComplexL b = zl + 1.0L;
    ComplexL c = 1.0L / tiny;
    ComplexL d = 1.0L / b;
    ComplexL h = d;
    for (int i = 1; i <= max_iter; ++i) {
        const ComplexL a = -static_cast<long double>(i) * static_cast<long double>(i);
        b += 2.0L;
        d = 1.0L / (a * d + b);
        c = b + a / c;
        const ComplexL delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0L) <= eps) {
            const ComplexL result = h * std::exp(-zl);
            return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
        }
    }
    throw std::runtime_error("exp_integral_e1: continued fraction did not converge");
}

// Series/continued-fraction crossover radius and the cut-adjacent wedge
// (|arg z| > 3) that stays on the series despite cancellation.
inline constexpr double e1_crossover_radius = 4.0;
inline constexpr double e1_cut_wedge_arg = 3.0;

}  // namespace detail

// Principal-branch exponential integral E1(z), cut along (-inf, 0].
// Points on the cut take the limit from the upper half-plane.
inline Complex exp_integral_e1(Complex z, SeriesControl control = {}) {
    if (z == Complex{})
        throw std::domain_error("exp_integral_e1: z = 0 is a logarithmic singularity");
    if (z.real() < -700.0)
        throw std::overflow_error("exp_integral_e1: e^{-z} exceeds binary64 range");
    const bool use_series = std::abs(z) <= detail::e1_crossover_radius ||
                            std::abs(std::arg(z)) > detail::e1_cut_wedge_arg;
    return use_series ? detail::e1_series(z, control) : detail::e1_continued_fraction(z);
}

// Principal-value exponential integral for real x:
//   Ei(x) = gamma + ln|x| + sum_{k>=1} x^k / (k k!).
inline double exp_integral_ei(double x, SeriesControl control = {}) {
    if (x == 0.0)
        throw std::domain_error("exp_integral_ei: x = 0 is a logarithmic singularity");
    const long double xl = x;
    long double sum = euler_gamma_l + std::log(std::abs(xl));
    long double term = 1.0L;  // x^k / k!
    for (int k = 1; k <= control.max_terms; ++k) {
        term *= xl / k;
        const long double contribution = term / k;
        sum += contribution;
        if (std::abs(contribution) <= control.rel_tolerance * std::abs(sum))
            return static_cast<double>(sum);
    }
    throw std::runtime_error("exp_integral_ei: series did not converge");
}

// Principal-value logarithmic integral li(x) = Ei(log x), x > 0, x != 1.
inline double log_integral(double x, SeriesControl control = {}) {
    if (x <= 0.0)
        throw std::domain_error("log_integral: requires x > 0");
    if (x == 1.0)
        throw std::domain_error("log_integral: diverges at x = 1");
    return exp_integral_ei(std::log(x), control);
}

// --- Riemann zeta by Euler-Maclaurin summation --------------------------

namespace detail {

// B_2 .. B_28 as exact rationals rendered to binary64.
inline constexpr double bernoulli_even[14] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0};

inline Complex pow_complex(double base, Complex exponent) {
    if (exponent.imag() == 0.0) return {std::pow(base, exponent.real()), 0.0};
    return std::exp(exponent * std::log(base));
}

}  // namespace detail

// Euler-Maclaurin core with explicit cutoff N and correction order M:
//   zeta(s) = sum_{k=1}^{N} k^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//           + sum_{j=1}^{M} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
inline Complex riemann_zeta_em(Complex s, int cutoff, int corrections) {
    if (cutoff < 1) throw std::invalid_argument("riemann_zeta_em: cutoff must be >= 1");
    if (corrections < 0 || corrections > 14)
        throw std::invalid_argument("riemann_zeta_em: correction order out of table range");
    const double n = static_cast<double>(cutoff);

    KahanSumComplex head;
    for (int k = 1; k <= cutoff; ++k)
        head.add(detail::pow_complex(static_cast<double>(k), -s));

    Complex result = head.value();
    result += detail::pow_complex(n, 1.0 - s) / (s - 1.0);
    result -= 0.5 * detail::pow_complex(n, -s);

    // factor = s(s+1)...(s+2j-2) * N^{-s-2j+1}, advanced two orders per step;
    // factorial of 2j tracked alongside.
    Complex factor = s * detail::pow_complex(n, -s - 1.0);
    double factorial = 2.0;
    for (int j = 1; j <= corrections; ++j) {
        result += detail::bernoulli_even[j - 1] / factorial * factor;
        factor *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j) / (n * n);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return result;
}

struct ZetaResult {
    Complex value;
    // Set when |Im(s)| exceeds the range the cutoff choice was calibrated for.
    bool accuracy_degraded;
};

inline constexpr double zeta_calibrated_im_range = 100.0;

inline int zeta_default_cutoff(Complex s) {
    return std::max(20, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))) + 20);
}
inline constexpr int zeta_default_corrections = 12;

// zeta(s) for Re(s) > 0, s != 1. Relative error <= 1e-12 for |Im(s)| <= 100.
inline ZetaResult riemann_zeta_checked(Complex s) {
    if (s == Complex{1.0, 0.0})
        throw std::domain_error("riemann_zeta: pole at s = 1");
    if (s.real() <= 0.0)
        throw std::domain_error("riemann_zeta: requires Re(s) > 0");
    return {riemann_zeta_em(s, zeta_default_cutoff(s), zeta_default_corrections),
            std::abs(s.imag()) > zeta_calibrated_im_range};
}

inline Complex riemann_zeta(Complex s) { return riemann_zeta_checked(s).value; }

// --- Test oracle ---------------------------------------------------------

// Adaptive quadrature of the defining integral E1(z) = int_z^inf e^{-t}/t dt
// along the ray t = z + u, refined until successive tolerance levels agree
// below 1e-12. Independent of the series/continued-fraction paths above.
inline Complex e1_quadrature_oracle(Complex z) {
    if (z.real() <= 0.0)
        throw std::domain_error("e1_quadrature_oracle: requires Re(z) > 0");
    const auto integrand = [z](double u) { return std::exp(-(z + u)) / (z + u); };
    // e^{-u} tail beyond u = 50 is below 2e-22 relative to the leading scale.
    const double upper = 50.0;

    Complex previous{};
    bool have_previous = false;
    for (double tol : {1e-9, 1e-11, 1e-13, 2e-15}) {
        const Complex current =
            integrate_adaptive(integrand, 0.0, upper, tol, tol).value;
        if (have_previous && std::abs(current - previous) < 1e-12) return current;
        previous = current;
        have_previous = true;
    }
    throw std::runtime_error("e1_quadrature_oracle: refinement did not stabilise");
}

}  // namespace pzeta
