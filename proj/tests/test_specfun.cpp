#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pzeta/specfun.hpp"

using namespace pzeta;

namespace {

double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace

TEST_CASE("E1 at z = 1 matches the quadrature oracle and frozen digits") {
    const Complex v = exp_integral_e1({1.0, 0.0});
    CHECK(std::abs(v.real() - 0.21938393439552029) < 1e-14);
    CHECK(v.imag() == 0.0);
    CHECK(std::abs(v - e1_quadrature_oracle({1.0, 0.0})) < 1e-12);
}

TEST_CASE("E1 on the cut takes the upper-limit value -Ei(x) - i pi") {
    const Complex v = exp_integral_e1({-1.0, 0.0});
    const auto ei1 = static_cast<double>(oracles::ei_series(1.0L));
    CHECK(std::abs(v.real() + ei1) < 1e-13);
    CHECK(std::abs(v.imag() + pi) < 1e-15);
    // A negative-zero imaginary part is still "on the cut".
    const Complex v2 = exp_integral_e1({-1.0, -0.0});
    CHECK(v2 == v);
}

TEST_CASE("E1 conjugate symmetry off the cut") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> radius(0.05, 12.0);
    std::uniform_real_distribution<double> angle(-3.1, 3.1);
    for (int i = 0; i < 100; ++i) {
        const Complex z = std::polar(radius(rng), angle(rng));
        if (z.imag() == 0.0 && z.real() < 0.0) continue;
        const Complex direct = exp_integral_e1(std::conj(z));
        const Complex reflected = std::conj(exp_integral_e1(z));
        CHECK(rel_diff(direct, reflected) < 1e-14);
    }
}

TEST_CASE("E1 derivative is -e^{-z}/z by central differences") {
    // >= 20 points covering all four quadrants, mixed tolerance 1e-6.
    const double radii[5] = {0.7, 1.3, 2.6, 4.4, 7.0};
    const double args[4] = {0.6, 2.2, -2.2, -0.6};  // one per quadrant
    int points = 0;
    for (double r : radii) {
        for (double a : args) {
            const Complex z = std::polar(r, a);
            const double h = 1e-5 * std::max(1.0, std::abs(z));
            const Complex fd =
                (exp_integral_e1(z + h) - exp_integral_e1(z - h)) / (2.0 * h);
            const Complex exact = -std::exp(-z) / z;
            CHECK(std::abs(fd - exact) <
                  1e-6 * std::max(1.0, std::abs(exact)));
            ++points;
        }
    }
    CHECK(points >= 20);
}

TEST_CASE("E1 series and continued fraction agree across the crossover") {
    // Annulus around |z| = 4, |arg z| < 3, relative agreement <= 1e-12.
    for (int i = 0; i < 41; ++i) {
        for (int j = 0; j < 13; ++j) {
            const double r = 3.2 + 1.6 * i / 40.0;
            const double a = -2.95 + 5.9 * j / 12.0;
            const Complex z = std::polar(r, a);
            const Complex series = detail::e1_series(z);
            const Complex fraction = detail::e1_continued_fraction(z);
            CHECK(rel_diff(series, fraction) < 1e-12);
        }
    }
}

TEST_CASE("E1 branch-cut jump is -2 pi i") {
    const double eps = 1e-8;
    for (double x : {0.5, 1.0, 2.0}) {
        const Complex jump =
            exp_integral_e1({-x, eps}) - exp_integral_e1({-x, -eps});
        CHECK(std::abs(jump - Complex{0.0, -2.0 * pi}) < 1e-6);
    }
}

TEST_CASE("E1 rejects z = 0 and flags overflow") {
    CHECK_THROWS_AS(exp_integral_e1({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1({-701.0, 1.0}), std::overflow_error);
}

TEST_CASE("E1 deep in the cut-adjacent wedge tracks -Ei") {
    for (double x : {6.0, 20.0, 100.0}) {
        const Complex on_cut = exp_integral_e1({-x, 0.0});
        const Complex near_cut = exp_integral_e1({-x, 1e-6});
        const auto expected = -static_cast<double>(oracles::ei_series(x));
        CHECK(std::abs(on_cut.real() - expected) < 1e-12 * std::abs(expected));
        CHECK(on_cut.imag() == -pi);
        CHECK(std::abs(near_cut.real() - expected) < 1e-11 * std::abs(expected));
    }
}

TEST_CASE("E1 stays inside its bracketing bounds for large real z") {
    for (double x : {50.0, 100.0, 400.0, 700.0}) {
        const double v = exp_integral_e1({x, 0.0}).real();
        CHECK(v > std::exp(-x) / (x + 1.0));
        CHECK(v < std::exp(-x) / x);
    }
}

TEST_CASE("continued fraction holds right at the wedge gate") {
    for (double r : {4.05, 6.0, 40.0}) {
        for (double a : {2.999, -2.999}) {
            const Complex z = std::polar(r, a);
            const Complex cf = detail::e1_continued_fraction(z);
            const Complex series = detail::e1_series(z, {1e-15, 2000});
            CHECK(std::abs(cf - series) / std::abs(series) < 1e-13);
        }
    }
}

TEST_CASE("E1 quadrature oracle brackets and preconditions") {
    // e^{-z}/(z+1) < E1(z) < e^{-z}/z for real z > 0.
    const double v = e1_quadrature_oracle({5.0, 0.0}).real();
    CHECK(v > std::exp(-5.0) / 6.0);
    CHECK(v < std::exp(-5.0) / 5.0);
    CHECK(std::abs(exp_integral_e1({5.0, 0.0}).real() - v) < 1e-10);
    CHECK(std::abs(exp_integral_e1({2.0, 3.0}) - e1_quadrature_oracle({2.0, 3.0})) <
          1e-10);
    CHECK_THROWS_AS(e1_quadrature_oracle({-1.0, 0.0}), std::domain_error);
}

TEST_CASE("Ei matches the extended-precision series oracle") {
    CHECK(std::abs(exp_integral_ei(1.0) -
                   static_cast<double>(oracles::ei_series(1.0L))) < 1e-15);
    CHECK(std::abs(exp_integral_ei(1.0) - 1.8951178163559368) < 1e-14);
    for (double x : {-8.0, -2.5, -0.3, 0.2, 3.7, 14.0})
        CHECK(std::abs(exp_integral_ei(x) -
                       static_cast<double>(oracles::ei_series(x))) <
              1e-13 * std::max(1.0, std::abs(exp_integral_ei(x))));
    CHECK_THROWS_AS(exp_integral_ei(0.0), std::domain_error);
}

TEST_CASE("Ei(-t) = -Re E1(t) for real t > 0") {
    for (double t : {0.5, 1.0, 2.0, 5.0, 8.0}) {
        const double lhs = exp_integral_ei(-t);
        const double rhs = -exp_integral_e1({t, 0.0}).real();
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("li is Ei(log x) and matches frozen li(2)") {
    CHECK(std::abs(log_integral(2.0) - 1.0451637801174927) < 1e-14);
    CHECK(log_integral(2.0) == exp_integral_ei(std::log(2.0)));
    CHECK_THROWS_AS(log_integral(0.0), std::domain_error);
    CHECK_THROWS_AS(log_integral(-3.0), std::domain_error);
    CHECK_THROWS_AS(log_integral(1.0), std::domain_error);
}

TEST_CASE("li satisfies d/dx li = 1/log x by finite differences") {
    for (double x : {10.0, 100.0, 1e4}) {
        const double h = 1e-3 * x;
        const double fd = (log_integral(x + h) - log_integral(x - h)) / (2.0 * h);
        const double exact = 1.0 / std::log(x);
        CHECK(std::abs(fd - exact) / exact < 1e-6);
    }
}

TEST_CASE("li differences match quadrature of 1/log t away from the pivot") {
    const auto integrand = [](double t) { return Complex{1.0 / std::log(t), 0.0}; };
    const Complex quad = integrate_adaptive(integrand, 1e4, 1e5, 1e-10, 1e-12).value;
    CHECK(std::abs((log_integral(1e5) - log_integral(1e4)) - quad.real()) < 1e-9);
}

TEST_CASE("zeta(2) is pi^2/6") {
    CHECK(std::abs(riemann_zeta({2.0, 0.0}).real() - pi * pi / 6.0) < 1e-13);
    CHECK(riemann_zeta({2.0, 0.0}).imag() == 0.0);
}

TEST_CASE("zeta matches an Euler-Maclaurin reference under parameter doubling") {
    const Complex s{0.75, 10.0};
    const Complex reference = riemann_zeta_em(s, 200, 12);
    const Complex doubled = riemann_zeta_em(s, 400, 14);
    CHECK(rel_diff(reference, doubled) < 1e-11);
    CHECK(rel_diff(riemann_zeta(s), doubled) < 1e-11);
}

TEST_CASE("zeta Euler-Maclaurin is stable under N doubling on the working grid") {
    for (double re : {0.55, 0.75, 1.2, 2.0, 7.5}) {
        for (double im : {0.0, 0.5, 10.0, 50.0, 100.0}) {
            const Complex s{re, im};
            if (s == Complex{1.0, 0.0}) continue;
            const Complex base =
                riemann_zeta_em(s, zeta_default_cutoff(s), zeta_default_corrections);
            const Complex refined = riemann_zeta_em(s, 2 * zeta_default_cutoff(s),
                                                    zeta_default_corrections + 2);
            CHECK(rel_diff(base, refined) < 1e-12);
        }
    }
}

TEST_CASE("zeta conjugate symmetry") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> re(0.51, 5.0);
    std::uniform_real_distribution<double> im(0.1, 80.0);
    for (int i = 0; i < 100; ++i) {
        const Complex s{re(rng), im(rng)};
        CHECK(rel_diff(riemann_zeta(std::conj(s)), std::conj(riemann_zeta(s))) <
              1e-13);
    }
}

TEST_CASE("zeta rejects the pole and the unsupported half-plane") {
    CHECK_THROWS_AS(riemann_zeta({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta({-0.5, 3.0}), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta({0.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta_em({2.0, 0.0}, 0, 12), std::invalid_argument);
    CHECK_THROWS_AS(riemann_zeta_em({2.0, 0.0}, 20, 15), std::invalid_argument);
}

TEST_CASE("zeta stays stable down to the edge of the critical line") {
    for (double re : {0.501, 0.51, 0.99999}) {
        const Complex coarse = riemann_zeta_em({re, 0.0}, 20, 12);
        const Complex fine = riemann_zeta_em({re, 0.0}, 80, 14);
        CHECK(rel_diff(coarse, fine) < 1e-13);
    }
}

TEST_CASE("zeta flags arguments beyond the calibrated imaginary range") {
    CHECK_FALSE(riemann_zeta_checked({0.75, 60.0}).accuracy_degraded);
    CHECK(riemann_zeta_checked({0.75, 150.0}).accuracy_degraded);
}

TEST_CASE("series control caps are honoured") {
    SeriesControl tight;
    tight.max_terms = 3;
    CHECK_THROWS_AS(exp_integral_e1({3.0, 0.5}, tight), std::runtime_error);
    CHECK_THROWS_AS(exp_integral_ei(10.0, tight), std::runtime_error);
}
