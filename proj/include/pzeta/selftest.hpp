#pragma once

// Invariant suites behind the CLI `verify` command: every module's
// properties exercised at a scale that keeps the whole run interactive.

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "pzeta/pzeta.hpp"

namespace pzeta {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

inline void add_check(std::vector<CheckResult>& results, std::string name,
                      bool pass, double observed, double threshold) {
    std::ostringstream detail;
    detail.precision(3);
    detail << "observed " << observed << ", threshold " << threshold;
    results.push_back({std::move(name), pass, detail.str()});
}

inline bool trial_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> results;
    const PrimeTable primes = sieve(10'000);
    const PrimeTable primes_large = sieve(1'000'000);
    const MobiusTable mobius = mobius_sieve(2000);

    // --- special functions ---
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Complex z{0.3 + 0.28 * i, (i % 2 ? 1.0 : -1.0) * (0.2 + 0.35 * i)};
            worst = std::max(worst,
                             std::abs(exp_integral_e1(z) - e1_quadrature_oracle(z)));
        }
        detail::add_check(results, "E1 against the quadrature oracle", worst <= 1e-10,
                          worst, 1e-10);
    }
    {
        double worst = 0.0;
        const double radii[5] = {0.7, 1.3, 2.6, 4.4, 7.0};
        const double args[4] = {0.6, 2.2, -2.2, -0.6};
        for (double r : radii)
            for (double a : args) {
                const Complex z = std::polar(r, a);
                const double h = 1e-5 * std::max(1.0, std::abs(z));
                const Complex fd =
                    (exp_integral_e1(z + h) - exp_integral_e1(z - h)) / (2.0 * h);
                const Complex exact = -std::exp(-z) / z;
                worst = std::max(worst, std::abs(fd - exact) /
                                            std::max(1.0, std::abs(exact)));
            }
        detail::add_check(results, "E1 derivative by central differences",
                          worst <= 1e-6, worst, 1e-6);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 41; ++i)
            for (int j = 0; j < 13; ++j) {
                const Complex z =
                    std::polar(3.2 + 1.6 * i / 40.0, -2.95 + 5.9 * j / 12.0);
                const Complex series = detail::e1_series(z);
                const Complex fraction = detail::e1_continued_fraction(z);
                worst = std::max(worst,
                                 std::abs(series - fraction) / std::abs(fraction));
            }
        detail::add_check(results, "E1 series/continued-fraction crossover",
                          worst <= 1e-12, worst, 1e-12);
    }
    {
        std::mt19937 rng(2026);
        std::uniform_real_distribution<double> radius(0.05, 12.0);
        std::uniform_real_distribution<double> angle(-3.1, 3.1);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Complex z = std::polar(radius(rng), angle(rng));
            if (z.imag() == 0.0 && z.real() < 0.0) continue;
            worst = std::max(worst, std::abs(exp_integral_e1(std::conj(z)) -
                                             std::conj(exp_integral_e1(z))));
        }
        detail::add_check(results, "E1 conjugate symmetry", worst <= 1e-13, worst,
                          1e-13);
    }
    {
        double worst = 0.0;
        for (double x : {0.5, 1.0, 2.0}) {
            const double eps = 1e-8;
            const Complex jump =
                exp_integral_e1({-x, eps}) - exp_integral_e1({-x, -eps});
            worst = std::max(worst, std::abs(jump - Complex{0.0, -2.0 * pi}));
        }
        detail::add_check(results, "E1 branch-cut jump -2 pi i", worst <= 1e-6,
                          worst, 1e-6);
    }
    {
        double worst = 0.0;
        for (double x : {10.0, 100.0, 1e4}) {
            const double h = 1e-3 * x;
            const double fd =
                (log_integral(x + h) - log_integral(x - h)) / (2.0 * h);
            worst = std::max(worst,
                             std::abs(fd - 1.0 / std::log(x)) * std::log(x));
        }
        detail::add_check(results, "li derivative is 1/log x", worst <= 1e-6,
                          worst, 1e-6);
    }
    {
        const double basel = std::abs(riemann_zeta({2.0, 0.0}).real() - pi * pi / 6.0);
        detail::add_check(results, "zeta(2) = pi^2/6", basel <= 1e-13, basel, 1e-13);
    }
    {
        double worst = 0.0;
        std::mt19937 rng(55);
        std::uniform_real_distribution<double> re(0.51, 5.0);
        std::uniform_real_distribution<double> im(0.1, 80.0);
        for (int i = 0; i < 100; ++i) {
            const Complex s{re(rng), im(rng)};
            const Complex a = riemann_zeta(std::conj(s));
            const Complex b = std::conj(riemann_zeta(s));
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
        detail::add_check(results, "zeta conjugate symmetry", worst <= 1e-13, worst,
                          1e-13);
    }
    {
        double worst = 0.0;
        for (double re : {0.55, 0.75, 1.2, 2.0})
            for (double im : {0.0, 10.0, 50.0, 100.0}) {
                const Complex s{re, im};
                if (s == Complex{1.0, 0.0}) continue;
                const Complex base = riemann_zeta_em(s, zeta_default_cutoff(s),
                                                     zeta_default_corrections);
                const Complex refined =
                    riemann_zeta_em(s, 2 * zeta_default_cutoff(s),
                                    zeta_default_corrections + 2);
                worst = std::max(worst, std::abs(base - refined) / std::abs(refined));
            }
        detail::add_check(results, "zeta Euler-Maclaurin stability", worst <= 1e-12,
                          worst, 1e-12);
    }

    // --- primes ---
    {
        const PrimeTable sieved = sieve(100'000);
        bool equal = true;
        std::size_t index = 0;
        for (std::int64_t n = 2; n <= 100'000; ++n) {
            const bool is_prime = detail::trial_prime(n);
            const bool in_table = index < sieved.primes().size() &&
                                  sieved.primes()[index] == n;
            if (is_prime != in_table) equal = false;
            if (in_table) ++index;
        }
        if (index != sieved.primes().size()) equal = false;
        detail::add_check(results, "sieve equals trial division to 1e5", equal,
                          static_cast<double>(sieved.count()), 0.0);
    }
    {
        const MobiusTable table = mobius_sieve(1000);
        int nonzero = 0;
        int squarefree = 0;
        for (std::int64_t n = 1; n <= 1000; ++n) {
            if (table.mu(n) != 0) ++nonzero;
            bool sf = true;
            for (std::int64_t p = 2; p * p <= n; ++p)
                if (n % (p * p) == 0) sf = false;
            if (sf) ++squarefree;
        }
        detail::add_check(results, "sum |mu| counts the squarefree integers",
                          nonzero == squarefree, nonzero, squarefree);
    }
    {
        bool pass = true;
        const MobiusTable table = mobius_sieve(1000);
        for (std::int64_t n = 1; n <= 1000; ++n) {
            std::int64_t m = n;
            int factors = 0;
            bool squarefree = true;
            for (std::int64_t p = 2; p * p <= m; ++p) {
                if (m % p) continue;
                m /= p;
                if (m % p == 0) squarefree = false;
                ++factors;
            }
            if (m > 1) ++factors;
            const int expected = squarefree ? (factors % 2 ? -1 : 1) : 0;
            if (table.mu(n) != expected) pass = false;
        }
        detail::add_check(results, "mobius table vs factorization to 1e3", pass,
                          1000, 0.0);
    }
    {
        bool pass = true;
        const double eps = 1e-9;
        const PrimeTable small = sieve(1000);
        for (std::uint32_t p : small.primes()) {
            const double a = prime_count(p - eps, primes);
            const double b = prime_count(p + eps, primes);
            if (a + b != 2.0 * prime_count(p, primes)) pass = false;
        }
        detail::add_check(results, "prime_count half-step average", pass, 0.0, 0.0);
    }

    // --- prime zeta evaluators ---
    {
        std::mt19937 rng(771);
        std::uniform_real_distribution<double> re(1.5, 3.0);
        std::uniform_real_distribution<double> im(-20.0, 20.0);
        double worst_excess = -1e300;
        for (int i = 0; i < 50; ++i) {
            const Complex s{re(rng), im(rng)};
            const Evaluation direct = prime_zeta_direct(s, primes_large);
            const Evaluation mob = prime_zeta_mobius(s, 1000, mobius);
            worst_excess = std::max(worst_excess,
                                    std::abs(direct.value - mob.value) -
                                        (direct.error_bound + 1e-8));
        }
        detail::add_check(results, "cross-method agreement (50 random s)",
                          worst_excess <= 0.0, worst_excess, 0.0);
    }
    {
        double worst_ratio = 0.0;
        for (double re : {1.1, 1.5, 2.0, 3.0})
            for (double im : {0.0, 1.0, 10.0}) {
                const Complex s{re, im};
                const Evaluation fine = prime_zeta_rh(s, 1e4, primes);
                const Evaluation coarse = prime_zeta_rh(s, 1e3, primes);
                worst_ratio = std::max(worst_ratio, std::abs(fine.value - coarse.value) /
                                                        coarse.error_bound);
            }
        detail::add_check(results, "limit-variable stability for Re(s) > 1",
                          worst_ratio <= 1.0, worst_ratio, 1.0);
    }
    {
        const Complex s{0.75, 2.0};
        const Evaluation reference = prime_zeta_mobius(s, 2000, mobius);
        bool pass = true;
        for (double x : {1e2, 1e3, 1e4}) {
            const Evaluation rh = prime_zeta_rh(s, x, primes);
            if (std::abs(rh.value - reference.value) > rh.error_bound) pass = false;
        }
        detail::add_check(results, "error decay under the envelope", pass, 0.0, 0.0);
    }
    {
        double worst = 0.0;
        for (double sigma : {0.6, 0.75, 0.9}) {
            const double eps = 1e-8;
            const Evaluation up = prime_zeta_rh({sigma, eps}, 1e4, primes);
            const Evaluation down = prime_zeta_rh({sigma, -eps}, 1e4, primes);
            worst = std::max(worst, std::abs(up.value.imag() - down.value.imag() +
                                             2.0 * pi));
        }
        detail::add_check(results, "branch-cut jump of P is -2 pi", worst <= 1e-3,
                          worst, 1e-3);
    }
    {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> re(0.6, 2.5);
        std::uniform_real_distribution<double> im(0.2, 30.0);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const Complex s{re(rng), im(rng)};
            worst = std::max(
                worst, std::abs(prime_zeta_rh(std::conj(s), 1e4, primes).value -
                                std::conj(prime_zeta_rh(s, 1e4, primes).value)));
            worst = std::max(
                worst,
                std::abs(prime_zeta_mobius(std::conj(s), 1000, mobius).value -
                         std::conj(prime_zeta_mobius(s, 1000, mobius).value)));
        }
        detail::add_check(results, "evaluator conjugate symmetry off the cut",
                          worst <= 1e-13, worst, 1e-13);
    }
    {
        const Complex s{1.7, 3.0};
        const double x = 1e4;
        const Evaluation plain = prime_zeta_rh(s, x, primes);
        const Evaluation corrected = prime_zeta_rh_corrected(s, x, primes);
        const Complex expected =
            (prime_count(x, primes) - log_integral(x)) * std::exp(-s * std::log(x));
        // Reconstructing the term by subtraction rounds at ulp(|P|).
        const double residual = std::abs(plain.value - corrected.value - expected);
        detail::add_check(results, "boundary term is definitionally exact",
                          residual <= 1e-15, residual, 1e-15);
    }

    // --- analysis ---
    {
        double worst = 0.0;
        for (Complex s : {Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{2.0, 5.0}})
            for (double x : {std::exp(1.0), 10.0, 1e3})
                worst = std::max(worst, tail_identity_check(s, x));
        detail::add_check(results, "tail-integral identity", worst <= 1e-8, worst,
                          1e-8);
    }
    {
        const ScanTable table =
            scan_vertical(0.75, 0.5, 5.0, 0.5, 1e4, {Method::Mobius, Method::RH},
                          primes, mobius);
        bool pass = true;
        for (const ScanRow& row : table.rows) {
            const Complex ref = row.cells[0].value;
            for (const ScanCell& cell : row.cells)
                if (cell.diff_vs_reference != std::abs(cell.value - ref)) pass = false;
        }
        detail::add_check(results, "scan table self-consistency", pass, 0.0, 0.0);
    }
    {
        const Complex s{0.75, 2.0};
        const Evaluation reference = prime_zeta_mobius(s, 1000, mobius);
        const auto points = convergence_study(s, {1e2, 1e3, 1e4}, reference, primes);
        bool pass = true;
        for (const auto& point : points)
            if (point.exceeds_bound) pass = false;
        detail::add_check(results, "convergence study never exceeds envelope", pass,
                          0.0, 0.0);
    }

    return results;
}

}  // namespace pzeta
