#pragma once

// Test-only reference implementations, independent of the library paths
// they are used to check.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

// Ei by its defining series in extended precision, terms below 1e-18.
inline long double ei_series(long double x) {
    long double sum = 0.57721566490153286060651209008240L + std::log(std::abs(x));
    long double term = 1.0L;
    for (int k = 1; k <= 2000; ++k) {
        term *= x / k;
        const long double contribution = term / k;
        sum += contribution;
        if (k > 4 && std::abs(contribution) < 1e-18L) break;
    }
    return sum;
}

inline bool is_prime_trial_division(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> primes_trial_division(std::int64_t limit) {
    std::vector<std::uint32_t> primes;
    for (std::int64_t n = 2; n <= limit; ++n)
        if (is_prime_trial_division(n)) primes.push_back(static_cast<std::uint32_t>(n));
    return primes;
}

// mu(n) by full trial factorization.
inline int mobius_by_factorization(std::int64_t n) {
    int factors = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

inline bool is_squarefree(std::int64_t n) { return mobius_by_factorization(n) != 0; }

}  // namespace oracles
