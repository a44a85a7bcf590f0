#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pzeta {

inline constexpr std::int64_t sieve_limit_ceiling = 1'000'000'000;

// Immutable sorted table of all primes <= limit.
class PrimeTable {
public:
    PrimeTable(std::int64_t limit, std::vector<std::uint32_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::int64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::int64_t count() const { return static_cast<std::int64_t>(primes_.size()); }

private:
    std::int64_t limit_;
    std::vector<std::uint32_t> primes_;
};

namespace detail {

// Plain odd-only Eratosthenes up to limit (inclusive).
inline std::vector<std::uint32_t> simple_sieve(std::int64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    const std::int64_t half = (limit - 1) / 2;  // index i <-> odd 2i+1
    std::vector<bool> composite(half + 1, false);
    for (std::int64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::int64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        if (p * p > limit) continue;
        for (std::int64_t j = (p * p - 1) / 2; j <= half; j += p)
            composite[j] = true;
    }
    return primes;
}

inline constexpr std::int64_t sieve_segment_size = std::int64_t{1} << 20;

}  // namespace detail

// All primes <= limit; segmented above 10^7 to bound working memory.
inline PrimeTable sieve(std::int64_t limit) {
    if (limit < 2) throw std::domain_error("sieve: requires limit >= 2");
    if (limit > sieve_limit_ceiling)
        throw std::length_error("sieve: limit exceeds configured ceiling of 10^9");

    if (limit <= 10'000'000) return {limit, detail::simple_sieve(limit)};

    const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const std::vector<std::uint32_t> base = detail::simple_sieve(root);

    std::vector<std::uint32_t> primes;
    primes.reserve(static_cast<std::size_t>(
        static_cast<double>(limit) / std::log(static_cast<double>(limit)) * 1.15));
    std::vector<bool> composite(detail::sieve_segment_size);
    for (std::int64_t low = 2; low <= limit; low += detail::sieve_segment_size) {
        const std::int64_t high = std::min(low + detail::sieve_segment_size - 1, limit);
        std::fill(composite.begin(), composite.end(), false);
        for (std::uint32_t p : base) {
            const std::int64_t p64 = p;
            if (p64 * p64 > high) break;
            std::int64_t start = std::max(p64 * p64, (low + p64 - 1) / p64 * p64);
            for (std::int64_t m = start; m <= high; m += p64)
                composite[m - low] = true;
        }
        for (std::int64_t n = low; n <= high; ++n)
            if (!composite[n - low]) primes.push_back(static_cast<std::uint32_t>(n));
    }
    return {limit, std::move(primes)};
}

// Immutable table of mu(n) for 1 <= n <= limit.
class MobiusTable {
public:
    MobiusTable(std::int64_t limit, std::vector<std::int8_t> mu)
        : limit_(limit), mu_(std::move(mu)) {}

    std::int64_t limit() const { return limit_; }
    int mu(std::int64_t n) const {
        if (n < 1 || n > limit_) throw std::out_of_range("MobiusTable: n out of range");
        return mu_[static_cast<std::size_t>(n)];
    }

private:
    std::int64_t limit_;
    std::vector<std::int8_t> mu_;  // index 0 unused
};

// Linear (smallest-prime-factor) sieve for the Mobius function.
inline MobiusTable mobius_sieve(std::int64_t limit) {
    if (limit < 1) throw std::domain_error("mobius_sieve: requires limit >= 1");
    if (limit > sieve_limit_ceiling)
        throw std::length_error("mobius_sieve: limit exceeds configured ceiling of 10^9");

    std::vector<std::int8_t> mu(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    if (limit >= 1) mu[1] = 1;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::int64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;  // squared factor
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return {limit, std::move(mu)};
}

// pi(x) with half-step averaging: the count of primes <= x, minus 1/2 when
// x falls exactly on a prime (the average of the two sides of the jump).
inline double prime_count(double x, const PrimeTable& table) {
    if (!(x > 0.0)) throw std::domain_error("prime_count: requires x > 0");
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range("prime_count: x exceeds the table limit");
    const auto& primes = table.primes();
    const auto it = std::upper_bound(primes.begin(), primes.end(), x,
                                     [](double value, std::uint32_t p) {
                                         return value < static_cast<double>(p);
                                     });
    const auto below = static_cast<double>(it - primes.begin());
    const bool at_prime =
        it != primes.begin() && static_cast<double>(*(it - 1)) == x;
    return at_prime ? below - 0.5 : below;
}

}  // namespace pzeta
