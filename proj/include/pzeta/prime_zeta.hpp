#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "pzeta/common.hpp"
#include "pzeta/primes.hpp"
#include "pzeta/specfun.hpp"

namespace pzeta {

enum class Method { Direct, Mobius, RH, RHCorrected };

inline std::string_view method_name(Method m) {
    switch (m) {
        case Method::Direct: return "direct";
        case Method::Mobius: return "mobius";
        case Method::RH: return "rh";
        case Method::RHCorrected: return "rh-corrected";
    }
    return "?";
}

inline std::optional<Method> method_from_name(std::string_view name) {
    if (name == "direct") return Method::Direct;
    if (name == "mobius") return Method::Mobius;
    if (name == "rh") return Method::RH;
    if (name == "rh-corrected") return Method::RHCorrected;
    return std::nullopt;
}

struct Evaluation {
    Complex value;
    Method method;
    double truncation;    // the x or N the evaluator actually used
    double error_bound;   // a-priori tail/remainder envelope; 0 when n/a
    bool on_cut;
    // Diagnostic: some log zeta(ns) term had |arg| > 3, i.e. the principal
    // branch was applied close to its cut (Mobius evaluator only).
    bool zeta_branch_warning = false;
};

// P(s) sits on its branch cut for real s in (1/2, 1].
inline bool on_branch_cut(Complex s) {
    return s.imag() == 0.0 && s.real() > 0.5 && s.real() <= 1.0;
}

namespace detail {

inline Complex prime_power_sum(Complex s, const PrimeTable& table, double x_cap) {
    KahanSumComplex sum;
    const bool real_s = s.imag() == 0.0;
    for (std::uint32_t p : table.primes()) {
        const auto pd = static_cast<double>(p);
        if (pd > x_cap) break;
        if (real_s)
            sum.add({std::pow(pd, -s.real()), 0.0});
        else
            sum.add(std::exp(-s * std::log(pd)));
    }
    return sum.value();
}

}  // namespace detail

// A-priori deviation envelope x^{1/2 - Re(s)} log x (implied constant 1).
inline double error_bound(Complex s, double x) {
    if (s.real() <= 0.5) throw std::domain_error("error_bound: requires Re(s) > 1/2");
    if (x < 2.0) throw std::domain_error("error_bound: requires x >= 2");
    return std::pow(x, 0.5 - s.real()) * std::log(x);
}

// Truncated Dirichlet series over primes, absolutely convergent for Re(s) > 1.
inline Evaluation prime_zeta_direct(Complex s, const PrimeTable& table) {
    if (s.real() <= 1.0)
        throw std::domain_error("prime_zeta_direct: requires Re(s) > 1");
    const auto limit = static_cast<double>(table.limit());
    const Complex value = detail::prime_power_sum(s, table, limit);
    const double tail =
        std::pow(limit, 1.0 - s.real()) / ((s.real() - 1.0) * std::log(limit));
    return {value, Method::Direct, limit, tail, on_branch_cut(s)};
}

// Mobius inversion over log zeta(ns); the reference evaluator for
// Re(s) > 1/2. Terms with Re(ns) > 60 are dropped: |log zeta| < 2^-59 there,
// below binary64 noise.
inline Evaluation prime_zeta_mobius(Complex s, std::int64_t n_max,
                                    const MobiusTable& mobius) {
    if (s == Complex{1.0, 0.0})
        throw std::domain_error("prime_zeta_mobius: pole at s = 1");
    if (s.real() <= 0.5)
        throw std::domain_error("prime_zeta_mobius: requires Re(s) > 1/2");
    if (n_max < 1 || n_max > mobius.limit())
        throw std::invalid_argument("prime_zeta_mobius: n_max outside Mobius table");

    KahanSumComplex sum;
    bool branch_warning = false;
    std::int64_t n_eff = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (n > 1 && s.real() * static_cast<double>(n) > 60.0) break;
        n_eff = n;
        const int mu = mobius.mu(n);
        if (mu == 0) continue;
        const Complex zeta_ns = riemann_zeta(static_cast<double>(n) * s);
        // Principal Log applied close to its cut; only a diagnostic off the
        // P(s) cut itself, where arg zeta(s) = pi is definitional.
        if (s.imag() != 0.0 && std::abs(std::arg(zeta_ns)) > 3.0)
            branch_warning = true;
        sum.add(static_cast<double>(mu) / static_cast<double>(n) * std::log(zeta_ns));
    }
    return {sum.value(),    Method::Mobius, static_cast<double>(n_eff),
            0.0,            on_branch_cut(s), branch_warning};
}

// Truncated prime sum plus E1[(s-1) log x]; the RH-conditional continuation
// to Re(s) > 1/2 with its branch cut on (1/2, 1].
inline Evaluation prime_zeta_rh(Complex s, double x, const PrimeTable& table) {
    if (s == Complex{1.0, 0.0})
        throw std::domain_error("prime_zeta_rh: singular at s = 1");
    if (s.real() <= 0.5)
        throw std::domain_error("prime_zeta_rh: requires Re(s) > 1/2");
    if (x < 2.0) throw std::domain_error("prime_zeta_rh: requires x >= 2");
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range("prime_zeta_rh: x exceeds the prime table limit");

    Complex value = detail::prime_power_sum(s, table, x);
    value += exp_integral_e1((s - 1.0) * std::log(x));
    return {value, Method::RH, x, error_bound(s, x), on_branch_cut(s)};
}

// As prime_zeta_rh, minus the boundary term (pi(x) - li(x)) / x^s. Same
// error envelope: the boundary term is of the same order as the remainder.
inline Evaluation prime_zeta_rh_corrected(Complex s, double x,
                                          const PrimeTable& table) {
    Evaluation eval = prime_zeta_rh(s, x, table);
    const double boundary = prime_count(x, table) - log_integral(x);
    eval.value -= boundary * std::exp(-s * std::log(x));
    eval.method = Method::RHCorrected;
    return eval;
}

}  // namespace pzeta
