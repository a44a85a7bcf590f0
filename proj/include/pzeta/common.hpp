#pragma once

#include <complex>
#include <cstdint>

namespace pzeta {

using Complex = std::complex<double>;

// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr long double euler_gamma_l = 0.57721566490153286060651209008240L;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr long double pi_l = 3.141592653589793238462643383279503L;

// Truncation policy for the power series evaluations.
struct SeriesControl {
    double rel_tolerance = 1e-15;
    int max_terms = 500;
};

// Compensated (Kahan) accumulator.
template <typename T>
class KahanSum {
public:
    void add(T term) {
        T y = term - compensation_;
        T t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T compensation_{};
};

// Compensated accumulator for complex values (componentwise Kahan).
class KahanSumComplex {
public:
    void add(Complex term) {
        re_.add(term.real());
        im_.add(term.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum<double> re_;
    KahanSum<double> im_;
};

}  // namespace pzeta
