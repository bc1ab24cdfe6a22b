#pragma once

#include "circnorm/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace circnorm {

/// F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2). Exact for any n >= 0.
inline ExactInt fib(int n) {
    if (n < 0) throw std::invalid_argument("fib: negative index");
    ExactInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        ExactInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// L(0)=2, L(1)=1, L(n)=L(n-1)+L(n-2). Exact for any n >= 0.
inline ExactInt lucas(int n) {
    if (n < 0) throw std::invalid_argument("lucas: negative index");
    ExactInt a = 2, b = 1;
    for (int i = 0; i < n; ++i) {
        ExactInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// Largest index at which the Binet evaluations below are guaranteed to
/// round to the exact integer (|error| < 0.5). Indices above it throw.
inline constexpr int binet_index_cap = 70;

namespace detail {

// Extended precision internally: in plain double the Lucas form already
// misses L(70) by a full unit, while long double keeps the worst error
// near 6e-5 over the capped range.
inline long double binet_phi_pow(int n) {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return std::pow(phi, static_cast<long double>(n));
}

inline void binet_check_index(const char* who, int n) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative index");
    if (n > binet_index_cap) throw capacity_error(std::string(who) + ": index above precision cap 70");
}

} // namespace detail

/// (phi^n - cos(pi n) phi^-n) / sqrt(5), the closed form of fib(n).
/// Floating-point on purpose: it cross-checks the exact recurrence.
inline double binet_fib(int n) {
    detail::binet_check_index("binet_fib", n);
    const long double cos_pi_n = (n % 2 == 0) ? 1.0L : -1.0L;
    const long double value =
        (detail::binet_phi_pow(n) - cos_pi_n * detail::binet_phi_pow(-n)) / std::sqrt(5.0L);
    return static_cast<double>(value);
}

/// phi^n + cos(pi n) phi^-n, the closed form of lucas(n).
inline double binet_lucas(int n) {
    detail::binet_check_index("binet_lucas", n);
    const long double cos_pi_n = (n % 2 == 0) ? 1.0L : -1.0L;
    return static_cast<double>(detail::binet_phi_pow(n) + cos_pi_n * detail::binet_phi_pow(-n));
}

} // namespace circnorm
