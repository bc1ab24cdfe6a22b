#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace circnorm {

/// Arbitrary-precision signed integer used for every exact computation.
using ExactInt = boost::multiprecision::cpp_int;

/// Thrown when a floating-point route cannot faithfully handle a value:
/// row entries that do not convert to a finite double, or Binet indices
/// past the precision cap. Exact routes never throw this.
class capacity_error : public std::domain_error {
public:
    explicit capacity_error(const std::string& what) : std::domain_error(what) {}
};

/// True if x converts to a finite double (rounding is fine, overflow is not).
inline bool fits_finite_double(const ExactInt& x) {
    if (x == 0) return true;
    if (boost::multiprecision::msb(boost::multiprecision::abs(x)) > 1023) return false;
    return std::isfinite(x.convert_to<double>());
}

inline double to_double(const ExactInt& x) { return x.convert_to<double>(); }

/// Division that must be exact; a nonzero remainder means the closed form
/// being evaluated is wrong, so it throws instead of truncating.
inline ExactInt exact_div(const ExactInt& numerator, const ExactInt& divisor) {
    if (divisor == 0) throw std::invalid_argument("exact_div: zero divisor");
    if (numerator % divisor != 0) throw std::logic_error("exact_div: nonzero remainder");
    return numerator / divisor;
}

} // namespace circnorm
