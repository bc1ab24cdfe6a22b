#pragma once

namespace circnorm {

/// Comparison tolerances shared by the library defaults, the CLI and the
/// test suites, so the knobs cannot drift apart between consumers.
struct Tolerances {
    /// Float spectral norm vs exact row sum: relative to max(1, row sum).
    double spectral_rel = 1e-9;
    /// Fast transform vs the direct baseline: relative to max(1, peak magnitude).
    double dft_cross_rel = 1e-10;
    /// DFT eigenvalues vs a dense solver: absolute, scaled by 1 + sum|entries|.
    double dense_cross_abs = 1e-8;
};

/// Every closed form in the catalog is validated against direct summation
/// over 1..oracle_sweep_max before it may report a value.
inline constexpr int oracle_sweep_max = 200;

/// Largest order at which scan() attempts the floating spectral route by
/// default; exact routes have no such cutoff.
inline constexpr int default_float_max_order = 70;

} // namespace circnorm
