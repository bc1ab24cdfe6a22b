#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace circnorm {

/// Direct is the auditable O(n^2) baseline; Fast is radix-2 with a
/// Bluestein fallback for non-power-of-two lengths. Fast must agree with
/// Direct to Tolerances::dft_cross_rel, which the test suite enforces.
enum class DftKernel { Direct, Fast };

namespace detail {

// Compensated accumulator; keeps the direct kernel's rounding flat enough
// that its 1e-10 cross-check against the fast path is meaningful.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Twiddles w^m = exp(sign * 2 pi i m / n) for m = 0..n-1, computed from the
// reduced angle so large j*k products lose no precision. The upper half is
// mirrored from the lower so conjugate symmetry of the table is exact.
inline std::vector<std::complex<double>> twiddle_table(std::size_t n, int sign) {
    std::vector<std::complex<double>> w(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t m = 0; m <= n / 2; ++m)
        w[m] = std::polar(1.0, static_cast<double>(sign) * step * static_cast<double>(m));
    for (std::size_t m = n / 2 + 1; m < n; ++m) w[m] = std::conj(w[n - m]);
    return w;
}

inline std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> x,
                                                    int sign) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    if (n == 0) return out;
    const auto w = twiddle_table(n, sign);
    for (std::size_t j = 0; j < n; ++j) {
        KahanSum re, im;
        for (std::size_t k = 0; k < n; ++k) {
            const auto t = x[k] * w[(j * k) % n];
            re.add(t.real());
            im.add(t.imag());
        }
        out[j] = {re.sum, im.sum};
    }
    return out;
}

// Iterative in-place radix-2; a.size() must be a power of two.
inline void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double step = static_cast<double>(sign) * 2.0 * std::numbers::pi /
                            static_cast<double>(len);
        std::vector<std::complex<double>> w(len / 2);
        for (std::size_t k = 0; k < len / 2; ++k)
            w[k] = std::polar(1.0, step * static_cast<double>(k));
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[base + k];
                const auto v = a[base + k + len / 2] * w[k];
                a[base + k] = u + v;
                a[base + k + len / 2] = u - v;
            }
        }
    }
}

// Bluestein: rewrites an arbitrary-length transform as a power-of-two
// circular convolution against the chirp w_t = exp(sign i pi t^2 / n).
// The chirp exponent is reduced mod 2n before touching floating point.
inline std::vector<std::complex<double>> dft_bluestein(std::span<const std::complex<double>> x,
                                                       int sign) {
    const std::size_t n = x.size();
    const std::size_t m = std::bit_ceil(2 * n - 1);
    const double step = static_cast<double>(sign) * std::numbers::pi / static_cast<double>(n);

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto reduced = static_cast<std::uint64_t>(t) * t % (2 * n);
        chirp[t] = std::polar(1.0, step * static_cast<double>(reduced));
    }

    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = 1.0;
    for (std::size_t t = 1; t < n; ++t) b[t] = b[m - t] = std::conj(chirp[t]);

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, +1);

    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) out[j] = chirp[j] * (a[j] * scale);
    return out;
}

inline std::vector<std::complex<double>> dft_fast(std::span<const std::complex<double>> x,
                                                  int sign) {
    const std::size_t n = x.size();
    if (n == 0) return {};
    if (std::has_single_bit(n)) {
        std::vector<std::complex<double>> a(x.begin(), x.end());
        fft_pow2(a, sign);
        return a;
    }
    return dft_bluestein(x, sign);
}

} // namespace detail

/// Unnormalized transform: X_j = sum_k x_k exp(sign 2 pi i j k / n).
/// sign=+1 is the orientation that maps a circulant first row to its
/// eigenvalues; sign=-1 is its adjoint.
inline std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x, int sign,
                                             DftKernel kernel = DftKernel::Direct) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +1 or -1");
    return kernel == DftKernel::Direct ? detail::dft_direct(x, sign) : detail::dft_fast(x, sign);
}

inline std::vector<std::complex<double>> dft(std::span<const double> x, int sign,
                                             DftKernel kernel = DftKernel::Direct) {
    std::vector<std::complex<double>> cx(x.begin(), x.end());
    return dft(std::span<const std::complex<double>>(cx), sign, kernel);
}

/// Inverse of dft(., sign): applies the opposite sign and scales by 1/n.
inline std::vector<std::complex<double>> idft(std::span<const std::complex<double>> x, int sign,
                                              DftKernel kernel = DftKernel::Direct) {
    auto out = dft(x, -sign, kernel);
    const double scale = out.empty() ? 1.0 : 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= scale;
    return out;
}

} // namespace circnorm
