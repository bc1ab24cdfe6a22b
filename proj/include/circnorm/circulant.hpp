#pragma once

#include "circnorm/dft.hpp"
#include "circnorm/exact.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circnorm {

/// Circulant matrix, stored as its first row. Entry (j, k) is
/// row[(k - j) mod n]: each row is the previous one shifted right by one.
/// The transpose convention is deliberately not supported.
class Circulant {
public:
    static Circulant from_exact(std::vector<ExactInt> row) {
        if (row.empty()) throw std::invalid_argument("circulant order must be at least 1");
        Circulant c;
        c.n_ = static_cast<int>(row.size());
        c.exact_ = std::move(row);
        c.has_exact_ = true;
        c.has_real_ = std::all_of(c.exact_.begin(), c.exact_.end(),
                                  [](const ExactInt& x) { return fits_finite_double(x); });
        if (c.has_real_) {
            c.real_.reserve(c.exact_.size());
            for (const auto& x : c.exact_) c.real_.push_back(to_double(x));
        }
        return c;
    }

    static Circulant from_real(std::vector<double> row) {
        if (row.empty()) throw std::invalid_argument("circulant order must be at least 1");
        for (double x : row)
            if (!std::isfinite(x)) throw std::invalid_argument("circulant entries must be finite");
        Circulant c;
        c.n_ = static_cast<int>(row.size());
        c.real_ = std::move(row);
        c.has_real_ = true;
        return c;
    }

    int order() const { return n_; }
    bool has_exact_row() const { return has_exact_; }

    /// False only for exact rows whose entries overflow finite doubles;
    /// every floating-point route is unavailable for such a matrix.
    bool has_real_row() const { return has_real_; }

    const std::vector<ExactInt>& exact_row() const {
        if (!has_exact_) throw std::logic_error("circulant has no exact row");
        return exact_;
    }

    const std::vector<double>& real_row() const {
        if (!has_real_)
            throw capacity_error("row entries exceed the finite double range; "
                                 "floating-point routes are unavailable");
        return real_;
    }

private:
    Circulant() = default;
    int n_ = 0;
    std::vector<ExactInt> exact_;
    std::vector<double> real_;
    bool has_exact_ = false;
    bool has_real_ = false;
};

/// Eigenvalues in DFT order: lambda_j = sum_k a_k exp(2 pi i j k / n).
using Spectrum = std::vector<std::complex<double>>;

inline Spectrum eigenvalues(const Circulant& c, DftKernel kernel = DftKernel::Direct) {
    return dft(std::span<const double>(c.real_row()), +1, kernel);
}

inline double spectral_norm(const Circulant& c, DftKernel kernel = DftKernel::Direct) {
    double best = 0.0;
    for (const auto& v : eigenvalues(c, kernel)) best = std::max(best, std::abs(v));
    return best;
}

/// Maximum column-absolute-sum. Circulant columns are permutations of the
/// first row, so this is exactly sum_k |a_k|.
inline ExactInt one_norm(const Circulant& c) {
    ExactInt sum = 0;
    for (const auto& x : c.exact_row()) sum += boost::multiprecision::abs(x);
    return sum;
}

inline double one_norm_real(const Circulant& c) {
    double sum = 0.0;
    for (double x : c.real_row()) sum += std::abs(x);
    return sum;
}

/// Row sum of a nonnegative circulant: its Perron eigenvalue (eigenvector
/// all-ones), hence also its spectral norm.
inline ExactInt perron_row_sum(const Circulant& c) {
    ExactInt sum = 0;
    for (const auto& x : c.exact_row()) {
        if (x < 0) throw std::domain_error("perron_row_sum requires nonnegative entries");
        sum += x;
    }
    return sum;
}

/// Dense n-by-n image of the matrix, for cross-checks against generic
/// linear algebra. Quadratic in memory; meant for small orders.
inline std::vector<std::vector<double>> materialize(const Circulant& c) {
    const auto& row = c.real_row();
    const int n = c.order();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(((k - j) % n + n) % n)];
    return m;
}

enum class MatvecMethod { Naive, Convolution };

/// y = A v. Naive is the quadratic definition; Convolution routes through
/// the transform (Y_l = V_l * A_hat_{(n-l) mod n}) and defaults to the fast
/// kernel since that is its reason to exist.
inline std::vector<double> matvec(const Circulant& c, std::span<const double> v,
                                  MatvecMethod method = MatvecMethod::Naive,
                                  DftKernel kernel = DftKernel::Fast) {
    const int n = c.order();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("matvec: vector length must equal the matrix order");
    const auto& row = c.real_row();

    std::vector<double> y(static_cast<std::size_t>(n));
    if (method == MatvecMethod::Naive) {
        for (int j = 0; j < n; ++j) {
            detail::KahanSum acc;
            for (int k = 0; k < n; ++k)
                acc.add(row[static_cast<std::size_t>(((k - j) % n + n) % n)] *
                        v[static_cast<std::size_t>(k)]);
            y[static_cast<std::size_t>(j)] = acc.sum;
        }
        return y;
    }

    const auto a_hat = dft(std::span<const double>(row), +1, kernel);
    const auto v_hat = dft(v, +1, kernel);
    std::vector<std::complex<double>> y_hat(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l)
        y_hat[static_cast<std::size_t>(l)] =
            v_hat[static_cast<std::size_t>(l)] * a_hat[static_cast<std::size_t>((n - l) % n)];
    const auto y_c = idft(std::span<const std::complex<double>>(y_hat), +1, kernel);
    for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] = y_c[static_cast<std::size_t>(j)].real();
    return y;
}

} // namespace circnorm
