#pragma once

// Independent dense-eigensolver route used to cross-check the DFT spectra.

#include "circnorm/circulant.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <vector>

inline std::vector<std::complex<double>> dense_eigenvalues(const circnorm::Circulant& c) {
    const auto rows = circnorm::materialize(c);
    const int n = c.order();
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) a(j, k) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = solver.eigenvalues()(j);
    return out;
}

/// Greedy multiset matching: largest leftover distance after pairing each
/// value with its nearest unused partner. Robust to eigenvalue ordering.
inline double multiset_distance(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b) {
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = b.size();
        double best_d = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const double d = std::abs(x - b[i]);
            if (best == b.size() || d < best_d) {
                best = i;
                best_d = d;
            }
        }
        worst = std::max(worst, best_d);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}
