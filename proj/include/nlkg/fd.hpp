#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nlkg/errors.hpp"

namespace nlkg {

/// Finite-difference weights for the m-th derivative at point x0 from
/// arbitrary nodes (Fornberg's recursion). weights[i] multiplies f(nodes[i]).
inline std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m) {
    const int n = static_cast<int>(nodes.size());
    if (n < m + 1) throw ArgumentError("fd_weights: need at least m+1 nodes");
    // c[j][k]: weight of node j for the k-th derivative, built incrementally.
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < n; ++i) {
        double c2 = 1.0;
        const double xi = nodes[i] - x0;
        const int mn = std::min(i, m);
        for (int j = 0; j < i; ++j) {
            const double xj = nodes[j] - x0;
            const double dx = nodes[i] - nodes[j];
            c2 *= dx;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - xj * c[i - 1][k]) / c2;
                c[i][0] = -c1 * xj * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (xi * c[j][k] - k * c[j][k - 1]) / dx;
            c[j][0] = xi * c[j][0] / dx;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = c[j][m];
    return w;
}

/// m-th derivative of samples on a uniform grid with spacing h.
/// Centered stencils of order >= 4 in the interior (m+4 points, m+5 when
/// that count is even, so the stencil symmetrizes); shifted one-sided
/// stencils of the same width near the boundary.
inline std::vector<double> uniform_derivative(std::span<const double> f, double h, int m) {
    const int n = static_cast<int>(f.size());
    if (m == 0) return std::vector<double>(f.begin(), f.end());
    int width = m + 4;
    if ((width - 1) % 2 != 0) width += 1; // odd point count -> symmetric stencil
    if (width > n) width = n;
    if (n < m + 1) throw ArgumentError("uniform_derivative: grid too small for requested order");

    std::vector<double> out(n, 0.0);
    const int half = (width - 1) / 2;

    // Interior weights are shared; precompute once.
    std::vector<double> nodes(width);
    for (int i = 0; i < width; ++i) nodes[i] = (i - half) * h;
    const std::vector<double> wc = fd_weights(0.0, nodes, m);

    for (int i = 0; i < n; ++i) {
        int start = i - half;
        if (start < 0) start = 0;
        if (start + width > n) start = n - width;
        if (start == i - half) {
            double acc = 0.0;
            for (int j = 0; j < width; ++j) acc += wc[j] * f[start + j];
            out[i] = acc;
        } else {
            for (int j = 0; j < width; ++j) nodes[j] = (start + j - i) * h;
            const std::vector<double> w = fd_weights(0.0, nodes, m);
            double acc = 0.0;
            for (int j = 0; j < width; ++j) acc += w[j] * f[start + j];
            out[i] = acc;
        }
    }
    return out;
}

} // namespace nlkg
