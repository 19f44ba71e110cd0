#pragma once

// Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices.
//
// Used by the certificate verifier, deliberately separate from the Eigen
// decomposition that drives the solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gctri::spectral {

/// Row-major n x n symmetric matrix.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t size) : n(size), a(size * size, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// All eigenvalues, ascending. Iterates full Jacobi sweeps until the
/// off-diagonal Frobenius mass is below `tol` times the matrix norm.
inline std::vector<double> jacobi_eigenvalues(SymmetricMatrix m, double tol = 1e-8, int max_sweeps = 100) {
    const std::size_t n = m.n;
    double total = 0.0;
    for (double v : m.a) total += v * v;
    const double scale = std::sqrt(total);
    // off-diagonal mass below (1e-3 * tol * ||M||_F)^2 bounds the eigenvalue error well under tol
    const double threshold = std::max(tol * tol * 1e-6, 1e-300) * (scale > 0 ? scale * scale : 1.0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
        }
        if (off <= threshold) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = m(k, p);
                    const double akq = m(k, q);
                    m(k, p) = c * akp - s * akq;
                    m(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = m(p, k);
                    const double aqk = m(q, k);
                    m(p, k) = c * apk - s * aqk;
                    m(q, k) = s * apk + c * aqk;
                }
                m(p, q) = m(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t k = 0; k < n; ++k) eig[k] = m(k, k);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Largest |eigenvalue|, i.e. the operator 2-norm of a symmetric matrix.
inline double spectral_norm(const SymmetricMatrix& m, double tol = 1e-8) {
    if (m.n == 0) return 0.0;
    const auto eig = jacobi_eigenvalues(m, tol);
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

}  // namespace gctri::spectral
