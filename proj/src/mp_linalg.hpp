#pragma once

// Dense one-sided Jacobi SVD and cyclic Jacobi eigensolver over an arbitrary
// real scalar type. Kept header-internal: the public surface only ever hands
// out doubles. Column-major storage in plain vectors avoids tying the
// multiprecision scalar into Eigen's expression machinery.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace apx::mp {

template <typename Real>
struct Dense {
    std::size_t rows = 0, cols = 0;
    std::vector<Real> a; // column-major

    Dense() = default;
    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Real(0)) {}
    Real& operator()(std::size_t i, std::size_t j) { return a[j * rows + i]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return a[j * rows + i]; }
};

template <typename Real>
Real col_dot(const Dense<Real>& m, std::size_t p, std::size_t q) {
    Real s(0);
    const Real* cp = m.a.data() + p * m.rows;
    const Real* cq = m.a.data() + q * m.rows;
    for (std::size_t i = 0; i < m.rows; ++i) s += cp[i] * cq[i];
    return s;
}

// One-sided (Hestenes) Jacobi: rotate column pairs until all are mutually
// orthogonal; the column norms are then the singular values.
template <typename Real>
std::vector<Real> jacobi_svd(Dense<Real> m, const Real& tol, int max_sweeps = 60) {
    using std::abs;
    using std::sqrt;
    const std::size_t n = m.cols;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Real app = col_dot(m, p, p);
                const Real aqq = col_dot(m, q, q);
                const Real apq = col_dot(m, p, q);
                if (abs(apq) <= tol * sqrt(app * aqq)) continue;
                rotated = true;
                const Real zeta = (aqq - app) / (Real(2) * apq);
                const Real t = (zeta >= Real(0) ? Real(1) : Real(-1)) /
                               (abs(zeta) + sqrt(Real(1) + zeta * zeta));
                const Real c = Real(1) / sqrt(Real(1) + t * t);
                const Real s = c * t;
                Real* cp = m.a.data() + p * m.rows;
                Real* cq = m.a.data() + q * m.rows;
                for (std::size_t i = 0; i < m.rows; ++i) {
                    const Real x = cp[i], y = cq[i];
                    cp[i] = c * x - s * y;
                    cq[i] = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<Real> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        using std::sqrt;
        sv[j] = sqrt(col_dot(m, j, j));
    }
    std::sort(sv.begin(), sv.end(), [](const Real& x, const Real& y) { return x > y; });
    return sv;
}

// Cyclic Jacobi for a symmetric matrix; returns eigenvalues descending.
template <typename Real>
std::vector<Real> jacobi_eig(Dense<Real> m, const Real& tol, int max_sweeps = 60) {
    using std::abs;
    using std::sqrt;
    const std::size_t n = m.rows;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real off(0), diag(0);
        for (std::size_t p = 0; p < n; ++p) {
            diag += abs(m(p, p));
            for (std::size_t q = p + 1; q < n; ++q) off += abs(m(p, q));
        }
        if (off <= tol * (diag + off)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Real apq = m(p, q);
                if (abs(apq) <= tol * (abs(m(p, p)) + abs(m(q, q)) + abs(apq))) continue;
                const Real tau = (m(q, q) - m(p, p)) / (Real(2) * apq);
                const Real t = (tau >= Real(0) ? Real(1) : Real(-1)) /
                               (abs(tau) + sqrt(Real(1) + tau * tau));
                const Real c = Real(1) / sqrt(Real(1) + t * t);
                const Real s = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const Real x = m(i, p), y = m(i, q);
                    m(i, p) = c * x - s * y;
                    m(i, q) = s * x + c * y;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Real x = m(p, i), y = m(q, i);
                    m(p, i) = c * x - s * y;
                    m(q, i) = s * x + c * y;
                }
            }
        }
    }
    std::vector<Real> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end(), [](const Real& x, const Real& y) { return x > y; });
    return ev;
}

} // namespace apx::mp
