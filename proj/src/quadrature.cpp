#include "apxnum/quadrature.hpp"

#include "apxnum/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace apx {

Quad1D gauss_legendre(int n) {
    if (n < 1) throw domain_error("quadrature order must be >= 1");
    Quad1D q;
    q.x.resize(static_cast<std::size_t>(n));
    q.w.resize(static_cast<std::size_t>(n));
    // Newton from the Chebyshev-like initial guess; symmetric pairs share work.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        q.x[static_cast<std::size_t>(i)] = -x;
        q.w[static_cast<std::size_t>(i)] = w;
        q.x[static_cast<std::size_t>(n - 1 - i)] = x;
        q.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return q;
}

Quad1D radial_bergman(int n, double alpha) {
    if (n < 1) throw domain_error("quadrature order must be >= 1");
    if (!(alpha > -1.0)) throw domain_error("radial rule needs alpha > -1");
    // Golub-Welsch for the Jacobi weight (1-x)^alpha (1+x)^0 on [-1, 1].
    const double a = alpha, b = 0.0;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double den = (2.0 * k + a + b) * (2.0 * k + a + b + 2.0);
        J(k, k) = (k == 0) ? (b - a) / (a + b + 2.0)
                           : (b * b - a * a) / den;
        if (k + 1 < n) {
            const int m = k + 1;
            const double num = 4.0 * m * (m + a) * (m + b) * (m + a + b);
            const double dd = (2.0 * m + a + b) * (2.0 * m + a + b);
            const double beta = num / (dd * (2.0 * m + a + b + 1.0) * (2.0 * m + a + b - 1.0));
            J(k, k + 1) = J(k + 1, k) = std::sqrt(beta);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    // Total mass of (1-x)^a(1+x)^b on [-1,1] is 2^{a+b+1} B(a+1, b+1).
    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    Quad1D q;
    q.x.resize(static_cast<std::size_t>(n));
    q.w.resize(static_cast<std::size_t>(n));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        q.x[static_cast<std::size_t>(i)] = 0.5 * (es.eigenvalues()(i) + 1.0); // map to u in [0,1]
        const double v = es.eigenvectors()(0, i);
        q.w[static_cast<std::size_t>(i)] = mu0 * v * v;
        total += q.w[static_cast<std::size_t>(i)];
    }
    // Normalize so the weights integrate the probability measure exactly.
    for (auto& w : q.w) w /= total;
    return q;
}

Quad1D graded_circle(int levels, int order) {
    if (levels < 1 || order < 2) throw domain_error("graded circle rule needs levels >= 1, order >= 2");
    const Quad1D gl = gauss_legendre(order);
    Quad1D q;
    auto panel = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < order; ++i) {
            const double t = mid + half * gl.x[static_cast<std::size_t>(i)];
            const double w = half * gl.w[static_cast<std::size_t>(i)] / (2.0 * M_PI);
            q.x.push_back(t);
            q.w.push_back(w);
            q.x.push_back(-t);
            q.w.push_back(w);
        }
    };
    // (0, pi/2]: dyadic toward 0.
    double hi = 0.5 * M_PI;
    for (int m = 0; m < levels; ++m) {
        panel(0.5 * hi, hi);
        hi *= 0.5;
    }
    panel(0.0, hi);
    // [pi/2, pi): dyadic toward pi.
    double lo = 0.5 * M_PI;
    for (int m = 0; m < levels; ++m) {
        const double next = M_PI - 0.5 * (M_PI - lo);
        panel(lo, next);
        lo = next;
    }
    panel(lo, M_PI);
    return q;
}

Quad1D uniform_circle(int m) {
    if (m < 1) throw domain_error("quadrature order must be >= 1");
    Quad1D q;
    q.x.resize(static_cast<std::size_t>(m));
    q.w.assign(static_cast<std::size_t>(m), 1.0 / m);
    for (int i = 0; i < m; ++i)
        q.x[static_cast<std::size_t>(i)] = -M_PI + (2.0 * M_PI) * (i + 0.5) / m;
    return q;
}

} // namespace apx
