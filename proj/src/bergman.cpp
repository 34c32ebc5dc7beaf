#include "apxnum/bergman.hpp"

#include "apxnum/errors.hpp"

#include <cmath>
#include <string>

namespace apx {

static void require_alpha(double alpha) {
    if (!(alpha >= -1.0) || !std::isfinite(alpha))
        throw domain_error("alpha must be a finite real >= -1, got " + std::to_string(alpha));
}

double log_weight(int k, double alpha) {
    require_alpha(alpha);
    if (k < 0) throw domain_error("weight index must be >= 0");
    if (alpha == -1.0) return 0.0;
    return std::lgamma(k + 1.0) + std::lgamma(alpha + 2.0) - std::lgamma(k + alpha + 2.0);
}

double weight(int k, double alpha) {
    if (alpha == -1.0) {
        require_alpha(alpha);
        if (k < 0) throw domain_error("weight index must be >= 0");
        return 1.0; // exact in the Hardy case
    }
    return std::exp(log_weight(k, alpha));
}

std::vector<double> weights(int n, double alpha) {
    if (n < 0) throw domain_error("weight count must be >= 0");
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] = weight(k, alpha);
    return w;
}

double norm_sq(const std::vector<cdouble>& coeffs, double alpha) {
    require_alpha(alpha);
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += weight(static_cast<int>(k), alpha) * std::norm(coeffs[k]);
    return s;
}

double norm(const std::vector<cdouble>& coeffs, double alpha) {
    return std::sqrt(norm_sq(coeffs, alpha));
}

cdouble inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b, double alpha) {
    require_alpha(alpha);
    if (a.size() != b.size())
        throw precondition_error("inner product needs equal coefficient counts");
    cdouble s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += weight(static_cast<int>(k), alpha) * a[k] * std::conj(b[k]);
    return s;
}

double kernel_norm_sq(cdouble a, double alpha) {
    require_alpha(alpha);
    const double m = std::norm(a);
    if (m >= 1.0) throw domain_error("kernel point must lie in the open unit disk");
    return std::pow(1.0 - m, -(alpha + 2.0));
}

cdouble kernel_eval(cdouble a, cdouble z, double alpha) {
    require_alpha(alpha);
    if (std::abs(a) >= 1.0 || std::abs(z) >= 1.0)
        throw domain_error("kernel arguments must lie in the open unit disk");
    // 1 - conj(a) z has positive real part on the bidisk, so the principal
    // power is the analytic branch.
    return std::pow(cdouble(1.0, 0.0) - std::conj(a) * z, -(alpha + 2.0));
}

std::vector<cdouble> kernel_coords(cdouble a, double alpha, int n) {
    require_alpha(alpha);
    if (std::abs(a) >= 1.0) throw domain_error("kernel point must lie in the open unit disk");
    if (n < 0) throw domain_error("coordinate count must be >= 0");
    std::vector<cdouble> c(static_cast<std::size_t>(n) + 1);
    cdouble p = 1.0;
    const cdouble ca = std::conj(a);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = p * std::exp(-0.5 * log_weight(k, alpha));
        p *= ca;
    }
    return c;
}

double kernel_tail_bound(double rho, double alpha, int N) {
    require_alpha(alpha);
    if (!(rho >= 0.0 && rho < 1.0)) throw domain_error("tail bound needs 0 <= rho < 1");
    if (N < 0) throw domain_error("tail bound needs N >= 0");
    if (rho == 0.0) return 0.0;
    // Terms t_k = rho^k / w_k.  The ratio t_{k+1}/t_k = rho (k+2+alpha)/(k+1)
    // decreases toward rho, so past any k with ratio <= q < 1 the tail is
    // dominated by a geometric series.
    const double q = 0.5 * (1.0 + rho);
    int k = N + 1;
    double t = std::exp(static_cast<double>(k) * std::log(rho) - log_weight(k, alpha));
    double sum = 0.0;
    for (;;) {
        const double ratio = rho * (k + 2.0 + alpha) / (k + 1.0);
        if (ratio <= q) return sum + t / (1.0 - ratio);
        sum += t;
        t *= ratio;
        ++k;
    }
}

double harmonic(int n) {
    if (n < 0) throw domain_error("harmonic number index must be >= 0");
    double h = 0.0;
    for (int j = 1; j <= n; ++j) h += 1.0 / j;
    return h;
}

double tail_quotient_bound(int n, double alpha) {
    require_alpha(alpha);
    if (n < 0) throw domain_error("tail quotient bound needs n >= 0");
    return std::exp((alpha + 1.0) * harmonic(n));
}

DivideResult divide_by_zn(const std::vector<cdouble>& coeffs, int n, double alpha, double tol) {
    require_alpha(alpha);
    if (n < 0) throw domain_error("divide_by_zn needs n >= 0");
    if (coeffs.size() < static_cast<std::size_t>(n))
        throw precondition_error("divide_by_zn: fewer coefficients than the requested order");
    for (int k = 0; k < n; ++k)
        if (std::abs(coeffs[static_cast<std::size_t>(k)]) > tol)
            throw precondition_error("divide_by_zn: coefficient " + std::to_string(k) +
                                     " is nonzero below the requested order");
    const double nf = norm(coeffs, alpha);
    if (nf == 0.0) throw precondition_error("divide_by_zn: zero function");

    DivideResult out;
    out.quotient.assign(coeffs.begin() + n, coeffs.end());
    out.ratio = norm(out.quotient, alpha) / nf;
    out.bound = std::sqrt(tail_quotient_bound(n, alpha));
    return out;
}

} // namespace apx
