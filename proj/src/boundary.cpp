#include "apxnum/boundary.hpp"

#include "apxnum/errors.hpp"
#include "mp_linalg.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace apx {

namespace {

constexpr double kPi = std::numbers::pi;

using mpf = boost::multiprecision::mpfr_float;

struct precision_guard {
    unsigned saved;
    explicit precision_guard(int digits10) : saved(mpf::default_precision()) {
        mpf::default_precision(static_cast<unsigned>(digits10));
    }
    ~precision_guard() { mpf::default_precision(saved); }
};

double chi_on_axis(const SevilleParams& p, double x) {
    const double m = (p.rho - x) / (1.0 - p.rho * x);
    return p.eps * std::log((1.0 + m) / (1.0 - m));
}

// the double fields of SevilleParams carry ~16 digits; everything feeding the
// extended-precision quadrature is recomputed in mp from the exact double r
struct MpSeville {
    mpf r, rho, eps, s, pi;
};

MpSeville mp_params(double r) {
    MpSeville q;
    q.pi = 4 * atan(mpf(1));
    q.r = r;
    q.rho = q.r / (1 + sqrt(1 - q.r * q.r));
    q.eps = q.pi / log((1 + q.rho) / (1 - q.rho));
    q.s = exp(-q.eps * q.pi / 2);
    return q;
}

// -chi'(x): rational in x, positive on [0, r]
mpf density(const MpSeville& q, const mpf& x) {
    const mpf den = 1 - q.rho * x;
    const mpf m = (q.rho - x) / den;
    return 2 * q.eps * (1 - q.rho * q.rho) / (den * den * (1 - m * m));
}

// (1/2pi) int_0^r x^k density(x) dx for k = 0..pmax, tanh-sinh at spacing
// tmax/2^level
std::vector<mpf> moments_at_level(const MpSeville& q, int pmax, int level,
                                  const mpf& tmax) {
    const mpf h = tmax / pow(mpf(2), level);
    const long jmax = static_cast<long>(ceil(tmax / h).convert_to<double>());
    const mpf half = q.r / 2;
    std::vector<mpf> acc(static_cast<std::size_t>(pmax) + 1, mpf(0));
    for (long j = -jmax; j <= jmax; ++j) {
        const mpf t = h * j;
        const mpf u = q.pi / 2 * sinh(t);
        const mpf ch = cosh(u);
        const mpf x = half * (1 + tanh(u));
        if (x <= 0 || x >= q.r) continue;
        const mpf w = half * (q.pi / 2) * cosh(t) / (ch * ch);
        mpf term = w * density(q, x);
        for (int k = 0; k <= pmax; ++k) {
            acc[static_cast<std::size_t>(k)] += term;
            term *= x;
        }
    }
    const mpf norm = h / (2 * q.pi);
    for (auto& v : acc) v *= norm;
    return acc;
}

// doubles the node count until successive levels agree to tol; hands back the
// last two levels so the caller can certify against quadrature noise
void mp_moments(const MpSeville& q, int pmax, int digits10,
                std::vector<mpf>& fine, std::vector<mpf>& coarse) {
    const mpf tol = pow(mpf(10), -(digits10 - 10));
    const mpf tmax = asinh((digits10 + 15) * log(mpf(10)) / q.pi);
    coarse = moments_at_level(q, pmax, 5, tmax);
    for (int level = 6; level <= 12; ++level) {
        fine = moments_at_level(q, pmax, level, tmax);
        mpf worst(0);
        for (std::size_t k = 0; k < fine.size(); ++k) {
            const mpf scale = abs(fine[k]) > 0 ? abs(fine[k]) : mpf(1);
            worst = std::max(worst, mpf(abs(fine[k] - coarse[k]) / scale));
        }
        if (worst <= tol) return;
        if (level < 12) coarse = fine;
    }
    throw numerical_error("moment quadrature did not settle",
                          coarse[0].convert_to<double>(),
                          fine[0].convert_to<double>());
}

std::vector<mpf> scaled_moment_eigs(const std::vector<mpf>& m, double alpha,
                                    int N, int digits10) {
    const std::size_t dim = static_cast<std::size_t>(N) + 1;
    std::vector<mpf> sw(dim);
    mpf w(1);
    const mpf a(alpha);
    for (std::size_t k = 0; k < dim; ++k) {
        sw[k] = sqrt(w);
        w *= (static_cast<int>(k) + 1) / (mpf(static_cast<int>(k)) + 2 + a);
    }
    mp::Dense<mpf> g(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            g(j, k) = m[j + k] / (sw[j] * sw[k]);
    const mpf tol = pow(mpf(10), -(digits10 - 2));
    return mp::jacobi_eig(std::move(g), tol);
}

} // namespace

SevilleParams seville_params(double r) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("radius must lie in (0, 1)");
    SevilleParams p;
    p.r = r;
    p.rho = r / (1.0 + std::sqrt(1.0 - r * r));
    p.eps = kPi / std::log((1.0 + p.rho) / (1.0 - p.rho));
    p.s = std::exp(-p.eps * kPi / 2.0);
    return p;
}

cdouble seville_chi(const SevilleParams& p, cdouble z) {
    const cdouble m = (p.rho - z) / (1.0 - p.rho * z);
    // (1+m)/(1-m) lands in the right half-plane for |m| < 1, so the
    // principal log never crosses its cut
    return p.eps * std::log((1.0 + m) / (1.0 - m));
}

cdouble seville_f(const SevilleParams& p, cdouble z) {
    return p.s * std::exp(cdouble(0.0, 1.0) * seville_chi(p, z));
}

double seville_x_of_theta(const SevilleParams& p, double theta) {
    if (!(theta >= -kPi && theta <= kPi))
        throw domain_error("angle must lie in [-pi, pi]");
    double lo = 0.0, hi = p.r; // chi decreases from pi to -pi
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (chi_on_axis(p, mid) > theta)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> seville_moments(const SevilleParams& p, int pmax) {
    if (pmax < 0) throw domain_error("moment order must be >= 0");
    constexpr int digits10 = 60;
    precision_guard guard(digits10);
    const MpSeville q = mp_params(p.r);
    std::vector<mpf> fine, coarse;
    mp_moments(q, pmax, digits10, fine, coarse);
    std::vector<double> out(fine.size());
    for (std::size_t k = 0; k < fine.size(); ++k)
        out[k] = fine[k].convert_to<double>();
    return out;
}

std::vector<double> seville_moments_bisect(const SevilleParams& p, int pmax,
                                           int theta_nodes) {
    if (pmax < 0) throw domain_error("moment order must be >= 0");
    if (theta_nodes < 1) throw domain_error("need at least one angle node");
    std::vector<double> acc(static_cast<std::size_t>(pmax) + 1, 0.0);
    for (int i = 0; i < theta_nodes; ++i) {
        const double theta = -kPi + (i + 0.5) * 2.0 * kPi / theta_nodes;
        const double x = seville_x_of_theta(p, theta);
        double term = 1.0;
        for (int k = 0; k <= pmax; ++k) {
            acc[static_cast<std::size_t>(k)] += term;
            term *= x;
        }
    }
    for (auto& v : acc) v /= theta_nodes;
    return acc;
}

RestrictionSpectrum restriction_spectrum(const SevilleParams& p, double alpha,
                                         int N, int digits10) {
    if (N < 0 || N > 200)
        throw domain_error("moment matrices beyond N = 200 are not supported");
    if (digits10 < 20) throw domain_error("extended precision below 20 digits is pointless");
    if (alpha < -1.0) throw domain_error("weight exponent must be >= -1");

    precision_guard guard(digits10);
    const MpSeville q = mp_params(p.r);
    std::vector<mpf> fine, coarse;
    mp_moments(q, 2 * N, digits10, fine, coarse);

    const auto ev = scaled_moment_eigs(fine, alpha, N, digits10);
    const auto ev_check = scaled_moment_eigs(coarse, alpha, N, digits10);

    RestrictionSpectrum spec;
    spec.params = p;
    spec.alpha = alpha;
    spec.digits10 = digits10;

    const mpf lead = ev.front() > 0 ? ev.front() : mpf(1);
    const mpf floor_ev = lead * pow(mpf(10), -(digits10 - 10));
    spec.precision_floor = floor_ev.convert_to<double>();

    const std::size_t dim = ev.size();
    spec.values.resize(dim);
    spec.floors.resize(dim);
    spec.certified.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const mpf lam = ev[i] > 0 ? ev[i] : mpf(0);
        spec.values[i] = sqrt(lam).convert_to<double>();
        const int n = static_cast<int>(i) + 1;
        spec.floors[i] = (pow(q.s, n) / sqrt(mpf(n))).convert_to<double>();
        bool ok = ev[i] > floor_ev;
        if (ok) {
            const mpf agree = abs(ev[i] - ev_check[i]) / ev[i];
            ok = agree < 1e-6;
        }
        spec.certified[i] = ok;
    }
    return spec;
}

} // namespace apx
