#include "apxnum/shift_lab.hpp"

#include "apxnum/bergman.hpp"
#include "apxnum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace apx {

namespace {

constexpr double kPi = std::numbers::pi;

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] >= v[i]) return false;
    return true;
}

} // namespace

std::vector<double> logconvexify(const std::vector<double>& eps) {
    if (eps.size() < 2) throw domain_error("need at least two floor values");
    for (double e : eps)
        if (!(e > 0.0)) throw domain_error("floor values must be positive");
    std::vector<double> work = eps;
    if (!strictly_decreasing(work))
        for (std::size_t i = 0; i < work.size(); ++i)
            work[i] += 1.0 / static_cast<double>(i + 1);
    std::vector<double> delta(work.size());
    delta[0] = work[0];
    delta[1] = work[1];
    for (std::size_t n = 2; n < work.size(); ++n)
        delta[n] = std::max(work[n], delta[n - 1] * delta[n - 1] / delta[n - 2]);
    return delta;
}

CarlesonConstants carleson_constant(const std::vector<cdouble>& points) {
    if (points.empty()) throw domain_error("need at least one point");
    for (const cdouble& z : points)
        if (!(std::abs(z) < 1.0)) throw domain_error("points must lie inside the disk");
    CarlesonConstants c;
    c.per_point.resize(points.size(), 1.0);
    for (std::size_t n = 0; n < points.size(); ++n) {
        double p = 1.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == n) continue;
            p *= pseudo_hyperbolic(points[n], points[j]);
        }
        c.per_point[n] = p;
        c.delta = std::min(c.delta, p);
    }
    if (c.delta == 0.0) throw domain_error("separation constant vanishes: the "
                                           "points are not distinct");
    return c;
}

InterpolationBounds interpolation_constant_bounds(double delta, double lambda) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw domain_error("separation constant must lie in (0, 1]");
    if (!(lambda > 0.0)) throw domain_error("lambda must be positive");
    InterpolationBounds b;
    b.lambda = lambda;
    b.lower = 1.0 / delta;
    b.upper = lambda * (1.0 + std::log(1.0 / delta)) / delta;
    return b;
}

double hadlac_floor(double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw domain_error("ratio must lie in (0, 1)");
    return std::exp(-(kPi * kPi / 2.0) / (1.0 - sigma));
}

double hoffman_product(double sigma, int terms) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw domain_error("ratio must lie in (0, 1)");
    if (terms < 1) throw domain_error("need at least one factor");
    double p = 1.0;
    double sj = 1.0;
    for (int j = 1; j <= terms; ++j) {
        sj *= sigma;
        const double f = (1.0 - sj) / (1.0 + sj);
        p *= f * f;
    }
    return p;
}

double boue_floor(double sigma, double theta) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw domain_error("ratio must lie in (0, 1)");
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("exponent must lie in (0, 1)");
    const double a_theta = kPi * kPi / (std::pow(2.0, theta) * theta);
    return std::exp(-a_theta / (1.0 - sigma));
}

double boue_sigma_prime(double sigma, double theta) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw domain_error("ratio must lie in (0, 1)");
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("exponent must lie in (0, 1)");
    return 1.0 - (theta / 2.0) * std::pow(2.0, theta) * (1.0 - sigma);
}

std::vector<double> RadialSequence::ratios() const {
    std::vector<double> q;
    q.reserve(points.size());
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        q.push_back((1.0 - points[i + 1]) / (1.0 - points[i]));
    return q;
}

double RadialSequence::max_ratio() const {
    double m = 0.0;
    for (double q : ratios()) m = std::max(m, q);
    return m;
}

RadialSequence make_radial_sequence(std::vector<double> points) {
    if (points.size() < 2) throw domain_error("need at least two radii");
    for (double r : points)
        if (!(r > 0.0 && r < 1.0)) throw domain_error("radii must lie in (0, 1)");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i + 1] <= points[i])
            throw domain_error("radii must increase strictly");
    RadialSequence s;
    s.points = std::move(points);
    return s;
}

ShiftModel shift_from_sequence(const RadialSequence& r, double alpha) {
    std::ostringstream os;
    os << "z - " << r.points.front();
    const double r1 = r.points.front();
    return shift_from_sequence(
        r, alpha, [r1](double x) { return cdouble(x - r1, 0.0); }, os.str());
}

ShiftModel shift_from_sequence(const RadialSequence& r, double alpha,
                               const std::function<cdouble(double)>& h,
                               const std::string& h_descriptor) {
    if (alpha < -1.0) throw domain_error("weight exponent must be >= -1");
    if (std::abs(h(r.points.front())) > 1e-12)
        throw precondition_error("multiplier must vanish at the first radius");
    ShiftModel m;
    m.alpha = alpha;
    m.h_descriptor = h_descriptor;
    m.source = r;
    const double half = (alpha + 2.0) / 2.0;
    for (std::size_t n = 0; n + 1 < r.points.size(); ++n) {
        const double rn = r.points[n], rn1 = r.points[n + 1];
        const double kernel_ratio =
            std::pow((1.0 - rn1 * rn1) / (1.0 - rn * rn), half);
        m.weights.push_back(std::abs(h(rn1)) * kernel_ratio);
    }
    return m;
}

Eigen::MatrixXd shift_matrix(const std::vector<double>& weights) {
    const Eigen::Index m = static_cast<Eigen::Index>(weights.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (Eigen::Index i = 0; i < m; ++i)
        b(i, i + 1) = weights[static_cast<std::size_t>(i)];
    return b;
}

double shift_singular(const ShiftModel& m, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > m.weights.size() + 1)
        throw domain_error("singular value index out of range");
    std::vector<double> s = m.weights;
    std::sort(s.rbegin(), s.rend());
    s.push_back(0.0); // the shift kills one basis vector
    return s[static_cast<std::size_t>(n - 1)];
}

bool minoration_check(const std::vector<double>& weights,
                      const std::vector<double>& eps) {
    if (eps.empty() || weights.empty()) return false;
    for (std::size_t i = 0; i + 1 < eps.size(); ++i)
        if (eps[i + 1] > eps[i]) return false; // premise: eps nonincreasing
    const std::size_t k = std::min(weights.size(), eps.size());
    for (std::size_t i = 0; i < k; ++i)
        if (weights[i] < eps[i]) return false; // premise: |w_n| >= eps_n
    if (eps.size() > weights.size()) return false; // nothing dominates the tail
    std::vector<double> s = weights;
    std::sort(s.rbegin(), s.rend());
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (s[i] < eps[i]) return false; // conclusion a_n >= eps_n
    return true;
}

PipelineReport slow_decay_pipeline(const std::vector<double>& eps, double C0,
                                   int M, double alpha) {
    if (M < 3) throw domain_error("need at least three radii");
    if (!(C0 > 0.0)) throw domain_error("rate constant must be positive");
    if (eps.size() + 1 < static_cast<std::size_t>(M))
        throw domain_error("floor sequence too short for the requested length");

    PipelineReport rep;
    rep.eps = eps;
    rep.C0 = C0;
    rep.delta_seq = logconvexify(eps);
    if (rep.delta_seq.front() >= 1.0) {
        const double scale = 2.0 * rep.delta_seq.front();
        for (double& d : rep.delta_seq) d /= scale;
        rep.normalized = true;
    }
    for (double d : rep.delta_seq)
        rep.A_n.push_back(std::log(1.0 / d) / C0);

    // gaps g_n = 1 - r_n collapse far below machine epsilon long before
    // n = M, so every downstream quantity is computed in gap space; the
    // stored points saturate to 1 and are for display only
    std::vector<double> gaps(static_cast<std::size_t>(M));
    gaps[0] = 0.5;
    for (int n = 1; n < M; ++n) {
        const double dd = rep.delta_seq[static_cast<std::size_t>(n - 1)];
        gaps[static_cast<std::size_t>(n)] =
            gaps[static_cast<std::size_t>(n - 1)] * dd * dd;
        if (gaps[static_cast<std::size_t>(n)] <= 0.0)
            throw domain_error("radial gaps underflow double precision");
    }

    rep.model.alpha = alpha;
    {
        std::ostringstream os;
        os << "z - " << (1.0 - gaps[0]);
        rep.model.h_descriptor = os.str();
    }
    rep.model.source.points.resize(gaps.size());
    for (std::size_t n = 0; n < gaps.size(); ++n)
        rep.model.source.points[n] = 1.0 - gaps[n];

    const double half = (alpha + 2.0) / 2.0;
    rep.hayman_ok = true;
    for (std::size_t n = 0; n + 1 < gaps.size(); ++n) {
        const double gn = gaps[n], gn1 = gaps[n + 1];
        const double ratio = (gn1 / gn) * ((2.0 - gn1) / (2.0 - gn));
        if (gn1 / gn >= 1.0) rep.hayman_ok = false;
        // h(r_{n+1}) = r_{n+1} - r_1 = g_1 - g_{n+1}, exact in gap space
        rep.model.weights.push_back((gaps[0] - gn1) * std::pow(ratio, half));
    }

    rep.d = (gaps[0] - gaps[1]) * std::pow(2.0, -half);

    rep.weights_ok = true;
    for (std::size_t n = 0; n < rep.model.weights.size(); ++n)
        if (rep.model.weights[n] < rep.d * rep.delta_seq[n]) {
            rep.weights_ok = false;
            break;
        }

    rep.a_n = rep.model.weights;
    std::sort(rep.a_n.rbegin(), rep.a_n.rend());
    rep.a_n.push_back(0.0);

    std::vector<double> floor(rep.model.weights.size());
    for (std::size_t n = 0; n < floor.size(); ++n)
        floor[n] = rep.d * rep.delta_seq[n];
    rep.minoration_ok = minoration_check(rep.model.weights, floor);

    // pseudo-hyperbolic separation in gap space:
    // rho(r_i, r_j) = |g_i - g_j| / (g_i + g_j - g_i g_j)
    double delta_c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < gaps.size(); ++j) {
            if (j == i) continue;
            p *= std::abs(gaps[i] - gaps[j]) /
                 (gaps[i] + gaps[j] - gaps[i] * gaps[j]);
        }
        delta_c = std::min(delta_c, p);
    }
    if (!(delta_c > 0.0))
        throw domain_error("separation products underflow double precision");
    rep.interp_upper = interpolation_constant_bounds(delta_c).upper;
    rep.floor_constant = rep.d / (2.0 * rep.interp_upper * rep.interp_upper);
    return rep;
}

double OmegaDomain::A(double t) const {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return t * A_seq.front();
    // nodes at e^{n-1}; linear between them, final slope extended outward
    double lo = 1.0;
    for (std::size_t n = 0; n + 1 < A_seq.size(); ++n) {
        const double hi = lo * std::numbers::e;
        if (t <= hi)
            return A_seq[n] + (A_seq[n + 1] - A_seq[n]) * (t - lo) / (hi - lo);
        lo = hi;
    }
    const std::size_t last = A_seq.size() - 1;
    const double prev = lo / std::numbers::e;
    const double slope = (A_seq[last] - A_seq[last - 1]) / (lo - prev);
    return A_seq[last] + slope * (t - lo);
}

double OmegaDomain::psi(double t) const {
    const double x = std::abs(t);
    if (x <= 1.0) return K * (1.0 + x);
    return x / A(x);
}

bool OmegaDomain::contains(cdouble w) const {
    return std::abs(w.imag()) < psi(w.real());
}

OmegaDomain make_omega(std::vector<double> A_seq) {
    if (A_seq.size() < 2) throw domain_error("need at least two profile values");
    for (double a : A_seq)
        if (!(a > 0.0)) throw domain_error("profile values must be positive");
    for (std::size_t i = 0; i + 1 < A_seq.size(); ++i)
        if (A_seq[i + 1] <= A_seq[i])
            throw domain_error("profile must increase strictly");
    // concavity: chord slopes must not increase, first chord measured
    // against the linear ramp on (0, 1)
    double prev_slope = A_seq[0];
    double lo = 1.0;
    for (std::size_t i = 0; i + 1 < A_seq.size(); ++i) {
        const double hi = lo * std::numbers::e;
        const double slope = (A_seq[i + 1] - A_seq[i]) / (hi - lo);
        if (slope > prev_slope * (1.0 + 1e-12))
            throw domain_error("profile must be concave across the nodes");
        prev_slope = slope;
        lo = hi;
    }
    OmegaDomain d;
    d.A_seq = std::move(A_seq);
    d.K = 0.5 / d.A_seq.front();
    return d;
}

double hayman_rect_bound(double a1, double a2, double b_or_c, RectBound kind) {
    if (!(a2 > a1)) throw domain_error("interval must be ordered");
    if (!(b_or_c > 0.0)) throw domain_error("strip width must be positive");
    const double run = (kPi / (4.0 * b_or_c)) * (a2 - a1);
    return kind == RectBound::upper ? run + kPi / 2.0 : run - kPi / 2.0;
}

PoincareSandwich poincare_sandwich(double a, double b) {
    if (!(a >= 0.0 && a <= b && b < 1.0))
        throw domain_error("need 0 <= a <= b < 1");
    PoincareSandwich s;
    s.lo = std::exp(-2.0 * hyperbolic_distance(cdouble(a, 0.0), cdouble(b, 0.0)));
    s.mid = (1.0 - b) / (1.0 - a);
    s.hi = 2.0 * s.lo;
    return s;
}

namespace {

LensLowerBound lens_bound_at(double theta, int n, double sigma) {
    LensLowerBound b;
    b.a_theta = kPi * kPi / theta;
    b.lambda = std::sqrt(2.0 * b.a_theta / (1.0 - theta));
    b.b_theta = kPi * std::sqrt(2.0 * (1.0 - theta) / theta);
    b.sigma = sigma;
    // the separation floors underflow to 0 as sigma -> 1; the bound then
    // degenerates honestly to floor 0 instead of rejecting
    const double du = hadlac_floor(sigma);
    const double dv = boue_floor(sigma, theta);
    const double inf = std::numeric_limits<double>::infinity();
    b.C_u = du > 0.0 ? interpolation_constant_bounds(du).upper : inf;
    b.C_v = dv > 0.0 ? interpolation_constant_bounds(dv).upper : inf;
    b.floor = (du > 0.0 && dv > 0.0)
                  ? 0.5 / (b.C_u * b.C_v) * std::pow(sigma, n * (1.0 - theta) / 2.0)
                  : 0.0;
    return b;
}

} // namespace

LensLowerBound lens_lower_bound(double theta, int n) {
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("exponent must lie in (0, 1)");
    if (n < 1) throw domain_error("index must be >= 1");
    const double a_theta = kPi * kPi / theta;
    const double lambda = std::sqrt(2.0 * a_theta / (1.0 - theta));
    const double sigma = 1.0 - lambda / std::sqrt(static_cast<double>(n));
    if (!(sigma > 0.0))
        throw domain_error("index too small: the tuned ratio is not positive yet");
    return lens_bound_at(theta, n, sigma);
}

LensLowerBound lens_lower_bound_best(double theta, int n) {
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("exponent must lie in (0, 1)");
    if (n < 1) throw domain_error("index must be >= 1");
    int arg = 500;
    double top = lens_bound_at(theta, n, 0.5).floor;
    for (int k = 1; k < 1000; ++k) {
        const double f = lens_bound_at(theta, n, k / 1000.0).floor;
        if (f > top) {
            top = f;
            arg = k;
        }
    }
    // golden-section polish between the grid neighbours of the argmax
    double lo = std::max(1, arg - 1) / 1000.0;
    double hi = std::min(999, arg + 1) / 1000.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = lens_bound_at(theta, n, x1).floor;
    double f2 = lens_bound_at(theta, n, x2).floor;
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = lens_bound_at(theta, n, x2).floor;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = lens_bound_at(theta, n, x1).floor;
        }
    }
    const double mid = 0.5 * (lo + hi);
    LensLowerBound refined = lens_bound_at(theta, n, mid);
    if (refined.floor < top) refined = lens_bound_at(theta, n, arg / 1000.0);
    return refined;
}

} // namespace apx
