#include "apxnum/carleson.hpp"

#include "apxnum/errors.hpp"
#include "apxnum/quadrature.hpp"
#include "apxnum/rng.hpp"
#include "symbol_node.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace apx {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_h_grid(const std::vector<double>& h) {
    if (h.empty()) throw domain_error("window grid is empty");
    for (double v : h)
        if (!(v > 0.0 && v <= 1.0)) throw domain_error("window sizes must lie in (0, 1]");
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        if (h[i + 1] >= h[i]) throw domain_error("window grid must decrease strictly");
}

double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      int iters = 90) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2.0;
}

TernaryResult minimize_over(const std::function<double(double)>& f, double h_lo,
                            double h_hi) {
    const int grid_n = 512;
    const double llo = std::log(h_lo), lhi = std::log(h_hi);
    int best = 0;
    double best_f = std::numeric_limits<double>::infinity(), best_h = h_lo;
    for (int i = 0; i < grid_n; ++i) {
        const double h = std::exp(llo + (lhi - llo) * i / (grid_n - 1));
        const double v = f(h);
        if (v < best_f) {
            best_f = v;
            best = i;
            best_h = h;
        }
    }
    TernaryResult r;
    r.boundary_warning = (best == 0 || best == grid_n - 1);
    const double left =
        std::exp(llo + (lhi - llo) * std::max(best - 1, 0) / (grid_n - 1));
    const double right =
        std::exp(llo + (lhi - llo) * std::min(best + 1, grid_n - 1) / (grid_n - 1));
    const double h_star = r.boundary_warning ? best_h : golden_section(f, left, right);
    const double v_star = f(h_star);
    if (v_star <= best_f) {
        r.value = v_star;
        r.h_min = h_star;
    } else {
        r.value = best_f;
        r.h_min = best_h;
    }
    return r;
}

} // namespace

bool window_contains(cdouble z, double xi_angle, double h) {
    if (!(h > 0.0 && h <= 1.0)) throw domain_error("window size must lie in (0, 1]");
    if (std::abs(z) < 1.0 - h) return false;
    const double a = std::arg(z * std::polar(1.0, -xi_angle));
    return std::abs(a) <= kPi * h;
}

std::vector<double> default_h_grid() {
    const int n = 25;
    std::vector<double> h(n);
    const double llo = std::log(0.5), lhi = std::log(1e-3);
    for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * i / (n - 1));
    h.front() = 0.5;
    h.back() = 1e-3;
    return h;
}

CarlesonProfile pushforward_profile(const Symbol& phi, double alpha,
                                    std::vector<double> h_grid,
                                    const ProfileOptions& opt) {
    validate_h_grid(h_grid);
    if (alpha < -1.0) throw domain_error("weight exponent must be >= -1");
    if (opt.samples < 1) throw domain_error("need at least one sample");
    if (opt.angular_bins < 8) throw domain_error("need at least 8 angular bins");
    if (opt.streams < 1) throw domain_error("need at least one stream");

    const int B = opt.angular_bins;
    std::vector<std::vector<double>> bins(static_cast<std::size_t>(B));
    const std::uint64_t M = opt.samples;

    for (int s = 0; s < opt.streams; ++s) {
        CounterRng rng(opt.seed, static_cast<std::uint64_t>(s));
        std::uint64_t count = M / static_cast<std::uint64_t>(opt.streams);
        if (static_cast<std::uint64_t>(s) < M % static_cast<std::uint64_t>(opt.streams))
            ++count;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double t = rng.uniform(-kPi, kPi);
            double r;
            if (alpha == -1.0) {
                r = opt.boundary_radius;
            } else {
                const double u = rng.uniform();
                r = std::sqrt(1.0 - std::pow(1.0 - u, 1.0 / (alpha + 1.0)));
            }
            const cdouble w = phi.eval(r * std::polar(1.0, t));
            const double ang = std::arg(w);
            const int idx = std::min(
                static_cast<int>((ang + kPi) / (2.0 * kPi) * B), B - 1);
            bins[static_cast<std::size_t>(idx)].push_back(1.0 - std::abs(w));
        }
    }
    for (auto& b : bins) std::sort(b.begin(), b.end());

    CarlesonProfile p;
    p.h_grid = std::move(h_grid);
    p.sample_count = M;
    p.seed = opt.seed;
    p.alpha = alpha;
    p.angular_bins = B;

    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(B));
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(B) + 1);
    for (double h : p.h_grid) {
        for (int b = 0; b < B; ++b) {
            const auto& v = bins[static_cast<std::size_t>(b)];
            cnt[static_cast<std::size_t>(b)] = static_cast<std::uint64_t>(
                std::upper_bound(v.begin(), v.end(), h) - v.begin());
        }
        prefix[0] = 0;
        for (int b = 0; b < B; ++b) prefix[static_cast<std::size_t>(b) + 1] =
            prefix[static_cast<std::size_t>(b)] + cnt[static_cast<std::size_t>(b)];
        const int halfw = std::max(1, static_cast<int>(std::lround(h * B / 2.0)));
        const int width = std::min(2 * halfw + 1, B);
        std::uint64_t best = 0;
        for (int b = 0; b < B; ++b) {
            std::uint64_t sum;
            if (b + width <= B) {
                sum = prefix[static_cast<std::size_t>(b + width)] -
                      prefix[static_cast<std::size_t>(b)];
            } else {
                sum = prefix[static_cast<std::size_t>(B)] -
                      prefix[static_cast<std::size_t>(b)] +
                      prefix[static_cast<std::size_t>(b + width - B)];
            }
            best = std::max(best, sum);
        }
        const double rho = static_cast<double>(best) / static_cast<double>(M);
        p.rho_hat.push_back(rho);
        p.std_err.push_back(std::sqrt(rho * (1.0 - rho) / static_cast<double>(M)));
    }
    return p;
}

double profile_slope(const CarlesonProfile& p, double h_lo, double h_hi) {
    double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < p.h_grid.size(); ++i) {
        const double h = p.h_grid[i];
        if (h < h_lo * (1.0 - 1e-12) || h > h_hi * (1.0 + 1e-12)) continue;
        if (p.rho_hat[i] <= 0.0) continue;
        // variance of log rho_hat scales like 1/count
        const double w = p.rho_hat[i] * static_cast<double>(p.sample_count);
        const double x = std::log(h), y = std::log(p.rho_hat[i]);
        sw += w;
        swx += w * x;
        swy += w * y;
        swxx += w * x * x;
        swxy += w * x * y;
        ++used;
    }
    if (used < 2) throw insufficient_data("profile slope needs two occupied grid points "
                                          "inside the fit range");
    const double denom = sw * swxx - swx * swx;
    if (denom == 0.0) throw domain_error("degenerate abscissae in the slope fit");
    return (sw * swxy - swx * swy) / denom;
}

double embedding_norm_shape(const CarlesonProfile& p) {
    double best = 0.0;
    for (std::size_t i = 0; i < p.h_grid.size(); ++i)
        best = std::max(best,
                        std::sqrt(p.rho_hat[i] / std::pow(p.h_grid[i], 2.0 + p.alpha)));
    return best;
}

TernaryResult ternary_upper_bound(int n, double alpha,
                                  const std::function<double(double)>& rho) {
    if (n < 1) throw domain_error("index must be >= 1");
    const double pre = std::pow(static_cast<double>(n), (alpha + 1.0) / 2.0);
    const auto f = [&](double h) {
        return pre * std::pow(1.0 - h, n) +
               std::sqrt(std::max(rho(h), 0.0) / std::pow(h, 2.0 + alpha));
    };
    return minimize_over(f, 1e-6, 1.0 - 1e-6);
}

TernaryResult ternary_upper_bound(int n, const CarlesonProfile& p) {
    if (p.h_grid.size() < 2)
        throw insufficient_data("profile interpolation needs two grid points");
    // piecewise-linear rho in log h, restricted to the measured range
    std::vector<double> lx(p.h_grid.size()), ry(p.h_grid.size());
    for (std::size_t i = 0; i < p.h_grid.size(); ++i) {
        lx[i] = std::log(p.h_grid[p.h_grid.size() - 1 - i]); // increasing
        ry[i] = p.rho_hat[p.h_grid.size() - 1 - i];
    }
    const auto rho = [&](double h) {
        const double x = std::log(h);
        auto it = std::lower_bound(lx.begin(), lx.end(), x);
        if (it == lx.begin()) return ry.front();
        if (it == lx.end()) return ry.back();
        const std::size_t j = static_cast<std::size_t>(it - lx.begin());
        const double t = (x - lx[j - 1]) / (lx[j] - lx[j - 1]);
        return (1.0 - t) * ry[j - 1] + t * ry[j];
    };
    const double pre = std::pow(static_cast<double>(n), (p.alpha + 1.0) / 2.0);
    const auto f = [&](double h) {
        return pre * std::pow(1.0 - h, n) +
               std::sqrt(std::max(rho(h), 0.0) / std::pow(h, 2.0 + p.alpha));
    };
    return minimize_over(f, p.h_grid.back(), p.h_grid.front());
}

double supper_bound(int n, double alpha, const std::function<double(double)>& A) {
    if (n < 1) throw domain_error("index must be >= 1");
    const double target = 1.0 / (2.0 * n);
    if (!(A(1.0) >= target))
        throw domain_error("window profile never reaches 1/(2n) on (0, 1]");
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2.0;
        if (A(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double x = (lo + hi) / 2.0;
    return std::pow(static_cast<double>(n), (alpha + 1.0) / 2.0) * std::exp(-n * x);
}

double imprecise_bound(int n, double alpha, double beta_exp) {
    if (n < 2) throw domain_error("bound needs n >= 2");
    if (!(beta_exp > 1.0)) throw domain_error("decay exponent must exceed 1");
    if (!(alpha >= -1.0)) throw domain_error("weight exponent must be >= -1");
    const double gamma = (beta_exp - 1.0) * (alpha + 2.0) / 2.0;
    return std::pow(std::log(static_cast<double>(n)) / n, gamma);
}

double schatten_threshold(double alpha, double beta_exp) {
    if (!(beta_exp > 1.0)) throw domain_error("decay exponent must exceed 1");
    if (!(alpha > -2.0)) throw domain_error("weight exponent must exceed -2");
    return 2.0 / ((beta_exp - 1.0) * (alpha + 2.0));
}

namespace {

cdouble half_plane_map(cdouble z) { return (1.0 - z) / (1.0 + z); } // involution

cdouble inverse_unchecked(const Symbol& phi, cdouble w) {
    const SymNode& n = phi.node();
    switch (n.kind) {
        case SymbolKind::identity:
            return w;
        case SymbolKind::shrink:
            return w / n.p1;
        case SymbolKind::affine:
            return (w - n.p1) / n.p2;
        case SymbolKind::mobius:
            return (n.p1 - w) / (1.0 - std::conj(n.p1) * w);
        case SymbolKind::lens:
            return half_plane_map(std::pow(half_plane_map(w), 1.0 / n.theta));
        case SymbolKind::blaschke_power:
            if (n.m != 1)
                throw domain_error("blaschke powers above 1 are not univalent");
            return (n.p1 - w) / (1.0 - std::conj(n.p1) * w);
        case SymbolKind::conjugated: {
            const cdouble u = (n.p2 - w) / (1.0 - std::conj(n.p2) * w);
            const cdouble v = inverse_unchecked(n.sub[0], u);
            return (n.p1 - v) / (1.0 - std::conj(n.p1) * v);
        }
        case SymbolKind::composed: {
            cdouble v = w; // outermost part peels off first
            for (const Symbol& part : n.sub) v = inverse_unchecked(part, v);
            return v;
        }
    }
    throw domain_error("unknown symbol kind");
}

} // namespace

cdouble symbol_inverse(const Symbol& phi, cdouble w) {
    if (std::abs(w) >= 1.0) throw domain_error("target must lie inside the disk");
    const cdouble z = inverse_unchecked(phi, w);
    if (!(std::abs(z) < 1.0))
        throw domain_error("target is not in the image of the symbol");
    const cdouble back = phi.eval(z);
    if (std::abs(back - w) > 1e-9 * std::max(1.0, std::abs(w)))
        throw numerical_error("inverse verification failed", std::abs(back),
                              std::abs(w));
    return z;
}

double nevanlinna(const Symbol& phi, cdouble w, double alpha) {
    if (alpha < -1.0) throw domain_error("weight exponent must be >= -1");
    const cdouble z = symbol_inverse(phi, w);
    const double az = std::abs(z);
    if (az == 0.0)
        throw domain_error("counting function diverges at the image of the origin");
    return std::pow(std::log(1.0 / az), alpha + 2.0);
}

double nevanlinna_partial(const Symbol& phi, double r, cdouble w) {
    if (!(r > 0.0 && r <= 1.0)) throw domain_error("radius must lie in (0, 1]");
    const cdouble z = symbol_inverse(phi, w);
    const double az = std::abs(z);
    if (az == 0.0)
        throw domain_error("counting function diverges at the image of the origin");
    return std::max(0.0, std::log(r / az));
}

double nevanlinna_integral_check(const Symbol& phi, cdouble w, double alpha) {
    if (!(alpha > -1.0))
        throw domain_error("the radial prefactor degenerates at alpha = -1");
    const cdouble z = symbol_inverse(phi, w);
    const double az = std::abs(z);
    if (az == 0.0)
        throw domain_error("counting function diverges at the image of the origin");
    const double L = std::log(1.0 / az);
    // substitute r = exp(-L t): the weight [log 1/r]^alpha dr/r becomes
    // L^(alpha+1) t^alpha dt on [0, 1], handled by the Jacobi rule after the
    // flip t -> 1-u
    const Quad1D q = radial_bergman(64, alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        const double t = 1.0 - q.x[i];
        acc += q.w[i] * nevanlinna_partial(phi, std::exp(-L * t), w);
    }
    return (alpha + 2.0) * std::pow(L, alpha + 1.0) * acc;
}

} // namespace apx
