#include "apxnum/spectra.hpp"

#include "apxnum/bergman.hpp"
#include "apxnum/errors.hpp"
#include "apxnum/precise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef APXNUM_HAVE_LAPACKE
#include <complex>
#ifndef lapack_complex_double
#define lapack_complex_double std::complex<double>
#endif
#ifndef lapack_complex_float
#define lapack_complex_float std::complex<float>
#endif
#include <lapacke.h>
#endif

namespace apx {

namespace {

std::vector<double> svd_double(const Eigen::MatrixXcd& m) {
    const auto r = m.rows(), c = m.cols();
    std::vector<double> sv(static_cast<std::size_t>(std::min(r, c)));
    if (sv.empty()) return sv;
#ifdef APXNUM_HAVE_LAPACKE
    Eigen::MatrixXcd work = m; // gesdd destroys its input
    const lapack_int info = LAPACKE_zgesdd(
        LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(r), static_cast<lapack_int>(c),
        work.data(), static_cast<lapack_int>(r), sv.data(), nullptr, 1, nullptr, 1);
    if (info == 0) return sv;
    // fall through to Eigen on a LAPACK convergence failure
#endif
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        sv[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    return sv;
}

std::vector<double> svd_double(const Eigen::MatrixXd& m) {
    const auto r = m.rows(), c = m.cols();
    std::vector<double> sv(static_cast<std::size_t>(std::min(r, c)));
    if (sv.empty()) return sv;
#ifdef APXNUM_HAVE_LAPACKE
    Eigen::MatrixXd work = m;
    const lapack_int info = LAPACKE_dgesdd(
        LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(r), static_cast<lapack_int>(c),
        work.data(), static_cast<lapack_int>(r), sv.data(), nullptr, 1, nullptr, 1);
    if (info == 0) return sv;
#endif
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        sv[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    return sv;
}

bool wants_escalation(const std::vector<double>& sv, Eigen::Index dim, Precision p) {
    if (p == Precision::extended) return true;
    if (p == Precision::double_only) return false;
    if (sv.empty() || dim > 257) return false;
    return sv.back() < 1e-12 * sv.front();
}

// Eigenvalues of a Hermitian matrix, descending.
Eigen::VectorXd hermitian_eigs(const Eigen::MatrixXcd& g) {
#ifdef APXNUM_HAVE_LAPACKE
    Eigen::MatrixXcd work = g;
    Eigen::VectorXd ev(g.rows());
    const lapack_int info =
        LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(g.rows()),
                       work.data(), static_cast<lapack_int>(g.rows()), ev.data());
    if (info == 0) return ev.reverse();
#endif
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().reverse();
}

// Hermitian complex to symmetric real: [[Re, -Im], [Im, Re]] doubles each
// eigenvalue's multiplicity.
std::vector<double> hermitian_eigs_precise(const Eigen::MatrixXcd& g, int digits10) {
    const Eigen::Index n = g.rows();
    Eigen::MatrixXd big(2 * n, 2 * n);
    big.topLeftCorner(n, n) = g.real();
    big.topRightCorner(n, n) = -g.imag();
    big.bottomLeftCorner(n, n) = g.imag();
    big.bottomRightCorner(n, n) = g.real();
    const std::vector<double> doubled = symmetric_eigenvalues_precise(big, digits10);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < doubled.size(); i += 2)
        out.push_back(0.5 * (doubled[i] + doubled[i + 1]));
    return out;
}

// Singular values of the truncation at degree N, by the selected route.
std::vector<double> spectrum_at(const Symbol& phi, double alpha, int N,
                                MatrixMethod method, const ApproxOptions& opt) {
    if (method == MatrixMethod::taylor) {
        const OperatorMatrix M = taylor_matrix(phi, alpha, N);
        return singular_values(M.entries, opt.precision, opt.digits10);
    }
    const OperatorMatrix G = gram_matrix(phi, alpha, N, opt.gram);
    std::vector<double> ev;
    if (opt.precision == Precision::extended) {
        ev = hermitian_eigs_precise(G.entries, opt.digits10);
    } else {
        const Eigen::VectorXd e = hermitian_eigs(G.entries);
        ev.assign(e.data(), e.data() + e.size());
        if (opt.precision == Precision::automatic && G.entries.rows() <= 257 &&
            !ev.empty() && ev.front() > 0.0 && ev.back() < 1e-24 * ev.front())
            ev = hermitian_eigs_precise(G.entries, opt.digits10);
    }
    std::vector<double> sv(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) sv[i] = std::sqrt(std::max(ev[i], 0.0));
    return sv;
}

// Longest leading run of stable, positive values; 1-based length.
std::size_t stable_prefix(const SingularSpectrum& s) {
    std::size_t k = 0;
    while (k < s.values.size() && s.stable[k] && s.values[k] > 0.0) ++k;
    return k;
}

} // namespace

bool SingularSpectrum::all_stable() const {
    for (bool b : stable)
        if (!b) return false;
    return true;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& m, Precision precision,
                                    int digits10) {
    if (precision != Precision::extended) {
        std::vector<double> sv = svd_double(m);
        if (!wants_escalation(sv, std::max(m.rows(), m.cols()), precision)) return sv;
    }
    return singular_values_precise(m, digits10);
}

std::vector<double> singular_values(const Eigen::MatrixXd& m, Precision precision,
                                    int digits10) {
    if (precision != Precision::extended) {
        std::vector<double> sv = svd_double(m);
        if (!wants_escalation(sv, std::max(m.rows(), m.cols()), precision)) return sv;
    }
    return singular_values_precise(m, digits10);
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw domain_error("fit needs matched coordinate counts");
    const std::size_t n = x.size();
    if (n < 2) throw insufficient_data("fit needs at least two points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw domain_error("fit abscissae are all equal");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (syy == 0.0) {
        f.r2 = 1.0;
    } else {
        double ssres = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = y[i] - (f.intercept + f.slope * x[i]);
            ssres += e * e;
        }
        f.r2 = 1.0 - ssres / syy;
    }
    return f;
}

SingularSpectrum approx_numbers(const Symbol& phi, double alpha, int n_max,
                                const ApproxOptions& opt) {
    if (n_max < 1) throw domain_error("need at least one approximation number");
    const bool lens_like = phi.has_kind(SymbolKind::lens);
    const MatrixMethod method =
        opt.force_method ? opt.method
                         : (lens_like ? MatrixMethod::gram : MatrixMethod::taylor);
    int N = opt.trunc;
    if (N == 0)
        N = (!opt.force_method && lens_like) ? 2048 : std::max(512, 4 * n_max);
    if (n_max > N / 4)
        throw precondition_error(
            "truncation headroom violated: need n_max <= trunc/4 for the "
            "reported range to be trustworthy");

    SingularSpectrum out;
    out.trunc_degree = N;
    out.stability_gate = opt.stability_gate;

    std::vector<double> full = spectrum_at(phi, alpha, N, method, opt);
    out.values.assign(full.begin(),
                      full.begin() + std::min<std::size_t>(full.size(),
                                                           static_cast<std::size_t>(n_max)));

    if (opt.stability_run) {
        const std::vector<double> half = spectrum_at(phi, alpha, N / 2, method, opt);
        out.stability.resize(out.values.size(), 0.0);
        out.stable.resize(out.values.size(), false);
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            const double a = out.values[i];
            const double b = i < half.size() ? half[i] : 0.0;
            const double denom = std::max(std::abs(a), 1e-300);
            out.stability[i] = std::abs(a - b) / denom;
            out.stable[i] = out.stability[i] <= opt.stability_gate;
        }
    } else {
        out.stable.resize(out.values.size(), true);
    }
    return out;
}

DecayReport beta_estimate(const SingularSpectrum& s) {
    const std::size_t k = stable_prefix(s);
    if (k < 8)
        throw insufficient_data("decay estimate needs at least 8 stable leading values");

    std::vector<double> ns(k), sqrts(k), logs(k), roots(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double n = static_cast<double>(i + 1);
        ns[i] = n;
        sqrts[i] = std::sqrt(n);
        logs[i] = std::log(s.values[i]);
        roots[i] = std::pow(s.values[i], 1.0 / n);
    }

    DecayReport r;
    r.window_begin = 1;
    r.window_end = static_cast<int>(k);
    r.window_min = *std::min_element(roots.begin(), roots.end());
    r.window_max = *std::max_element(roots.begin(), roots.end());

    const std::size_t tail = std::max<std::size_t>(1, k / 4);
    double m = roots[k - 1];
    for (std::size_t i = k - tail; i < k; ++i) m = std::min(m, roots[i]);
    r.beta_hat = std::clamp(m, 0.0, 1.0);

    r.monotone_window = true;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (roots[i + 1] > roots[i] + 1e-12) {
            r.monotone_window = false;
            break;
        }

    r.fit_exp = linear_fit(ns, logs);
    r.fit_sqrt = linear_fit(sqrts, logs);
    return r;
}

std::vector<cdouble> eigenvalue_sequence(const Symbol& psi, int n) {
    if (n < 1) throw domain_error("eigenvalue sequence needs n >= 1");
    const cdouble at0 = psi.eval(0.0);
    if (std::abs(at0) > 1e-12)
        throw precondition_error("eigenvalue sequence needs the origin fixed; "
                                 "conjugate the symbol to a fixed point first");
    const cdouble lambda = psi.deriv(0.0);
    if (std::abs(lambda) >= 1.0 - 1e-12)
        throw precondition_error("derivative modulus 1 at the fixed point: the "
                                 "operator is not compact and has no eigenvalue "
                                 "sequence of this form");
    if (std::abs(lambda) == 0.0) return {};
    std::vector<cdouble> out(static_cast<std::size_t>(n));
    cdouble p = 1.0;
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = p;
        p *= lambda;
    }
    return out;
}

WeylResult weyl_check(const Eigen::MatrixXcd& m, int n) {
    if (m.rows() != m.cols()) throw domain_error("weyl check needs a square matrix");
    if (n < 1 || n > m.rows()) throw domain_error("weyl check index out of range");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(m, false);
    std::vector<double> moduli(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        moduli[static_cast<std::size_t>(i)] = std::abs(eig.eigenvalues()(i));
    std::sort(moduli.rbegin(), moduli.rend());
    const std::vector<double> sv = singular_values(m, Precision::double_only);

    WeylResult w;
    w.lhs = 1.0;
    w.rhs = 1.0;
    for (int i = 0; i < n; ++i) {
        w.lhs *= sv[static_cast<std::size_t>(i)];
        w.rhs *= moduli[static_cast<std::size_t>(i)];
    }
    w.ok = w.lhs >= w.rhs * (1.0 - 1e-10);
    return w;
}

double lemma_second_floor(double delta, double r, double norm_T, int n) {
    if (!(delta > 0.0)) throw domain_error("floor needs delta > 0");
    if (!(r > 0.0 && r < 1.0)) throw domain_error("floor needs r in (0, 1)");
    if (!(norm_T > 0.0)) throw domain_error("floor needs a positive operator norm");
    if (n < 1) throw domain_error("floor index must be >= 1");
    return delta * delta / norm_T * std::pow(r, 2 * n);
}

SecondaryReport secondary_lower_bound(const Symbol& phi, double kappa,
                                      const SingularSpectrum& s, double tol) {
    if (!(kappa > 0.0 && kappa < 1.0)) throw domain_error("kappa must lie in (0, 1)");
    const BracketResult b = bracket(phi);
    if (kappa >= b.value)
        throw precondition_error("kappa must sit strictly below the certified "
                                 "grid estimate of sup phi#");

    SecondaryReport rep;
    rep.kappa = kappa;
    rep.tol = tol;
    rep.bracket_value = b.value;

    const std::size_t k = stable_prefix(s);
    if (k == 0) throw insufficient_data("no stable leading values");
    // work in logs: kappa^(2n) underflows long before the window ends
    double best = std::numeric_limits<double>::infinity();
    const double l2k = 2.0 * std::log(kappa);
    for (std::size_t i = 0; i < k; ++i) {
        const double n = static_cast<double>(i + 1);
        best = std::min(best, std::log(s.values[i]) - n * l2k);
    }
    rep.c_kappa = std::exp(best);
    rep.c_positive = rep.c_kappa > 0.0 && std::isfinite(rep.c_kappa);

    rep.beta_hat = beta_estimate(s).beta_hat;
    rep.beta_ok = rep.beta_hat >= kappa * kappa - tol;
    return rep;
}

} // namespace apx
