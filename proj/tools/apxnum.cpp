// Command line front end: approximation numbers, symbol diagnostics,
// Carleson profiles, shift models, and boundary restriction spectra.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 output produced but
// some values carry instability flags, 3 numerical failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "apxnum/bergman.hpp"
#include "apxnum/boundary.hpp"
#include "apxnum/carleson.hpp"
#include "apxnum/errors.hpp"
#include "apxnum/operator_matrix.hpp"
#include "apxnum/shift_lab.hpp"
#include "apxnum/spectra.hpp"
#include "apxnum/symbols.hpp"
#include "apxnum/version.hpp"

#include <Eigen/Dense>

#include <clocale>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using ojson = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw apx::domain_error("cannot open output file: " + out_path);
    f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

apx::Precision parse_precision(const std::string& p) {
    if (p == "double") return apx::Precision::double_only;
    if (p == "extended") return apx::Precision::extended;
    return apx::Precision::automatic;
}

// ---------------------------------------------------------------- approx

struct ApproxArgs {
    std::string symbol;
    double alpha = -1.0;
    int n_max = 10;
    int trunc = 0;
    std::string method = "auto";
    double gate = 0.05;
    bool no_stability = false;
    std::string precision = "auto";
    int digits = 60;
    std::string format = "csv";
    std::string out;
};

int run_approx(const ApproxArgs& a) {
    apx::Symbol phi = apx::parse_symbol(a.symbol);
    apx::ApproxOptions opt;
    opt.trunc = a.trunc;
    if (a.method != "auto") {
        opt.force_method = true;
        opt.method = a.method == "gram" ? apx::MatrixMethod::gram
                                        : apx::MatrixMethod::taylor;
    }
    opt.stability_gate = a.gate;
    opt.stability_run = !a.no_stability;
    opt.precision = parse_precision(a.precision);
    opt.digits10 = a.digits;
    apx::SingularSpectrum s = apx::approx_numbers(phi, a.alpha, a.n_max, opt);

    if (a.format == "csv") {
        std::ostringstream os;
        os << "n,a_n,stability,a_n_root\n";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            const int n = static_cast<int>(i) + 1;
            const double v = s.values[i];
            os << n << ',' << fmt_double(v) << ',';
            if (i < s.stability.size()) os << fmt_double(s.stability[i]);
            os << ',' << fmt_double(v > 0.0 ? std::pow(v, 1.0 / n) : 0.0)
               << '\n';
        }
        emit(os.str(), a.out);
    } else {
        ojson j;
        j["config"] = {{"command", "approx"},
                       {"version", apx::version_string},
                       {"symbol", a.symbol},
                       {"alpha", a.alpha},
                       {"n_max", a.n_max},
                       {"trunc", a.trunc},
                       {"method", a.method},
                       {"stability_gate", a.gate},
                       {"stability_run", !a.no_stability},
                       {"precision", a.precision},
                       {"digits10", a.digits}};
        j["symbol_canonical"] = phi.describe();
        j["trunc_degree"] = s.trunc_degree;
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            const int n = static_cast<int>(i) + 1;
            const double v = s.values[i];
            ojson row;
            row["n"] = n;
            row["a_n"] = v;
            if (i < s.stability.size())
                row["stability"] = s.stability[i];
            else
                row["stability"] = nullptr;
            row["stable"] = static_cast<bool>(s.stable[i]);
            row["a_n_root"] = v > 0.0 ? std::pow(v, 1.0 / n) : 0.0;
            rows.push_back(row);
        }
        j["values"] = rows;
        j["all_stable"] = s.all_stable();
        emit(dump(j), a.out);
    }
    return s.all_stable() ? 0 : 2;
}

// ---------------------------------------------------------------- bracket

struct BracketArgs {
    std::string symbol;
    int radial = 64;
    int angular = 128;
    std::string out;
};

int run_bracket(const BracketArgs& a) {
    apx::Symbol phi = apx::parse_symbol(a.symbol);
    apx::BracketResult b = apx::bracket(phi, a.radial, a.angular);
    ojson j;
    j["config"] = {{"command", "bracket"},
                   {"version", apx::version_string},
                   {"symbol", a.symbol},
                   {"radial", a.radial},
                   {"angular", a.angular}};
    j["symbol_canonical"] = phi.describe();
    j["value"] = b.value;
    j["argmax_re"] = b.argmax.real();
    j["argmax_im"] = b.argmax.imag();
    j["refine_delta"] = b.refine_delta;
    emit(dump(j), a.out);
    return 0;
}

// ------------------------------------------------------------ lens-report

struct LensArgs {
    double theta = 0.5;
    double alpha = -1.0;
    int n_max = 20;
    int trunc = 0;
    double gate = 0.05;
    std::string precision = "auto";
    int digits = 60;
    std::string out;
};

int run_lens_report(const LensArgs& a) {
    apx::Symbol phi = apx::Symbol::lens(a.theta);
    apx::ApproxOptions opt;
    opt.trunc = a.trunc;
    opt.stability_gate = a.gate;
    opt.precision = parse_precision(a.precision);
    opt.digits10 = a.digits;
    apx::SingularSpectrum s = apx::approx_numbers(phi, a.alpha, a.n_max, opt);

    std::vector<double> xs_n, xs_sqrt, ys;
    ojson rows = ojson::array();
    bool floor_ok = true;
    double b_theta = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const double v = s.values[i];
        apx::LensLowerBound lb = apx::lens_lower_bound_best(a.theta, n);
        b_theta = lb.b_theta;
        if (lb.floor > v) floor_ok = false;
        ojson row;
        row["n"] = n;
        row["a_n"] = v;
        row["stable"] = static_cast<bool>(s.stable[i]);
        row["floor"] = lb.floor;
        rows.push_back(row);
        if (v > 0.0) {
            xs_n.push_back(n);
            xs_sqrt.push_back(std::sqrt(static_cast<double>(n)));
            ys.push_back(std::log(v));
        }
    }
    apx::LinearFit fe = apx::linear_fit(xs_n, ys);
    apx::LinearFit fs = apx::linear_fit(xs_sqrt, ys);

    ojson j;
    j["config"] = {{"command", "lens-report"},
                   {"version", apx::version_string},
                   {"theta", a.theta},
                   {"alpha", a.alpha},
                   {"n_max", a.n_max},
                   {"trunc", a.trunc},
                   {"stability_gate", a.gate},
                   {"precision", a.precision},
                   {"digits10", a.digits}};
    j["symbol_canonical"] = phi.describe();
    j["trunc_degree"] = s.trunc_degree;
    j["b_theta"] = b_theta;
    j["values"] = rows;
    j["fit_exp"] = {{"slope", fe.slope}, {"intercept", fe.intercept},
                    {"r2", fe.r2}};
    j["fit_sqrt"] = {{"slope", fs.slope}, {"intercept", fs.intercept},
                     {"r2", fs.r2}};
    j["verdict"] = fs.r2 > fe.r2 ? "sqrt" : "exp";
    j["floor_ok"] = floor_ok;
    j["all_stable"] = s.all_stable();
    emit(dump(j), a.out);
    return s.all_stable() ? 0 : 2;
}

// ----------------------------------------------------------------- shift

struct ShiftArgs {
    std::string eps;
    double c0 = 1.0;
    int m = 200;
    double alpha = -1.0;
    std::string out;
};

// Floor specifications: 1/log(n+K), n^-P, C^-n, or a file of one positive
// value per line (nonincreasing).
std::vector<double> parse_eps(const std::string& spec, int m) {
    std::smatch mt;
    static const std::regex log_form(R"(^1/log\(n\+([0-9]+\.?[0-9]*)\)$)");
    static const std::regex pow_form(R"(^n\^-([0-9]+\.?[0-9]*)$)");
    static const std::regex geo_form(R"(^([0-9]+\.?[0-9]*)\^-n$)");
    std::vector<double> eps;
    if (std::regex_match(spec, mt, log_form)) {
        const double k = std::stod(mt[1].str());
        if (k <= 0.0)
            throw apx::domain_error("1/log(n+K) needs K > 0");
        for (int n = 1; n <= m; ++n)
            eps.push_back(1.0 / std::log(n + k));
        return eps;
    }
    if (std::regex_match(spec, mt, pow_form)) {
        const double p = std::stod(mt[1].str());
        if (p <= 0.0) throw apx::domain_error("n^-P needs P > 0");
        for (int n = 1; n <= m; ++n)
            eps.push_back(std::pow(n, -p));
        return eps;
    }
    if (std::regex_match(spec, mt, geo_form)) {
        const double c = std::stod(mt[1].str());
        if (c <= 1.0) throw apx::domain_error("C^-n needs C > 1");
        for (int n = 1; n <= m; ++n)
            eps.push_back(std::pow(c, -n));
        return eps;
    }
    std::ifstream f(spec);
    if (!f)
        throw apx::domain_error("eps is neither a known form nor a readable "
                                "file: " + spec);
    double v = 0.0;
    while (f >> v) {
        if (!(v > 0.0))
            throw apx::domain_error("eps file values must be positive");
        if (!eps.empty() && v > eps.back())
            throw apx::domain_error("eps file is not nonincreasing");
        eps.push_back(v);
    }
    if (eps.empty()) throw apx::domain_error("eps file is empty");
    return eps;
}

int run_shift(const ShiftArgs& a) {
    std::vector<double> eps = parse_eps(a.eps, a.m);
    apx::PipelineReport rep =
        apx::slow_decay_pipeline(eps, a.c0, a.m, a.alpha);
    ojson j;
    j["config"] = {{"command", "shift"},
                   {"version", apx::version_string},
                   {"eps", a.eps},
                   {"c0", a.c0},
                   {"m", a.m},
                   {"alpha", a.alpha}};
    j["h"] = rep.model.h_descriptor;
    j["normalized"] = rep.normalized;
    j["d"] = rep.d;
    j["hayman_ok"] = rep.hayman_ok;
    j["weights_ok"] = rep.weights_ok;
    j["minoration_ok"] = rep.minoration_ok;
    j["checks_pass"] = rep.hayman_ok && rep.weights_ok && rep.minoration_ok;
    j["interp_upper"] = rep.interp_upper;
    j["floor_constant"] = rep.floor_constant;
    j["max_ratio"] = rep.model.source.max_ratio();
    j["eps_used"] = rep.eps;
    j["delta"] = rep.delta_seq;
    j["A_n"] = rep.A_n;
    j["r"] = rep.model.source.points;
    j["weights"] = rep.model.weights;
    j["a_n"] = rep.a_n;
    emit(dump(j), a.out);
    return 0;
}

// -------------------------------------------------------------- carleson

struct CarlesonArgs {
    std::string symbol;
    double alpha = -1.0;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    int streams = 8;
    int bins = 4096;
    double boundary_radius = 1.0 - 1e-6;
    double h_lo = 1e-3;
    double h_hi = 1e-1;
    std::vector<int> ternary_n;
    std::string csv;
    std::string out;
};

int run_carleson(const CarlesonArgs& a) {
    apx::Symbol phi = apx::parse_symbol(a.symbol);
    apx::ProfileOptions po;
    po.samples = a.samples;
    po.seed = a.seed;
    po.angular_bins = a.bins;
    po.streams = a.streams;
    po.boundary_radius = a.boundary_radius;
    std::vector<int> ns = a.ternary_n.empty() ? std::vector<int>{10, 100}
                                              : a.ternary_n;
    apx::CarlesonProfile p =
        apx::pushforward_profile(phi, a.alpha, apx::default_h_grid(), po);

    ojson j;
    j["config"] = {{"command", "carleson"},
                   {"version", apx::version_string},
                   {"symbol", a.symbol},
                   {"alpha", a.alpha},
                   {"samples", a.samples},
                   {"seed", a.seed},
                   {"streams", a.streams},
                   {"angular_bins", a.bins},
                   {"boundary_radius", a.boundary_radius},
                   {"h_lo", a.h_lo},
                   {"h_hi", a.h_hi},
                   {"ternary_n", ns}};
    j["symbol_canonical"] = phi.describe();
    j["sample_count"] = p.sample_count;
    j["profile"] = {{"h", p.h_grid},
                    {"rho_hat", p.rho_hat},
                    {"std_err", p.std_err}};
    try {
        j["slope"] = apx::profile_slope(p, a.h_lo, a.h_hi);
    } catch (const apx::insufficient_data&) {
        j["slope"] = nullptr; // profile vanishes on the fit window
    }
    j["embedding_shape"] = apx::embedding_norm_shape(p);
    ojson tj = ojson::array();
    for (int n : ns) {
        apx::TernaryResult t = apx::ternary_upper_bound(n, p);
        tj.push_back({{"n", n},
                      {"value", t.value},
                      {"h_min", t.h_min},
                      {"boundary_warning", t.boundary_warning}});
    }
    j["ternary"] = tj;
    emit(dump(j), a.out);

    if (!a.csv.empty()) {
        std::ostringstream os;
        os << "h,rho_hat,std_err\n";
        for (std::size_t i = 0; i < p.h_grid.size(); ++i)
            os << fmt_double(p.h_grid[i]) << ',' << fmt_double(p.rho_hat[i])
               << ',' << fmt_double(p.std_err[i]) << '\n';
        emit(os.str(), a.csv);
    }
    return 0;
}

// --------------------------------------------------------------- seville

struct SevilleArgs {
    double r = 0.8;
    double alpha = -1.0;
    int n = 32;
    int digits = 100;
    std::string out;
};

int run_seville(const SevilleArgs& a) {
    apx::SevilleParams p = apx::seville_params(a.r);
    apx::RestrictionSpectrum spec =
        apx::restriction_spectrum(p, a.alpha, a.n, a.digits);
    ojson j;
    j["config"] = {{"command", "seville"},
                   {"version", apx::version_string},
                   {"r", a.r},
                   {"alpha", a.alpha},
                   {"n", a.n},
                   {"digits10", a.digits}};
    j["params"] = {{"r", p.r}, {"rho", p.rho}, {"eps", p.eps}, {"s", p.s}};
    j["precision_floor"] = spec.precision_floor;
    j["values"] = spec.values;
    j["floors"] = spec.floors;
    ojson cert = ojson::array();
    int certified_count = 0;
    for (bool c : spec.certified) {
        cert.push_back(c);
        if (c) ++certified_count;
    }
    j["certified"] = cert;
    j["certified_count"] = certified_count;
    emit(dump(j), a.out);
    return 0;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string kind;
    double alpha = -1.0;
    int n = 100;
    double exponent = 2.0;
    double beta = 0.0;
    std::string out;
};

int run_bounds(const BoundsArgs& a) {
    ojson j;
    j["config"] = {{"command", "bounds"},
                   {"version", apx::version_string},
                   {"kind", a.kind},
                   {"alpha", a.alpha},
                   {"n", a.n},
                   {"exponent", a.exponent},
                   {"beta", a.beta}};
    if (a.kind == "ternary") {
        const double p = a.exponent;
        apx::TernaryResult t = apx::ternary_upper_bound(
            a.n, a.alpha, [p](double h) { return std::pow(h, p); });
        j["value"] = t.value;
        j["h_min"] = t.h_min;
        j["boundary_warning"] = t.boundary_warning;
    } else if (a.kind == "supper") {
        const double p = a.exponent;
        j["value"] = apx::supper_bound(
            a.n, a.alpha, [p](double h) { return std::pow(h, p); });
    } else {
        if (!(a.beta > 1.0))
            throw apx::domain_error("imprecise bound needs --beta > 1");
        j["value"] = apx::imprecise_bound(a.n, a.alpha, a.beta);
        j["gamma"] = (a.beta - 1.0) * (a.alpha + 2.0) / 2.0;
        j["schatten_threshold"] = apx::schatten_threshold(a.alpha, a.beta);
    }
    emit(dump(j), a.out);
    return 0;
}

// ----------------------------------------------------------------- check

bool report_check(const char* name, bool ok) {
    std::cout << (ok ? "ok - " : "FAIL - ") << name << '\n';
    return ok;
}

int run_check() {
    bool all = true;

    {
        bool ok = true;
        for (double alpha : {-1.0, 0.0, 1.5})
            for (int k = 0; k < 50; ++k) {
                const double ratio =
                    apx::weight(k + 1, alpha) / apx::weight(k, alpha);
                ok = ok && std::abs(ratio - (k + 1) / (k + 2 + alpha)) < 1e-13;
            }
        all = report_check("weight recurrence", ok) && all;
    }
    {
        bool ok = true;
        for (double alpha : {-1.0, 0.5})
            for (apx::cdouble a : {apx::cdouble(0.3, 0.2),
                                   apx::cdouble(0.0, -0.5),
                                   apx::cdouble(0.7, 0.0)}) {
                const auto coords = apx::kernel_coords(a, alpha, 2000);
                double direct = 0.0;
                for (const apx::cdouble& c : coords) direct += std::norm(c);
                const double closed = apx::kernel_norm_sq(a, alpha);
                ok = ok && std::abs(direct - closed) < 1e-8 * closed;
            }
        all = report_check("kernel norm identity", ok) && all;
    }
    {
        bool ok = true;
        for (const apx::Symbol& phi : apx::builtin_symbols()) {
            for (int i = 0; i < 40; ++i)
                for (int k = 0; k < 50; ++k) {
                    const double r = (i + 0.5) / 40.0;
                    const double t = 2.0 * M_PI * k / 50.0;
                    const apx::cdouble z = std::polar(r, t);
                    ok = ok && apx::phi_sharp(phi, z) <= 1.0 + 1e-12;
                }
        }
        all = report_check("schwarz-pick bound", ok) && all;
    }
    {
        bool ok = true;
        std::mt19937 gen(7);
        std::uniform_real_distribution<double> mag(0.05, 2.0);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> w(6);
            for (double& x : w) x = mag(gen);
            Eigen::MatrixXd b = apx::shift_matrix(w);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
            std::vector<double> sorted = w;
            std::sort(sorted.rbegin(), sorted.rend());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                ok = ok && std::abs(svd.singularValues()[static_cast<int>(i)] -
                                    sorted[i]) < 1e-12;
        }
        all = report_check("shift singular values", ok) && all;
    }
    {
        bool ok = true;
        std::mt19937 gen(11);
        std::uniform_real_distribution<double> u(0.0, 0.999);
        for (int trial = 0; trial < 2000; ++trial) {
            double x = u(gen), y = u(gen);
            if (x > y) std::swap(x, y);
            const apx::PoincareSandwich s = apx::poincare_sandwich(x, y);
            ok = ok && s.lo <= s.mid * (1 + 1e-12) &&
                 s.mid <= s.hi * (1 + 1e-12);
        }
        all = report_check("poincare sandwich", ok) && all;
    }
    {
        const double r1 = apx::adjoint_kernel_check(
            apx::Symbol::shrink(0.5), -1.0, apx::cdouble(0.3, 0.1), 64);
        const double r2 = apx::adjoint_kernel_check(
            apx::Symbol::mobius(apx::cdouble(0.3, 0.0)), -1.0,
            apx::cdouble(0.2, -0.2), 64);
        all = report_check("adjoint kernel identity", r1 < 1e-8 && r2 < 1e-8)
              && all;
    }
    {
        bool ok = true;
        for (int i = 1; i <= 9; ++i) {
            const double sigma = i / 10.0;
            ok = ok && apx::hoffman_product(sigma, 120) >=
                           apx::hadlac_floor(sigma) * (1 - 1e-12);
        }
        all = report_check("separation floors ordered", ok) && all;
    }
    {
        bool ok = true;
        std::mt19937 gen(23);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> eps(30);
            double level = u(gen);
            for (double& e : eps) {
                e = level;
                level *= u(gen) * 0.5 + 0.5;
            }
            const std::vector<double> d = apx::logconvexify(eps);
            for (std::size_t i = 0; i < d.size(); ++i)
                ok = ok && d[i] >= eps[i] * (1 - 1e-12);
            for (std::size_t i = 2; i < d.size(); ++i)
                ok = ok && d[i] * d[i - 2] >= d[i - 1] * d[i - 1] * (1 - 1e-9);
        }
        all = report_check("log-convex floor", ok) && all;
    }
    {
        const apx::TernaryResult t = apx::ternary_upper_bound(
            100, -1.0, [](double h) { return h * h; });
        all = report_check("ternary shape value",
                           std::abs(t.value - 0.217) < 5e-3) && all;
    }
    {
        bool ok = true;
        std::mt19937 gen(31);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(12, 12);
            for (int i = 0; i < 12; ++i)
                for (int jj = i; jj < 12; ++jj)
                    m(i, jj) = apx::cdouble(u(gen), u(gen));
            for (int n = 1; n <= 12; n += 3)
                ok = ok && apx::weyl_check(m, n).ok;
        }
        all = report_check("weyl products", ok) && all;
    }

    return all ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"approximation numbers of composition operators on "
                 "weighted Bergman spaces"};
    app.set_version_flag("--version", std::string(apx::version_string));
    app.set_config("--config", "",
                   "plain-text key=value configuration file");
    app.require_subcommand(1);
    int rc = 0;

    auto approx_args = std::make_shared<ApproxArgs>();
    CLI::App* approx = app.add_subcommand(
        "approx", "approximation numbers of a composition operator");
    approx->add_option("--symbol", approx_args->symbol, "symbol literal")
        ->required();
    approx->add_option("--alpha", approx_args->alpha, "space parameter");
    approx->add_option("--n-max", approx_args->n_max, "last index reported");
    approx->add_option("--trunc", approx_args->trunc,
                       "truncation degree, 0 = automatic");
    approx->add_option("--method", approx_args->method,
                       "matrix route")
        ->check(CLI::IsMember({"auto", "taylor", "gram"}));
    approx->add_option("--gate", approx_args->gate, "stability gate");
    approx->add_flag("--no-stability", approx_args->no_stability,
                     "skip the half-truncation stability rerun");
    approx->add_option("--precision", approx_args->precision,
                       "singular value precision")
        ->check(CLI::IsMember({"auto", "double", "extended"}));
    approx->add_option("--digits", approx_args->digits,
                       "extended precision decimal digits");
    approx->add_option("--format", approx_args->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    approx->add_option("--out", approx_args->out, "output file");
    approx->callback([approx_args, &rc] { rc = run_approx(*approx_args); });

    auto bracket_args = std::make_shared<BracketArgs>();
    CLI::App* bracket = app.add_subcommand(
        "bracket", "certified grid lower estimate of sup |phi|");
    bracket->add_option("--symbol", bracket_args->symbol, "symbol literal")
        ->required();
    bracket->add_option("--radial", bracket_args->radial, "radial nodes");
    bracket->add_option("--angular", bracket_args->angular, "angular nodes");
    bracket->add_option("--out", bracket_args->out, "output file");
    bracket->callback([bracket_args, &rc] { rc = run_bracket(*bracket_args); });

    auto lens_args = std::make_shared<LensArgs>();
    CLI::App* lens = app.add_subcommand(
        "lens-report", "spectrum, explicit floor, and decay fits for a lens "
                       "symbol");
    lens->add_option("--theta", lens_args->theta, "lens aperture in (0,1)")
        ->required();
    lens->add_option("--alpha", lens_args->alpha, "space parameter");
    lens->add_option("--n-max", lens_args->n_max, "last index reported");
    lens->add_option("--trunc", lens_args->trunc,
                     "truncation degree, 0 = automatic");
    lens->add_option("--gate", lens_args->gate, "stability gate");
    lens->add_option("--precision", lens_args->precision,
                     "singular value precision")
        ->check(CLI::IsMember({"auto", "double", "extended"}));
    lens->add_option("--digits", lens_args->digits,
                     "extended precision decimal digits");
    lens->add_option("--out", lens_args->out, "output file");
    lens->callback([lens_args, &rc] { rc = run_lens_report(*lens_args); });

    auto shift_args = std::make_shared<ShiftArgs>();
    CLI::App* shift = app.add_subcommand(
        "shift", "slow-decay radial sequence and backward shift model");
    shift->add_option("--eps", shift_args->eps,
                      "floor: 1/log(n+K), n^-P, C^-n, or a file path")
        ->required();
    shift->add_option("--c0", shift_args->c0, "rate constant");
    shift->add_option("--m", shift_args->m, "sequence length");
    shift->add_option("--alpha", shift_args->alpha, "space parameter");
    shift->add_option("--out", shift_args->out, "output file");
    shift->callback([shift_args, &rc] { rc = run_shift(*shift_args); });

    auto carleson_args = std::make_shared<CarlesonArgs>();
    CLI::App* carleson = app.add_subcommand(
        "carleson", "Monte Carlo window profile of the pushforward measure");
    carleson->add_option("--symbol", carleson_args->symbol, "symbol literal")
        ->required();
    carleson->add_option("--alpha", carleson_args->alpha, "space parameter");
    carleson->add_option("--samples", carleson_args->samples,
                         "Monte Carlo sample count");
    carleson->add_option("--seed", carleson_args->seed, "RNG seed")
        ->envname("APXNUM_SEED");
    carleson->add_option("--streams", carleson_args->streams,
                         "independent substreams");
    carleson->add_option("--bins", carleson_args->bins, "angular bins");
    carleson->add_option("--boundary-radius", carleson_args->boundary_radius,
                         "evaluation radius for the boundary measure");
    carleson->add_option("--h-lo", carleson_args->h_lo,
                         "slope fit window, lower end");
    carleson->add_option("--h-hi", carleson_args->h_hi,
                         "slope fit window, upper end");
    carleson
        ->add_option("--ternary-n", carleson_args->ternary_n,
                     "indices for the ternary upper bound")
        ->delimiter(',');
    carleson->add_option("--csv", carleson_args->csv, "profile CSV file");
    carleson->add_option("--out", carleson_args->out, "output file");
    carleson->callback(
        [carleson_args, &rc] { rc = run_carleson(*carleson_args); });

    auto seville_args = std::make_shared<SevilleArgs>();
    CLI::App* seville = app.add_subcommand(
        "seville", "boundary contact symbol and restriction spectrum");
    seville->add_option("--r", seville_args->r, "contact radius in (0,1)")
        ->required();
    seville->add_option("--alpha", seville_args->alpha, "space parameter");
    seville->add_option("--n", seville_args->n, "matrix size N");
    seville->add_option("--digits", seville_args->digits,
                        "working precision decimal digits");
    seville->add_option("--out", seville_args->out, "output file");
    seville->callback([seville_args, &rc] { rc = run_seville(*seville_args); });

    auto bounds_args = std::make_shared<BoundsArgs>();
    CLI::App* bounds = app.add_subcommand(
        "bounds", "closed-form upper bound evaluators");
    bounds->add_option("--kind", bounds_args->kind, "which bound")
        ->required()
        ->check(CLI::IsMember({"ternary", "supper", "imprecise"}));
    bounds->add_option("--alpha", bounds_args->alpha, "space parameter");
    bounds->add_option("--n", bounds_args->n, "index");
    bounds->add_option("--exponent", bounds_args->exponent,
                       "profile exponent p in rho(h) = h^p");
    bounds->add_option("--beta", bounds_args->beta,
                       "decay exponent for the imprecise bound");
    bounds->add_option("--out", bounds_args->out, "output file");
    bounds->callback([bounds_args, &rc] { rc = run_bounds(*bounds_args); });

    CLI::App* check = app.add_subcommand(
        "check", "run the fast internal property suite");
    check->callback([&rc] { rc = run_check(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const apx::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const apx::insufficient_data& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const apx::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const apx::precondition_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
