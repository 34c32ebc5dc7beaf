#include "apxnum/operator_matrix.hpp"

#include "apxnum/bergman.hpp"
#include "apxnum/errors.hpp"
#include "apxnum/quadrature.hpp"

#include <cmath>
#include <ostream>

namespace apx {

namespace {

// coefficients of p * q truncated at degree N
std::vector<cdouble> cauchy_product(const std::vector<cdouble>& p,
                                    const std::vector<cdouble>& q, int N) {
    std::vector<cdouble> out(static_cast<std::size_t>(N) + 1, cdouble(0.0));
    for (int j = 0; j <= N; ++j) {
        cdouble s = 0.0;
        for (int i = 0; i <= j; ++i)
            s += p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        out[static_cast<std::size_t>(j)] = s;
    }
    return out;
}

struct NodeSet {
    std::vector<cdouble> z;
    std::vector<double> w;
};

NodeSet circle_nodes(const GramOptions& opt) {
    const Quad1D q = graded_circle(opt.levels, opt.panel_order);
    NodeSet n;
    n.z.reserve(q.x.size());
    n.w = q.w;
    for (double t : q.x) n.z.push_back(opt.boundary_radius * std::polar(1.0, t));
    return n;
}

Eigen::MatrixXcd circle_factor(const Symbol& phi, double alpha, int N,
                               const GramOptions& opt) {
    const NodeSet nodes = circle_nodes(opt);
    const auto lw = [&](int k) { return log_weight(k, alpha); };
    const Eigen::Index rows = static_cast<Eigen::Index>(nodes.z.size());
    Eigen::MatrixXcd X(rows, N + 1);
    for (Eigen::Index q = 0; q < rows; ++q) {
        const double sw = std::sqrt(nodes.w[static_cast<std::size_t>(q)]);
        const cdouble f = phi.eval(nodes.z[static_cast<std::size_t>(q)]);
        cdouble pw = 1.0;
        for (int k = 0; k <= N; ++k) {
            X(q, k) = sw * pw * std::exp(-0.5 * lw(k));
            pw *= f;
        }
    }
    return X;
}

// alpha > -1: accumulate G ring by ring; the full tensor factor would not fit
// in memory at large N.
Eigen::MatrixXcd disk_gram(const Symbol& phi, double alpha, int N,
                           const GramOptions& opt) {
    const Quad1D rad = radial_bergman(opt.radial_nodes, alpha);
    const int m = opt.angular_nodes > 0 ? opt.angular_nodes
                                        : std::max(4 * N, 256);
    const Quad1D ang = uniform_circle(m);
    std::vector<double> half_lw(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k)
        half_lw[static_cast<std::size_t>(k)] = 0.5 * log_weight(k, alpha);

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    Eigen::MatrixXcd V(m, N + 1);
    for (std::size_t i = 0; i < rad.x.size(); ++i) {
        const double r = std::sqrt(rad.x[i]); // radial rule works in u = r^2
        for (int a = 0; a < m; ++a) {
            const cdouble f = phi.eval(r * std::polar(1.0, ang.x[static_cast<std::size_t>(a)]));
            cdouble pw = 1.0;
            for (int k = 0; k <= N; ++k) {
                V(a, k) = pw * std::exp(-half_lw[static_cast<std::size_t>(k)]);
                pw *= f;
            }
        }
        G.noalias() += (rad.w[i] / m) * (V.adjoint() * V);
    }
    return G;
}

Eigen::MatrixXcd assemble_gram(const Symbol& phi, double alpha, int N,
                               const GramOptions& opt) {
    if (alpha == -1.0) {
        const Eigen::MatrixXcd X = circle_factor(phi, alpha, N, opt);
        return X.adjoint() * X;
    }
    return disk_gram(phi, alpha, N, opt);
}

} // namespace

OperatorMatrix taylor_matrix(const Symbol& phi, double alpha, int N) {
    if (N < 1) throw domain_error("truncation degree must be >= 1");
    const std::vector<cdouble> c = taylor(phi, N);
    std::vector<double> lw(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) lw[static_cast<std::size_t>(k)] = log_weight(k, alpha);

    OperatorMatrix M;
    M.entries = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    M.alpha = alpha;
    M.trunc_degree = N;
    M.method = MatrixMethod::taylor;
    M.symbol_descriptor = phi.describe();

    // column k holds phi^k scaled by sqrt(w_j / w_k)
    std::vector<cdouble> pw(static_cast<std::size_t>(N) + 1, cdouble(0.0));
    pw[0] = 1.0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) pw = cauchy_product(pw, c, N);
        for (int j = 0; j <= N; ++j) {
            const cdouble cf = pw[static_cast<std::size_t>(j)];
            if (cf != cdouble(0.0))
                M.entries(j, k) = cf * std::exp(0.5 * (lw[static_cast<std::size_t>(j)] -
                                                       lw[static_cast<std::size_t>(k)]));
        }
    }
    return M;
}

Eigen::MatrixXcd gram_factor(const Symbol& phi, double alpha, int N,
                             const GramOptions& opt) {
    if (N < 1) throw domain_error("truncation degree must be >= 1");
    if (alpha != -1.0)
        throw domain_error("gram_factor holds node rows and is circle-only; "
                           "use gram_matrix for alpha > -1");
    return circle_factor(phi, alpha, N, opt);
}

OperatorMatrix gram_matrix(const Symbol& phi, double alpha, int N,
                           const GramOptions& opt) {
    if (N < 1) throw domain_error("truncation degree must be >= 1");
    Eigen::MatrixXcd G = assemble_gram(phi, alpha, N, opt);
    if (opt.check_convergence) {
        GramOptions fine = opt;
        fine.check_convergence = false;
        fine.radial_nodes = 2 * opt.radial_nodes;
        fine.angular_nodes = 2 * (opt.angular_nodes > 0 ? opt.angular_nodes
                                                        : std::max(4 * N, 256));
        fine.levels = opt.levels + 1;
        fine.panel_order = 2 * opt.panel_order;
        const Eigen::MatrixXcd G2 = assemble_gram(phi, alpha, N, fine);
        const double diff = (G - G2).cwiseAbs().maxCoeff();
        if (diff > opt.convergence_tol)
            throw numerical_error("gram matrix changed under quadrature refinement",
                                  G.cwiseAbs().maxCoeff(), G2.cwiseAbs().maxCoeff());
    }
    OperatorMatrix M;
    M.entries = 0.5 * (G + G.adjoint().eval()); // strips quadrature asymmetry
    M.alpha = alpha;
    M.trunc_degree = N;
    M.method = MatrixMethod::gram;
    M.symbol_descriptor = phi.describe();
    return M;
}

double adjoint_kernel_check(const Symbol& phi, double alpha, cdouble a, int N) {
    if (std::abs(a) > 0.9)
        throw domain_error("adjoint check needs |a| <= 0.9; the kernel tail "
                           "does not truncate otherwise");
    const OperatorMatrix M = taylor_matrix(phi, alpha, N);
    const cdouble b = phi.eval(a);

    Eigen::VectorXcd ua(N + 1), ub(N + 1);
    const auto ka = kernel_coords(a, alpha, N + 1);
    const auto kb = kernel_coords(b, alpha, N + 1);
    for (int k = 0; k <= N; ++k) {
        ua(k) = ka[static_cast<std::size_t>(k)];
        ub(k) = kb[static_cast<std::size_t>(k)];
    }
    return (M.entries.adjoint() * ua - ub).norm() / ub.norm();
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j).real() << ',' << m(i, j).imag();
        }
        out << '\n';
    }
}

} // namespace apx
