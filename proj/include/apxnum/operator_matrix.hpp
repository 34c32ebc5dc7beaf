#pragma once

#include "apxnum/symbols.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>

namespace apx {

enum class MatrixMethod { taylor, gram };

// Truncated matrix of the composition operator on the orthonormal basis
// e_k = z^k / sqrt(w_k), k = 0..N. For the taylor method `entries` is the
// operator matrix itself; for the gram method it is G with
// G(j,k) = <C e_j, C e_k>, Hermitian PSD, whose eigenvalue square roots are
// the singular values of the truncation.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    double alpha = -1.0;
    int trunc_degree = 0;
    MatrixMethod method = MatrixMethod::taylor;
    std::string symbol_descriptor;
};

struct GramOptions {
    // alpha > -1: tensor rule, radial Jacobi nodes x uniform angles.
    int radial_nodes = 256;
    int angular_nodes = 0; // 0 = automatic from the truncation degree

    // alpha == -1: circle rule at radius boundary_radius, graded dyadically
    // toward the two points the builtin boundary-touching symbols pinch at.
    int levels = 48;
    int panel_order = 32;
    double boundary_radius = 1.0 - 1e-6;

    // Re-run at doubled resolution and fail if the two Gram matrices differ
    // by more than convergence_tol in max norm.
    bool check_convergence = false;
    double convergence_tol = 1e-8;
};

// Column k holds the basis coefficients of (phi)^k / sqrt(w_k), built by
// iterated truncated Cauchy products. Entry (j,k) = c_{j,k} sqrt(w_j / w_k).
OperatorMatrix taylor_matrix(const Symbol& phi, double alpha, int N);

// Quadrature factor X of the Gram matrix: rows indexed by nodes,
// X(q,k) = sqrt(omega_q) phi(z_q)^k / sqrt(w_k), so that G = X^H X.
Eigen::MatrixXcd gram_factor(const Symbol& phi, double alpha, int N,
                             const GramOptions& opt = {});

OperatorMatrix gram_matrix(const Symbol& phi, double alpha, int N,
                           const GramOptions& opt = {});

// Relative residual of the kernel identity M^H u(a) = u(phi(a)) on the
// truncated coefficient vectors u_k(a) = conj(a)^k / sqrt(w_k).
double adjoint_kernel_check(const Symbol& phi, double alpha, cdouble a, int N);

// Row-major CSV, complex entries as re,im column pairs.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m);

} // namespace apx
