#pragma once

#include <complex>
#include <vector>

namespace apx {

using cdouble = std::complex<double>;

// Monomial weights of the weighted Bergman space on the unit disk with
// parameter alpha >= -1.  The squared norm of sum a_k z^k is sum w_k |a_k|^2.
// alpha = -1 is the Hardy-space case and every weight is exactly 1.
double weight(int k, double alpha);

// log of weight(k, alpha); safe for large k where the weight underflows.
double log_weight(int k, double alpha);

// Weights 0..n as a vector.
std::vector<double> weights(int n, double alpha);

double norm_sq(const std::vector<cdouble>& coeffs, double alpha);
double norm(const std::vector<cdouble>& coeffs, double alpha);
cdouble inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b, double alpha);

// Squared norm of the reproducing kernel at a, |a| < 1.
double kernel_norm_sq(cdouble a, double alpha);

// K_a(z) = (1 - conj(a) z)^{-(alpha+2)}.
cdouble kernel_eval(cdouble a, cdouble z, double alpha);

// Coordinates of K_a in the orthonormal basis e_k = z^k / sqrt(w_k):
// coordinate k is conj(a)^k / sqrt(w_k).
std::vector<cdouble> kernel_coords(cdouble a, double alpha, int n);

// Certified upper bound on sum_{k>N} rho^k / w_k, the kernel expansion tail
// at |conj(a) z| <= rho.  Exact leading terms plus a geometric majorant once
// the term ratio rho*(k+2+alpha)/(k+1) drops below (1+rho)/2.
double kernel_tail_bound(double rho, double alpha, int N);

// n-th harmonic number.
double harmonic(int n);

// exp((alpha+1) H_n): bound on the weight ratio w_k / w_{k+n} uniform in k.
double tail_quotient_bound(int n, double alpha);

struct DivideResult {
    std::vector<cdouble> quotient; // g with f = z^n g
    double ratio;                  // norm(g) / norm(f)
    double bound;                  // sqrt(tail_quotient_bound(n, alpha)), ratio <= bound
};

// Divide f by z^n.  Requires the first n coefficients to vanish (within tol,
// default exact zero) and f nonzero.
DivideResult divide_by_zn(const std::vector<cdouble>& coeffs, int n, double alpha,
                          double tol = 0.0);

} // namespace apx
