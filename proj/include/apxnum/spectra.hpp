#pragma once

#include "apxnum/operator_matrix.hpp"
#include "apxnum/symbols.hpp"

#include <Eigen/Dense>

#include <vector>

namespace apx {

// Approximation numbers a_1 >= a_2 >= ... of a truncated operator together
// with an a posteriori stability diagnostic: the relative change of each
// value between the truncation N and the N/2 rerun. Indices whose change
// exceeds the gate keep their value but are flagged unstable.
struct SingularSpectrum {
    std::vector<double> values;
    std::vector<double> stability; // empty when no N/2 rerun was made
    std::vector<bool> stable;      // same length as values
    int trunc_degree = 0;
    double stability_gate = 0.05;

    bool all_stable() const;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Finite-sample decay summary. beta_hat is the minimum of a_n^{1/n} over the
// tail quarter of the stable window: a proxy for liminf a_n^{1/n}, biased
// low only when a_n^{1/n} is monotone on the window, hence the spread and
// monotonicity fields.
struct DecayReport {
    double beta_hat = 0.0;
    double window_min = 0.0; // min/max of a_n^{1/n} over the whole window
    double window_max = 0.0;
    int window_begin = 0; // 1-based n range, inclusive
    int window_end = 0;
    bool monotone_window = false;
    LinearFit fit_exp;  // log a_n against n
    LinearFit fit_sqrt; // log a_n against sqrt(n)
};

enum class Precision { automatic, double_only, extended };

// Singular values, descending. `automatic` redoes the decomposition in
// extended precision when the spread min/max falls below 1e-12 and the
// matrix is small enough (dimension <= 257); `extended` forces that path.
std::vector<double> singular_values(const Eigen::MatrixXcd& m,
                                    Precision precision = Precision::automatic,
                                    int digits10 = 60);
std::vector<double> singular_values(const Eigen::MatrixXd& m,
                                    Precision precision = Precision::automatic,
                                    int digits10 = 60);

struct ApproxOptions {
    int trunc = 0; // 0 = automatic: max(512, 4*n_max), 2048 for
                   // lens-type symbols (gram method)
    bool force_method = false;
    MatrixMethod method = MatrixMethod::taylor; // used when force_method
    GramOptions gram;
    double stability_gate = 0.05;
    bool stability_run = true; // rerun at N/2 and flag unstable indices
    Precision precision = Precision::automatic;
    int digits10 = 60;
};

// a_1..a_n_max of the truncated C_phi on B_alpha. Requires the headroom
// n_max <= N/4; the automatic truncation enforces it.
SingularSpectrum approx_numbers(const Symbol& phi, double alpha, int n_max,
                                const ApproxOptions& opt = {});

// Needs at least 8 stable values.
DecayReport beta_estimate(const SingularSpectrum& s);

// Eigenvalues (psi'(0)^k), k = 0..n-1, of the compact composition operator
// with fixed point 0. |psi'(0)| = 1 is rejected: the operator would not be
// compact and the sequence claim does not apply (identity, rotations,
// automorphism conjugates). psi'(0) == 0 returns the degenerate empty
// sequence.
std::vector<cdouble> eigenvalue_sequence(const Symbol& psi, int n);

struct WeylResult {
    double lhs = 0.0; // product of the n largest singular values
    double rhs = 0.0; // product of the n largest eigenvalue moduli
    bool ok = false;  // lhs >= rhs up to 1e-10 relative slack
};

WeylResult weyl_check(const Eigen::MatrixXcd& m, int n);

// Explicit floor delta^2/norm_T * r^(2n).
double lemma_second_floor(double delta, double r, double norm_T, int n);

struct SecondaryReport {
    double kappa = 0.0;
    double c_kappa = 0.0; // largest c with a_n >= c kappa^(2n) on the window
    bool c_positive = false;
    double beta_hat = 0.0;
    bool beta_ok = false; // beta_hat >= kappa^2 - tol
    double tol = 0.0;
    double bracket_value = 0.0;
};

// Requires kappa < bracket(phi) (certified grid lower estimate).
SecondaryReport secondary_lower_bound(const Symbol& phi, double kappa,
                                      const SingularSpectrum& s,
                                      double tol = 0.05);

} // namespace apx
