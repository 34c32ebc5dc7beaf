#pragma once

#include "apxnum/symbols.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace apx {

// Smallest pointwise dominating sequence that is decreasing and log-convex:
// delta_{n+1} = max(eps_{n+1}, delta_n^2 / delta_{n-1}). A non-strictly
// decreasing input is first perturbed to eps_n + 1/n.
std::vector<double> logconvexify(const std::vector<double>& eps);

struct CarlesonConstants {
    double delta = 1.0;             // min over points
    std::vector<double> per_point;  // delta_n = prod_{j != n} rho(z_n, z_j)
};

CarlesonConstants carleson_constant(const std::vector<cdouble>& points);

struct InterpolationBounds {
    double lower = 1.0;  // 1/delta
    double upper = 1.0;  // lambda (1 + log(1/delta)) / delta
    double lambda = 1.0; // the unpinned numerical constant, reported
};

InterpolationBounds interpolation_constant_bounds(double delta, double lambda = 1.0);

// Carleson-constant floors for geometric-type radial sequences.
double hadlac_floor(double sigma);                 // exp(-(pi^2/2)/(1-sigma))
double hoffman_product(double sigma, int terms);   // prod ((1-s^j)/(1+s^j))^2
double boue_floor(double sigma, double theta);     // exp(-a_theta/(1-sigma)), a_theta = pi^2/(2^theta theta)
double boue_sigma_prime(double sigma, double theta); // 1 - (theta/2) 2^theta (1-sigma)

struct RadialSequence {
    std::vector<double> points; // increasing, in (0,1)

    std::vector<double> ratios() const; // (1-r_{n+1})/(1-r_n)
    double max_ratio() const;
    bool hayman_newman() const { return max_ratio() < 1.0; }
};

RadialSequence make_radial_sequence(std::vector<double> points);

// Weighted backward shift modeling the compression of the adjoint onto the
// kernel span of a radial sequence: w_n = |h(r_{n+1})| * (||K_{r_n}|| / ||K_{r_{n+1}}||)
// with the alpha-space kernel norms.
struct ShiftModel {
    std::vector<double> weights; // moduli |w_n|, n = 1..M-1
    double alpha = -1.0;
    std::string h_descriptor;
    RadialSequence source;
};

// Default multiplier h(z) = z - r_1.
ShiftModel shift_from_sequence(const RadialSequence& r, double alpha);
ShiftModel shift_from_sequence(const RadialSequence& r, double alpha,
                               const std::function<cdouble(double)>& h,
                               const std::string& h_descriptor);

// Dense (M+1)x(M+1) matrix of the shift e_{n+1} -> w_n e_n, e_1 -> 0.
Eigen::MatrixXd shift_matrix(const std::vector<double>& weights);

// Singular values of the shift are the weight moduli sorted descending.
double shift_singular(const ShiftModel& m, int n);

// Lemma-style minoration: eps nonincreasing with |w_n| >= eps_n for all n
// implies a_n(B) >= eps_n. Returns false when a premise or the conclusion
// fails numerically.
bool minoration_check(const std::vector<double>& weights,
                      const std::vector<double>& eps);

struct PipelineReport {
    std::vector<double> eps;       // input
    std::vector<double> delta_seq; // log-convexified (and normalized) floor
    bool normalized = false;       // scaled down when delta_1 >= 1
    double C0 = 1.0;
    std::vector<double> A_n; // (1/C0) log(1/delta_n)
    ShiftModel model;
    double d = 0.0; // (r_2 - r_1) * 2^{-(alpha+2)/2}
    bool hayman_ok = false;     // ratios strictly below 1
    bool weights_ok = false;    // |w_n| >= d delta_n
    bool minoration_ok = false; // a_n(B) >= d delta_n
    double interp_upper = 1.0;  // C for the constructed sequence
    double floor_constant = 0.0; // d / (2 C^2), the inherited-floor constant
    std::vector<double> a_n; // shift approximation numbers, descending
};

// Synthetic slow-decay construction: exact-ratio radial sequence with
// (1-r_{n+1})/(1-r_n) = exp(-2 C0 A_n), r_1 = 1/2, shift weights from the
// default multiplier, and the three floor checks.
PipelineReport slow_decay_pipeline(const std::vector<double>& eps, double C0,
                                   int M, double alpha = -1.0);

// Star-shaped comparison domain |Im w| < psi(|Re w|) built from an
// increasing concave positive sequence A_n = A(e^{n-1}).
struct OmegaDomain {
    std::vector<double> A_seq;
    double K = 0.0; // 2K = 1/A(1)

    double A(double t) const;   // piecewise-linear on (0,1), (e^{n-1}, e^n)
    double psi(double t) const; // K(1+|t|) for |t| <= 1, else |t|/A(|t|)
    bool contains(cdouble w) const;
};

OmegaDomain make_omega(std::vector<double> A_seq);

enum class RectBound { upper, lower };

// Hyperbolic-distance bounds across a rectangle-like strip piece:
// upper: (pi/(4b))(a2-a1) + pi/2; lower: (pi/(4c))(a2-a1) - pi/2.
double hayman_rect_bound(double a1, double a2, double b_or_c, RectBound kind);

struct PoincareSandwich {
    double lo = 0.0;  // exp(-2 d(a,b))
    double mid = 0.0; // (1-b)/(1-a)
    double hi = 0.0;  // 2 lo
};

PoincareSandwich poincare_sandwich(double a, double b);

struct LensLowerBound {
    double floor = 0.0;
    double b_theta = 0.0; // pi sqrt(2(1-theta)/theta)
    double sigma = 0.0;
    double a_theta = 0.0; // pi^2/theta
    double lambda = 0.0;  // sqrt(2 a_theta / (1-theta))
    double C_u = 1.0;
    double C_v = 1.0;
};

// Explicit floor (1/2) C_u^{-1} C_v^{-1} sigma^{n(1-theta)/2} at the tuned
// sigma = 1 - lambda/sqrt(n); requires n large enough that sigma > 0.
LensLowerBound lens_lower_bound(double theta, int n);

// Same floor maximized over sigma in (0,1); valid for every n since the
// bound holds for each sigma.
LensLowerBound lens_lower_bound_best(double theta, int n);

} // namespace apx
