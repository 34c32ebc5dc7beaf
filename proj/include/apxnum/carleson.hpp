#pragma once

#include "apxnum/symbols.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace apx {

// Window W(xi, h): |z| >= 1-h and |arg(z conj(xi))| <= pi h, xi = e^{i xi_angle}.
bool window_contains(cdouble z, double xi_angle, double h);

// Monte Carlo estimate of the maximal window mass of the pushforward of the
// normalized alpha-measure under phi: rho(h) = sup_xi mu(W(xi, h)).
struct CarlesonProfile {
    std::vector<double> h_grid;  // decreasing
    std::vector<double> rho_hat; // window mass estimates, in [0,1]
    std::vector<double> std_err; // binomial error at the maximizing window
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    double alpha = -1.0;
    int angular_bins = 0;
};

struct ProfileOptions {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    int angular_bins = 4096;
    int streams = 8; // sampling split over independent substreams
    double boundary_radius = 1.0 - 1e-6; // alpha == -1 evaluation radius
};

std::vector<double> default_h_grid(); // geometric, 0.5 down to 1e-3

CarlesonProfile pushforward_profile(const Symbol& phi, double alpha,
                                    std::vector<double> h_grid,
                                    const ProfileOptions& opt = {});

// Least-squares slope of log rho against log h over h in [h_lo, h_hi],
// weighted by expected bin counts (empty bins carry no information).
double profile_slope(const CarlesonProfile& p, double h_lo = 1e-3,
                     double h_hi = 1e-1);

// sup over the grid of sqrt(rho(h) / h^(2+alpha)): the embedding norm shape
// (the equivalence constant is unknown and never asserted).
double embedding_norm_shape(const CarlesonProfile& p);

struct TernaryResult {
    double value = 0.0;
    double h_min = 0.0; // minimizing window size
    bool boundary_warning = false; // minimizer pinned at the h range edge
};

// inf over h of n^((alpha+1)/2) (1-h)^n + sqrt(rho(h)/h^(2+alpha)),
// grid scan plus golden-section refinement; shape value with constant 1.
TernaryResult ternary_upper_bound(int n, double alpha,
                                  const std::function<double(double)>& rho);
TernaryResult ternary_upper_bound(int n, const CarlesonProfile& p);

// n^((alpha+1)/2) exp(-n A^{-1}(1/(2n))) for increasing A with A(0) = 0;
// the inverse is found by bisection on (0, 1].
double supper_bound(int n, double alpha, const std::function<double(double)>& A);

// (log n / n)^gamma with gamma = (beta-1)(alpha+2)/2; requires beta > 1, n >= 2.
double imprecise_bound(int n, double alpha, double beta_exp);

// Schatten membership threshold p* = 2 / ((beta-1)(alpha+2)).
double schatten_threshold(double alpha, double beta_exp);

// Inverse of a univalent builtin symbol with an explicit inverse chain
// (identity, shrink, affine, mobius, lens, and their conjugates/compositions).
cdouble symbol_inverse(const Symbol& phi, cdouble w);

// Generalized counting function [log(1/|phi^{-1}(w)|)]^(alpha+2) for
// univalent symbols; w must lie in the image, w != phi(0).
double nevanlinna(const Symbol& phi, cdouble w, double alpha);

// Partial counting function N(r, w) = max(0, log(r / |phi^{-1}(w)|)).
double nevanlinna_partial(const Symbol& phi, double r, cdouble w);

// Quadrature of (alpha+2)(alpha+1) int_0^1 N(r,w) [log(1/r)]^alpha dr/r,
// which reproduces nevanlinna(phi, w, alpha) exactly for univalent symbols.
// Defined for alpha > -1 only (the prefactor degenerates at alpha = -1).
double nevanlinna_integral_check(const Symbol& phi, cdouble w, double alpha);

} // namespace apx
