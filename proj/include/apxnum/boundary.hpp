#pragma once

#include "apxnum/symbols.hpp"

#include <vector>

namespace apx {

// Strip-map construction: f = s e^{i chi} with |f| <= 1 winds the segment
// (0, r] once around the circle of radius s = e^{-eps pi/2}.
struct SevilleParams {
    double r = 0.0;
    double rho = 0.0; // (1 - sqrt(1-r^2))/r
    double eps = 0.0; // pi / log((1+rho)/(1-rho))
    double s = 0.0;   // e^{-eps pi/2}
};

SevilleParams seville_params(double r);

// chi(z) = eps log((1 + m(z)) / (1 - m(z))) with m = (rho - z)/(1 - rho z);
// real and decreasing from pi to -pi along x in [0, r].
cdouble seville_chi(const SevilleParams& p, cdouble z);

cdouble seville_f(const SevilleParams& p, cdouble z);

// Inverse of chi restricted to [0, r]: the x with chi(x) = theta,
// theta in [-pi, pi], found by bisection.
double seville_x_of_theta(const SevilleParams& p, double theta);

// Moments m_k = int x^k dmu(x) of the pullback mu of the uniform circle
// measure under chi. Production route: the smooth density integral
// (1/2pi) int_0^r x^k (-chi'(x)) dx in extended precision.
std::vector<double> seville_moments(const SevilleParams& p, int pmax);

// Independent check route: (1/2pi) int_{-pi}^{pi} x(theta)^k dtheta with
// x(theta) from bisection, midpoint rule on theta_nodes points.
std::vector<double> seville_moments_bisect(const SevilleParams& p, int pmax,
                                           int theta_nodes);

struct RestrictionSpectrum {
    std::vector<double> values;   // a_n, descending (n = 1-based index + 1)
    std::vector<double> floors;   // s^n / sqrt(n)
    std::vector<bool> certified;  // above precision floor and node-stable
    double precision_floor = 0.0; // smallest trustworthy eigenvalue
    int digits10 = 0;
    SevilleParams params;
    double alpha = -1.0;
};

// Spectrum of the restriction operator into L^2(mu) on the first N+1 basis
// vectors: a_n = sqrt(eig_n) of the scaled moment matrix
// m_{j+k} / sqrt(w_j w_k), computed in extended precision. N <= 200.
RestrictionSpectrum restriction_spectrum(const SevilleParams& p, double alpha,
                                         int N, int digits10 = 100);

} // namespace apx
