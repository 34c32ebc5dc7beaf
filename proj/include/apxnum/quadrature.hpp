#pragma once

#include <vector>

namespace apx {

struct Quad1D {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre rule on [-1, 1].
Quad1D gauss_legendre(int n);

// Rule for the normalized radial Bergman measure in the variable u = r^2:
// integrates f over [0, 1] against (alpha+1)(1-u)^alpha du, alpha > -1.
// Weights sum to 1.  Gauss-Jacobi, so the endpoint singularity for
// alpha in (-1, 0) is handled exactly.
Quad1D radial_bergman(int n, double alpha);

// Angles and weights for the normalized arc measure dt/(2pi) on (-pi, pi),
// graded dyadically toward t = 0 and t = +-pi with a fixed-order
// Gauss-Legendre panel at each level.  Integrands may concentrate sharply at
// those angles (images of boundary-touching symbols); the grading resolves
// features down to width ~ pi * 2^-levels.
Quad1D graded_circle(int levels, int order);

// Uniform angles (trapezoid on the circle), weights 1/m.
Quad1D uniform_circle(int m);

} // namespace apx
