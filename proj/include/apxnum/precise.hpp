#pragma once

#include <Eigen/Dense>

#include <vector>

namespace apx {

// Extended-precision fallbacks for spectra whose dynamic range exceeds what
// double SVD can resolve (absolute error ~ ||A|| * 1e-16). Inputs are double
// matrices; the decompositions run on software floats with digits10 decimal
// digits and the results are rounded back.

std::vector<double> singular_values_precise(const Eigen::MatrixXd& m, int digits10 = 60);

// Complex input is realified to [[Re, -Im], [Im, Re]], whose singular values
// are those of the input, each doubled; the duplicates are merged back.
std::vector<double> singular_values_precise(const Eigen::MatrixXcd& m, int digits10 = 60);

// Eigenvalues of a symmetric matrix, descending. Values may be negative.
std::vector<double> symmetric_eigenvalues_precise(const Eigen::MatrixXd& m, int digits10 = 60);

} // namespace apx
