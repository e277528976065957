#pragma once

#include <Eigen/Dense>
#include <complex>

namespace permdyn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);

/// Largest entry magnitude of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude of m m^dagger - 1.
double unitarity_residual(const ComplexMatrix& m);

/// Largest entry magnitude of m - m^dagger.
double hermiticity_residual(const ComplexMatrix& m);

}  // namespace permdyn
