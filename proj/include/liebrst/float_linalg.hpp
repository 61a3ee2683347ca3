#pragma once

#include "liebrst/rational_matrix.hpp"

#include <Eigen/Dense>

#include <complex>

namespace liebrst {

using FloatMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

FloatMatrix to_float(const RationalMatrix& m);
ComplexMatrix to_complex(const RationalMatrix& m);

bool all_finite(const FloatMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// exp(M) by scaling and squaring around a truncated Taylor core. The core
/// runs on a matrix of 1-norm at most 1/2, where 24 terms reach double
/// precision. Throws std::invalid_argument for non-square or non-finite input.
FloatMatrix matrix_exponential(const FloatMatrix& m);
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const FloatMatrix& m);
double spectral_norm(const ComplexMatrix& m);

/// Smallest eigenvalue of a symmetric matrix. Throws std::invalid_argument
/// when |M - M^T| exceeds 1e-10 entrywise.
double symmetric_eigen_min(const FloatMatrix& m);

}  // namespace liebrst
