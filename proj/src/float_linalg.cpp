#include "liebrst/float_linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace liebrst {

FloatMatrix to_float(const RationalMatrix& m)
{
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

ComplexMatrix to_complex(const RationalMatrix& m)
{
  return to_float(m).cast<Complex>();
}

bool all_finite(const FloatMatrix& m)
{
  return m.allFinite();
}

bool all_finite(const ComplexMatrix& m)
{
  return m.real().allFinite() && m.imag().allFinite();
}

namespace {

template <typename Matrix>
Matrix exp_scaling_squaring(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: matrix not square");
  if (!all_finite(m)) throw std::invalid_argument("matrix_exponential: non-finite entries");
  const auto n = m.rows();
  if (n == 0) return Matrix(0, 0);

  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Matrix scaled = m / std::ldexp(1.0, squarings);

  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace

FloatMatrix matrix_exponential(const FloatMatrix& m)
{
  return exp_scaling_squaring(m);
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m)
{
  return exp_scaling_squaring(m);
}

double spectral_norm(const FloatMatrix& m)
{
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<FloatMatrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_norm(const ComplexMatrix& m)
{
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double symmetric_eigen_min(const FloatMatrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric_eigen_min: matrix not square");
  if (m.size() == 0) throw std::invalid_argument("symmetric_eigen_min: empty matrix has no eigenvalues");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("symmetric_eigen_min: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<FloatMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace liebrst
