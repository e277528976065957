#include "permdyn/complex_matrix.hpp"

namespace permdyn {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a - b);
}

double unitarity_residual(const ComplexMatrix& m) {
  return max_abs(m * m.adjoint() -
                 ComplexMatrix::Identity(m.rows(), m.cols()));
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

}  // namespace permdyn
