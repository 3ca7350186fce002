#include "ybq/tensor.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace ybq {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

EigenSystem eig_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw BadShape("eig_hermitian: matrix not square");
  const double dev = (a - a.adjoint()).norm();
  if (dev > tol)
    throw NotHermitian("eig_hermitian: Hermiticity deviation " +
                       std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw Error("eig_hermitian: solver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw BadShape("expm: matrix not square");
  return a.exp();
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem which) {
  if (rho.rows() != 9 || rho.cols() != 9)
    throw BadShape("partial_transpose: expected 9x9");
  ComplexMatrix out(9, 9);
  for (int ia = 0; ia < 3; ++ia)
    for (int ib = 0; ib < 3; ++ib)
      for (int ja = 0; ja < 3; ++ja)
        for (int jb = 0; jb < 3; ++jb) {
          const int row = 3 * ia + ib, col = 3 * ja + jb;
          if (which == Subsystem::A)
            out(row, col) = rho(3 * ja + ib, 3 * ia + jb);
          else
            out(row, col) = rho(3 * ia + jb, 3 * ja + ib);
        }
  return out;
}

double trace_norm_hermitian(const ComplexMatrix& a, double tol) {
  return eig_hermitian(a, tol).values.cwiseAbs().sum();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return frobenius_distance(a, b) <= tol;
}

}  // namespace ybq
