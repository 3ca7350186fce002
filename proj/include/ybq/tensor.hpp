#pragma once

#include "ybq/types.hpp"

namespace ybq {

/// Kronecker product: (a (x) b)[i*br+k, j*bc+l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Spectral data of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns of `vectors`.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Diagonalize a Hermitian matrix. Throws NotHermitian if
/// ||a - a^dag||_F exceeds `tol`. Degenerate subspaces come back with an
/// arbitrary orthonormal basis.
EigenSystem eig_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

/// Matrix exponential (Pade scaling-and-squaring).
ComplexMatrix expm(const ComplexMatrix& a);

enum class Subsystem { A, B };

/// Partial transpose of a two-qutrit density matrix (9x9) on the chosen
/// factor: (rho^{T_A})[(iA,iB),(jA,jB)] = rho[(jA,iB),(iA,jB)].
/// Pure index permutation; preserves trace and Hermiticity exactly.
ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                Subsystem which = Subsystem::A);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Norm-distance comparison; the only sanctioned equality test for matrices.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);

}  // namespace ybq
