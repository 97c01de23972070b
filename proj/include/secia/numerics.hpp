#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace secia {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Tolerance for the orthonormality invariant ||U^H U - I||_F.
inline constexpr double kOrthoTol = 1e-10;
/// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermTol = 1e-10;

/// Matrix whose columns form an orthonormal basis of a subspace.
///
/// The constructor enforces ||U^H U - I||_F <= tol and throws
/// std::invalid_argument otherwise. A 0-column basis is permitted and
/// represents the trivial subspace.
class Orthonormal {
 public:
  Orthonormal() = default;
  explicit Orthonormal(CMatrix basis, double tol = kOrthoTol);

  const CMatrix& matrix() const noexcept { return basis_; }
  Eigen::Index rows() const noexcept { return basis_.rows(); }
  Eigen::Index cols() const noexcept { return basis_.cols(); }
  bool empty() const noexcept { return basis_.size() == 0; }

  /// The orthogonal projector U U^H onto the spanned subspace.
  CMatrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  CMatrix basis_;
};

/// A selected eigenbasis of a Hermitian matrix: orthonormal eigenvectors
/// plus their real eigenvalues, ordered as documented by the producing call.
struct EigSelection {
  Orthonormal vectors;
  RVector values;
};

/// Eigenvectors of the d smallest eigenvalues of Hermitian A, eigenvalues
/// ascending. Columns are phase-normalized: the entry of largest magnitude
/// (lowest index on ties) is made real and positive, so repeated calls and
/// different backends agree on more than the subspace.
///
/// Throws std::invalid_argument if A is not square, not finite, not
/// Hermitian within kHermTol * max(1, ||A||_F), or d is out of range.
EigSelection eig_smallest(const CMatrix& A, Eigen::Index d);

/// Same contract as eig_smallest but the m largest eigenvalues,
/// descending (dominant eigenvector first).
EigSelection eig_largest(const CMatrix& A, Eigen::Index m);

/// Full singular value decomposition A = L diag(s) R^H.
struct SvdFactors {
  Orthonormal left;          // p x p
  RVector singular_values;   // min(p, q), descending, non-negative
  Orthonormal right;         // q x q
};
SvdFactors svd(const CMatrix& A);

/// Orthonormal basis W (n x (n-m)) of the orthogonal complement of the
/// column span of U (n x m, m < n): W^H U = 0, W^H W = I.
Orthonormal orthonormal_complement(const Orthonormal& U);

/// Squared Frobenius norm of the component of A outside span(U):
/// ||(I - U U^H) A||_F^2, computed without forming the projector.
double projection_residual(const CMatrix& A, const Orthonormal& U);

/// log2(det(A)) for Hermitian positive definite A, via Cholesky, so that
/// determinants far outside double range still evaluate. Throws
/// std::domain_error if the factorization finds A not positive definite.
double logdet2(const CMatrix& A);

}  // namespace secia
