#include "secia/numerics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace secia {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("numerics: " + msg);
}

void check_finite(const CMatrix& A, const char* who) {
  require(A.allFinite(), std::string(who) + ": matrix has non-finite entries");
}

// Validates hermiticity within a relative tolerance and returns the
// symmetrized (A + A^H)/2 so the solver sees an exactly Hermitian input.
CMatrix checked_hermitian(const CMatrix& A, const char* who) {
  require(A.rows() == A.cols(), std::string(who) + ": matrix must be square");
  check_finite(A, who);
  const double scale = std::max(1.0, A.norm());
  require((A - A.adjoint()).norm() <= kHermTol * scale,
          std::string(who) + ": matrix is not Hermitian");
  return 0.5 * (A + A.adjoint());
}

// Rotates each column so its largest-magnitude entry (lowest index on ties)
// is real and positive. Makes eigenvectors reproducible across backends,
// where they are otherwise only defined up to a unit phase.
void canonicalize_phase(CMatrix& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < V.rows(); ++r) {
      const double mag = std::abs(V(r, c));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best > 0.0) V.col(c) *= std::conj(V(pivot, c)) / best;
  }
}

Eigen::SelfAdjointEigenSolver<CMatrix> solve_hermitian(const CMatrix& A, const char* who) {
  const CMatrix H = checked_hermitian(A, who);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error(std::string("numerics: ") + who + ": eigensolver failed");
  return es;
}

}  // namespace

Orthonormal::Orthonormal(CMatrix basis, double tol) : basis_(std::move(basis)) {
  require(basis_.allFinite(), "Orthonormal: basis has non-finite entries");
  require(basis_.cols() <= basis_.rows(), "Orthonormal: more columns than rows");
  const Eigen::Index m = basis_.cols();
  const CMatrix gram = basis_.adjoint() * basis_;
  const double err = (gram - CMatrix::Identity(m, m)).norm();
  require(err <= tol, "Orthonormal: columns are not orthonormal (||U^H U - I||_F = " +
                          std::to_string(err) + ")");
}

EigSelection eig_smallest(const CMatrix& A, Eigen::Index d) {
  require(d >= 1 && d <= A.rows(), "eig_smallest: d out of range");
  const auto es = solve_hermitian(A, "eig_smallest");
  CMatrix V = es.eigenvectors().leftCols(d);  // ascending order already
  canonicalize_phase(V);
  return {Orthonormal(std::move(V)), es.eigenvalues().head(d)};
}

EigSelection eig_largest(const CMatrix& A, Eigen::Index m) {
  require(m >= 1 && m <= A.rows(), "eig_largest: m out of range");
  const auto es = solve_hermitian(A, "eig_largest");
  CMatrix V = es.eigenvectors().rightCols(m).rowwise().reverse();
  canonicalize_phase(V);
  return {Orthonormal(std::move(V)), es.eigenvalues().tail(m).reverse()};
}

SvdFactors svd(const CMatrix& A) {
  require(A.rows() >= 1 && A.cols() >= 1, "svd: matrix must be non-empty");
  check_finite(A, "svd");
  Eigen::JacobiSVD<CMatrix> dec(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {Orthonormal(dec.matrixU()), dec.singularValues(), Orthonormal(dec.matrixV())};
}

Orthonormal orthonormal_complement(const Orthonormal& U) {
  const Eigen::Index n = U.rows();
  const Eigen::Index m = U.cols();
  require(m < n, "orthonormal_complement: subspace already fills the space");
  // Full unitary Q from a QR of U; its first m columns span col(U), so the
  // remaining n-m columns are an orthonormal basis of the complement.
  Eigen::HouseholderQR<CMatrix> qr(U.matrix());
  CMatrix Q = qr.householderQ();
  return Orthonormal(Q.rightCols(n - m));
}

double projection_residual(const CMatrix& A, const Orthonormal& U) {
  require(A.rows() == U.rows(), "projection_residual: row counts differ");
  check_finite(A, "projection_residual");
  const CMatrix R = A - U.matrix() * (U.matrix().adjoint() * A);
  return R.squaredNorm();
}

double logdet2(const CMatrix& A) {
  const CMatrix H = checked_hermitian(A, "logdet2");
  Eigen::LLT<CMatrix> llt(H);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("numerics: logdet2: matrix is not positive definite");
  double acc = 0.0;
  const auto& L = llt.matrixLLT();
  for (Eigen::Index i = 0; i < H.rows(); ++i) {
    const double di = std::real(L(i, i));
    if (!(di > 0.0) || !std::isfinite(di))
      throw std::domain_error("numerics: logdet2: matrix is not positive definite");
    acc += 2.0 * std::log2(di);
  }
  return acc;
}

}  // namespace secia
