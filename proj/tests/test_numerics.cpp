#include "secia/numerics.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace secia;

namespace {

CMatrix diag3(double a, double b, double c) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

double subspace_gap(const CMatrix& A, const CMatrix& B) {
  return (A * A.adjoint() - B * B.adjoint()).norm();
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("orthonormal wrapper enforces its invariant") {
  CHECK_NOTHROW(Orthonormal(CMatrix::Identity(4, 2)));
  CMatrix bad = CMatrix::Identity(4, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(Orthonormal{bad}, std::invalid_argument);
  CHECK_THROWS_AS(Orthonormal(CMatrix::Identity(2, 4)), std::invalid_argument);

  const Orthonormal empty(CMatrix(3, 0));
  CHECK(empty.cols() == 0);
  CHECK(empty.projector().norm() == doctest::Approx(0.0));
}

TEST_CASE("eig_smallest on a diagonal matrix picks the bottom eigenpair") {
  const EigSelection sel = eig_smallest(diag3(3, 2, 1), 1);
  CHECK(sel.values(0) == doctest::Approx(1.0));
  CHECK(std::abs(sel.vectors.matrix()(2, 0)) == doctest::Approx(1.0));
  // Phase convention: dominant entry real positive.
  CHECK(sel.vectors.matrix()(2, 0).real() == doctest::Approx(1.0));
  CHECK(sel.vectors.matrix()(2, 0).imag() == doctest::Approx(0.0));
}

TEST_CASE("eig_smallest satisfies the eigen-residual contract on I_3") {
  const CMatrix A = CMatrix::Identity(3, 3);
  const EigSelection sel = eig_smallest(A, 2);
  const CMatrix U = sel.vectors.matrix();
  CHECK((A * U - U * sel.values.asDiagonal().toDenseMatrix().cast<Complex>()).norm() <=
        1e-10);
}

TEST_CASE("eig_smallest eigenvalues match the characteristic-polynomial oracle") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const CMatrix A = oracle::random_hermitian(4, seed);
    const EigSelection sel = eig_smallest(A, 4);
    const std::vector<double> roots = oracle::char_poly_eigenvalues(A);
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(sel.values(i) == doctest::Approx(roots[i]).epsilon(1e-8));
  }
}

TEST_CASE("eig_largest on a diagonal matrix spans the top block") {
  const EigSelection sel = eig_largest(diag3(3, 2, 1), 2);
  CHECK(sel.values(0) == doctest::Approx(3.0));
  CHECK(sel.values(1) == doctest::Approx(2.0));
  CMatrix top = CMatrix::Zero(3, 2);
  top(0, 0) = 1;
  top(1, 1) = 1;
  CHECK(subspace_gap(sel.vectors.matrix(), top) <= 1e-10);
}

TEST_CASE("eig_largest equals eig_smallest of the negated matrix as a subspace") {
  const CMatrix A = oracle::random_hermitian(6, 21);
  const CMatrix U1 = eig_largest(A, 3).vectors.matrix();
  const CMatrix U2 = eig_smallest(-A, 3).vectors.matrix();
  CHECK(subspace_gap(U1, U2) <= 1e-8);
}

TEST_CASE("eig_largest projector matches the full Jacobi-oracle decomposition") {
  const CMatrix A = oracle::random_hermitian(5, 31);
  const CMatrix U = eig_largest(A, 2).vectors.matrix();
  const oracle::JacobiEig full = oracle::jacobi_eig(A);
  const CMatrix top = full.vectors.rightCols(2);
  CHECK(subspace_gap(U, top) <= 1e-9);
}

TEST_CASE("eigen-selection residual stays small up to 32x32") {
  for (Eigen::Index n : {8, 17, 32}) {
    const CMatrix A = oracle::random_hermitian(n, 40 + static_cast<std::uint64_t>(n));
    const EigSelection sel = eig_smallest(A, n / 2);
    const CMatrix U = sel.vectors.matrix();
    const CMatrix lam = sel.values.asDiagonal().toDenseMatrix().cast<Complex>();
    CHECK((A * U - U * lam).norm() <= 1e-9 * A.norm());
    const EigSelection big = eig_largest(A, n / 2);
    const CMatrix Ub = big.vectors.matrix();
    const CMatrix lamb = big.values.asDiagonal().toDenseMatrix().cast<Complex>();
    CHECK((A * Ub - Ub * lamb).norm() <= 1e-9 * A.norm());
    // Values ordered as documented.
    for (Eigen::Index i = 1; i < sel.values.size(); ++i)
      CHECK(sel.values(i) >= sel.values(i - 1));
    for (Eigen::Index i = 1; i < big.values.size(); ++i)
      CHECK(big.values(i) <= big.values(i - 1));
  }
}

TEST_CASE("eig rejects bad inputs") {
  CHECK_THROWS_AS(eig_smallest(diag3(1, 2, 3), 4), std::invalid_argument);
  CHECK_THROWS_AS(eig_smallest(diag3(1, 2, 3), 0), std::invalid_argument);
  CHECK_THROWS_AS(eig_smallest(CMatrix::Zero(2, 3), 1), std::invalid_argument);
  CMatrix skew = CMatrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  skew(1, 0) = 2.0;
  CHECK_THROWS_AS(eig_smallest(skew, 1), std::invalid_argument);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(eig_largest(nan, 1), std::invalid_argument);
}

TEST_CASE("eig output is deterministic within a build") {
  const CMatrix A = oracle::random_hermitian(7, 99);
  const CMatrix U1 = eig_smallest(A, 3).vectors.matrix();
  const CMatrix U2 = eig_smallest(A, 3).vectors.matrix();
  CHECK((U1 - U2).norm() == 0.0);
}

TEST_CASE("svd of the identity") {
  const SvdFactors f = svd(CMatrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(f.singular_values(i) == doctest::Approx(1.0));
}

TEST_CASE("svd of the zero matrix") {
  const SvdFactors f = svd(CMatrix::Zero(2, 3));
  REQUIRE(f.singular_values.size() == 2);
  CHECK(f.singular_values(0) == 0.0);
  CHECK(f.singular_values(1) == 0.0);
  CHECK(f.left.cols() == 2);
  CHECK(f.right.cols() == 3);
}

TEST_CASE("svd reconstructs and matches the Gram-matrix eigenvalue oracle") {
  const CMatrix A = oracle::random_complex(3, 5, 71);
  const SvdFactors f = svd(A);
  CMatrix sigma = CMatrix::Zero(3, 5);
  for (int i = 0; i < 3; ++i) sigma(i, i) = f.singular_values(i);
  CHECK((A - f.left.matrix() * sigma * f.right.matrix().adjoint()).norm() <=
        1e-10 * A.norm());
  for (int i = 1; i < 3; ++i) CHECK(f.singular_values(i) <= f.singular_values(i - 1));
  CHECK(f.singular_values(2) >= 0.0);

  const oracle::JacobiEig gram = oracle::jacobi_eig(A * A.adjoint());
  for (int i = 0; i < 3; ++i) {
    const double sv2 = f.singular_values(i) * f.singular_values(i);
    CHECK(sv2 == doctest::Approx(gram.values(2 - i)).epsilon(1e-8));
  }
}

TEST_CASE("orthonormal_complement completes the canonical basis") {
  const Orthonormal U(CMatrix::Identity(4, 2));
  const Orthonormal W = orthonormal_complement(U);
  REQUIRE(W.cols() == 2);
  CMatrix tail = CMatrix::Zero(4, 2);
  tail(2, 0) = 1;
  tail(3, 1) = 1;
  CHECK(subspace_gap(W.matrix(), tail) <= 1e-10);
}

TEST_CASE("orthonormal_complement forms a unitary completion") {
  const CMatrix G = oracle::random_complex(6, 2, 77);
  Eigen::HouseholderQR<CMatrix> qr(G);
  const Orthonormal U(CMatrix(qr.householderQ() * CMatrix::Identity(6, 2)));
  const Orthonormal W = orthonormal_complement(U);
  CHECK((W.matrix().adjoint() * U.matrix()).norm() <= 1e-10);
  CMatrix full(6, 6);
  full << U.matrix(), W.matrix();
  CHECK((full.adjoint() * full - CMatrix::Identity(6, 6)).norm() <= 1e-10);
  // Projector sum is the identity.
  CHECK((U.projector() + W.projector() - CMatrix::Identity(6, 6)).norm() <= 1e-10);
  CHECK_THROWS_AS(orthonormal_complement(Orthonormal(CMatrix::Identity(3, 3))),
                  std::invalid_argument);
}

TEST_CASE("projection_residual handles contained and orthogonal inputs") {
  const Orthonormal U(CMatrix::Identity(4, 2));
  CMatrix inside = CMatrix::Zero(4, 3);
  inside(0, 0) = 2.0;
  inside(1, 1) = Complex(0, 1);
  inside(0, 2) = 1.0;
  inside(1, 2) = 1.0;
  CHECK(projection_residual(inside, U) <= 1e-12);

  CMatrix outside = CMatrix::Zero(4, 2);
  outside(2, 0) = 3.0;
  outside(3, 1) = Complex(0, 4);
  CHECK(projection_residual(outside, U) == doctest::Approx(25.0));
}

TEST_CASE("projection_residual matches the explicit-projector oracle") {
  const CMatrix A = oracle::random_complex(6, 4, 81);
  const CMatrix G = oracle::random_complex(6, 3, 82);
  Eigen::HouseholderQR<CMatrix> qr(G);
  const Orthonormal U(CMatrix(qr.householderQ() * CMatrix::Identity(6, 3)));
  const CMatrix Pperp = CMatrix::Identity(6, 6) - U.matrix() * U.matrix().adjoint();
  CHECK(projection_residual(A, U) == doctest::Approx((Pperp * A).squaredNorm()).epsilon(1e-12));
  CHECK(projection_residual(A, U) <= A.squaredNorm());
  CHECK_THROWS_AS(projection_residual(CMatrix::Zero(5, 2), U), std::invalid_argument);
}

TEST_CASE("projection_residual depends only on the subspace") {
  const CMatrix A = oracle::random_complex(5, 3, 91);
  const CMatrix G = oracle::random_complex(5, 2, 92);
  Eigen::HouseholderQR<CMatrix> qr(G);
  const CMatrix Q = qr.householderQ() * CMatrix::Identity(5, 2);
  // Rotate the basis by an arbitrary 2x2 unitary.
  CMatrix R(2, 2);
  const double c = std::cos(0.7), s = std::sin(0.7);
  R << Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0);
  const double r1 = projection_residual(A, Orthonormal(Q));
  const double r2 = projection_residual(A, Orthonormal(CMatrix(Q * R)));
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-10));
}

TEST_CASE("logdet2 basics") {
  CHECK(logdet2(CMatrix::Identity(5, 5)) == doctest::Approx(0.0));
  CMatrix d2 = CMatrix::Zero(2, 2);
  d2(0, 0) = 2.0;
  d2(1, 1) = 4.0;
  CHECK(logdet2(d2) == doctest::Approx(3.0));
}

TEST_CASE("logdet2 matches the eigenvalue oracle on random PD input") {
  const CMatrix A = oracle::random_pd(5, 101);
  const oracle::JacobiEig eig = oracle::jacobi_eig(A);
  double expect = 0.0;
  for (int i = 0; i < 5; ++i) expect += std::log2(eig.values(i));
  CHECK(logdet2(A) == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("logdet2 survives determinants far outside double range") {
  const int n = 64;
  const CMatrix A = 1e8 * CMatrix::Identity(n, n);
  // det = 1e512 overflows a double; the log must not.
  CHECK(logdet2(A) == doctest::Approx(n * std::log2(1e8)).epsilon(1e-12));
}

TEST_CASE("logdet2 rejects non-positive-definite input") {
  CMatrix indef = CMatrix::Identity(3, 3);
  indef(2, 2) = -1.0;
  CHECK_THROWS_AS(logdet2(indef), std::domain_error);
  CHECK_THROWS_AS(logdet2(CMatrix::Zero(2, 2)), std::domain_error);
}

}  // TEST_SUITE
