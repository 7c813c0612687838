#include "test_util.hpp"

namespace qhs {
namespace {

using testing::expect_matrix_near;
using testing::random_matrix;

TEST(Matrix, ConstructionRejectsBadInput) {
  EXPECT_THROW(Matrix(0), std::invalid_argument);
  EXPECT_THROW(Matrix(2, std::vector<cplx>(3)), std::invalid_argument);
  std::vector<cplx> bad(4, 0.0);
  bad[2] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  EXPECT_THROW(Matrix(2, bad), std::invalid_argument);
  EXPECT_THROW((Matrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST(Matrix, QubitCountRequiresPowerOfTwo) {
  EXPECT_EQ(Matrix::identity(8).qubit_count(), 3);
  EXPECT_THROW(Matrix::identity(6).qubit_count(), std::invalid_argument);
}

TEST(Kron, IdentityTimesIdentity) {
  expect_matrix_near(kron(Matrix::identity(2), Matrix::identity(2)),
                     Matrix::identity(4), 0.0);
}

TEST(Kron, BuildsTheBraidMatrix) {
  // (I + i X(x)Y)/sqrt(2) must equal the explicit 4x4 entries.
  const Matrix xy = kron(pauli_matrix('X'), pauli_matrix('Y'));
  Matrix built = Matrix::identity(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      built(i, j) = (built(i, j) + cplx(0, 1) * xy(i, j)) / std::numbers::sqrt2;
  const double s = 1.0 / std::numbers::sqrt2;
  const Matrix expected{{s, 0, 0, s}, {0, s, -s, 0}, {0, s, s, 0}, {-s, 0, 0, s}};
  expect_matrix_near(built, expected, 1e-15);
}

TEST(Kron, TraceIsMultiplicative) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(2, g), b = random_matrix(2, g);
    const Matrix k = kron(a, b);
    // oracle: direct 4x4 expansion
    cplx direct = 0.0;
    for (int i = 0; i < 4; ++i) direct += k(i, i);
    EXPECT_NEAR(std::abs(direct - trace(a) * trace(b)), 0.0, 1e-12);
  }
}

TEST(Kron, AssociativityIsExactOnDyadicEntries) {
  // triple products of entries drawn from {0, +-0.5, +-1, +-2} round to
  // nothing, so both association orders give bit-identical results
  auto& g = testing::rng();
  std::uniform_int_distribution<int> pick(0, 6);
  const double vals[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
  const auto dyadic = [&] {
    Matrix m(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = cplx(vals[pick(g)], vals[pick(g)]);
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = dyadic(), b = dyadic(), c = dyadic();
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(Kron, AssociativityOnGeneralEntries) {
  auto& g = testing::rng();
  const Matrix a = random_matrix(2, g), b = random_matrix(2, g), c = random_matrix(2, g);
  expect_matrix_near(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-15);
}

TEST(Matmul, IdentityIsNeutral) {
  auto& g = testing::rng();
  const Matrix a = random_matrix(4, g);
  expect_matrix_near(matmul(Matrix::identity(4), a), a, 0.0);
}

TEST(Matmul, DimensionMismatchThrows) {
  EXPECT_THROW(matmul(Matrix::identity(2), Matrix::identity(4)), std::invalid_argument);
}

TEST(Matmul, PauliProductXYisIZ) {
  // hand 2x2 multiplication: X*Y = [[i,0],[0,-i]] = i*Z
  const Matrix prod = matmul(pauli_matrix('X'), pauli_matrix('Y'));
  const Matrix expected{{cplx(0, 1), 0.0}, {0.0, cplx(0, -1)}};
  expect_matrix_near(prod, expected, 0.0);
}

TEST(Matmul, MixedProductRule) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(2, g), b = random_matrix(2, g);
    const Matrix c = random_matrix(2, g), d = random_matrix(2, g);
    expect_matrix_near(matmul(kron(a, b), kron(c, d)),
                       kron(matmul(a, c), matmul(b, d)), 1e-12);
  }
}

TEST(Adjoint, InvolutionAndIdentity) {
  auto& g = testing::rng();
  const Matrix a = random_matrix(4, g);
  EXPECT_EQ(adjoint(adjoint(a)), a);
  expect_matrix_near(adjoint(Matrix::identity(4)), Matrix::identity(4), 0.0);
}

TEST(Trace, Values) {
  EXPECT_EQ(trace(Matrix::identity(4)), cplx(4.0));
  EXPECT_EQ(trace(pauli_matrix('X')), cplx(0.0));
  EXPECT_NEAR(std::abs(trace(outer(ghz(3))) - cplx(1.0)), 0.0, 1e-15);
}

TEST(Outer, BasisStateProjector) {
  const Matrix p = outer(computational_basis(1, 1));
  expect_matrix_near(p, Matrix{{1.0, 0.0}, {0.0, 0.0}}, 0.0);
}

TEST(Outer, GhzProjectorHasFourCornerEntries) {
  // expanding (|000> + |111>)/sqrt(2): entries 1/2 at {0,7}x{0,7}
  const Matrix p = outer(ghz(3));
  int nonzero = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (std::abs(p(i, j)) > 1e-15) {
        ++nonzero;
        EXPECT_TRUE((i == 0 || i == 7) && (j == 0 || j == 7));
        EXPECT_NEAR(p(i, j).real(), 0.5, 1e-15);
        EXPECT_NEAR(p(i, j).imag(), 0.0, 1e-15);
      }
  EXPECT_EQ(nonzero, 4);
}

TEST(Outer, UnitVectorsGivePureStates) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = outer(testing::random_state(8, g));
    EXPECT_NEAR(std::abs(trace(rho) - cplx(1.0)), 0.0, 1e-12);
    EXPECT_TRUE(is_hermitian(rho, 1e-12));
    expect_matrix_near(matmul(rho, rho), rho, 1e-12);  // idempotent: pure
    EXPECT_TRUE(is_psd(rho, 1e-12));
  }
  EXPECT_THROW(outer(StateVector{0.0, 0.0}), std::invalid_argument);
}

TEST(Predicates, UnitaryHermitianPsd) {
  EXPECT_TRUE(is_unitary(r_matrix(), 1e-12));
  EXPECT_TRUE(is_hermitian(werner_state(0.5), 1e-12));
  EXPECT_FALSE(is_psd(Matrix{{1.0, 0.0}, {0.0, -0.001}}, 1e-12));
}

TEST(InvolutoryExponential, ZeroAngleIsIdentity) {
  const Matrix k = kron(pauli_matrix('X'), pauli_matrix('Y'));
  expect_matrix_near(involutory_exponential(0.0, k), Matrix::identity(4), 1e-15);
}

TEST(InvolutoryExponential, QuarterTurnGivesR) {
  const Matrix k = kron(pauli_matrix('X'), pauli_matrix('Y'));
  expect_matrix_near(involutory_exponential(std::numbers::pi / 4, k), r_matrix(), 1e-12);
}

TEST(InvolutoryExponential, AlwaysUnitaryForHermitianInvolutions) {
  auto& g = testing::rng();
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  const Matrix k = kron(pauli_matrix('Z'), pauli_matrix('X'));
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_TRUE(is_unitary(involutory_exponential(angle(g), k), 1e-12));
}

TEST(InvolutoryExponential, RejectsNonInvolutions) {
  const Matrix not_involutory{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(involutory_exponential(1.0, not_involutory), std::invalid_argument);
}

}  // namespace
}  // namespace qhs
