#include "test_util.hpp"

namespace qhs {
namespace {

TEST(ComputationalBasis, StandardColumns) {
  const StateVector zero = computational_basis(1, 1);
  EXPECT_EQ(zero[0], cplx(1.0));
  EXPECT_EQ(zero[1], cplx(0.0));

  const StateVector v000 = computational_basis(3, 1);
  EXPECT_EQ(v000[0], cplx(1.0));

  // i = 7 is |110>: binary expansion of 6 with qubit 0 as the high bit
  const StateVector v110 = computational_basis(3, 7);
  EXPECT_EQ(v110[6], cplx(1.0));
  for (int k = 0; k < 8; ++k) {
    if (k != 6) {
      EXPECT_EQ(v110[k], cplx(0.0));
    }
  }
}

TEST(ComputationalBasis, RangeChecks) {
  EXPECT_THROW(computational_basis(3, 0), std::invalid_argument);
  EXPECT_THROW(computational_basis(3, 9), std::invalid_argument);
  EXPECT_NO_THROW(computational_basis(3, 8));
}

TEST(Ghz, AmplitudesAndNorm) {
  const StateVector v = ghz(3);
  EXPECT_NEAR(std::abs(v[0] - cplx(1 / std::numbers::sqrt2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[7] - cplx(1 / std::numbers::sqrt2)), 0.0, 1e-15);
  for (int k = 1; k < 7; ++k) EXPECT_EQ(v[k], cplx(0.0));
  for (int n = 2; n <= 6; ++n) EXPECT_NEAR(ghz(n).norm(), 1.0, 1e-14);
  EXPECT_THROW(ghz(1), std::invalid_argument);
}

TEST(Ghz, InvariantUnderGlobalBitFlip) {
  for (int n = 2; n <= 5; ++n) {
    Matrix flip = pauli_matrix('X');
    for (int q = 1; q < n; ++q) flip = kron(flip, pauli_matrix('X'));
    const StateVector v = ghz(n);
    const StateVector flipped = apply(flip, v);
    double diff = 0.0;
    for (int k = 0; k < v.dim(); ++k) diff = std::max(diff, std::abs(flipped[k] - v[k]));
    EXPECT_LT(diff, 1e-14) << n;
  }
}

TEST(BellSinglet, AmplitudesAndDerivedFacts) {
  const StateVector v = bell_singlet();
  EXPECT_NEAR(std::abs(v[1] - cplx(1 / std::numbers::sqrt2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[2] + cplx(1 / std::numbers::sqrt2)), 0.0, 1e-15);
  EXPECT_EQ(v[0], cplx(0.0));
  EXPECT_NEAR(full_weight_sum(hs_decompose(outer(v))), 3.0, 1e-12);
  testing::expect_matrix_near(partial_trace(outer(v), QubitSubset({1}, 2)),
                              scale(0.5, Matrix::identity(2)), 1e-12);
}

TEST(StateSpec, ParsesTheGrammar) {
  EXPECT_EQ(StateSpec::parse("ghz:3").describe(), "ghz:3");
  EXPECT_EQ(StateSpec::parse("singlet").describe(), "singlet");
  EXPECT_EQ(StateSpec::parse("werner:0.5").describe(), "werner:0.5");
  EXPECT_EQ(StateSpec::parse("basis:3:7").describe(), "basis:3:7");
  EXPECT_EQ(StateSpec::parse("bell:3:1").describe(), "bell:3:1");
  EXPECT_TRUE(StateSpec::parse("file:/tmp/rho.json").is_file());
  EXPECT_EQ(StateSpec::parse("file:/tmp/rho.json").file_path(), "/tmp/rho.json");
}

TEST(StateSpec, RejectsMalformedSpecs) {
  for (const char* bad : {"", "ghz", "ghz:x", "ghz:3:4", "werner", "werner:abc",
                          "basis:3", "unknown:1", "bell:3", "singlet:2"})
    EXPECT_THROW(StateSpec::parse(bad), std::invalid_argument) << bad;
}

TEST(StateSpec, DensityConstruction) {
  testing::expect_matrix_near(StateSpec::parse("werner:1").density(),
                              outer(bell_singlet()), 1e-12);
  testing::expect_matrix_near(StateSpec::parse("singlet").density(),
                              outer(bell_singlet()), 0.0);
  const auto v = StateSpec::parse("bell:3:1").vector();
  ASSERT_TRUE(v.has_value());
  EXPECT_NEAR(v->norm(), 1.0, 1e-14);
  EXPECT_THROW(StateSpec::parse("file:x").density(), std::invalid_argument);
  EXPECT_THROW(StateSpec::parse("werner:1.5").density(), std::invalid_argument);
}

TEST(Constructors, UnitNorms) {
  EXPECT_NEAR(bell_singlet().norm(), 1.0, 1e-14);
  EXPECT_NEAR(computational_basis(4, 5).norm(), 1.0, 0.0);
  EXPECT_NEAR(bell_state(4, 3).norm(), 1.0, 1e-14);
}

}  // namespace
}  // namespace qhs
