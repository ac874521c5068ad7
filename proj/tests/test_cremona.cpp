#include <gtest/gtest.h>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/rng.hpp"
#include "support.hpp"

using namespace cubocubic;

namespace {

const Field kQ = Field::rational();

MultiPoly var(VarSpace s, int i, Field f = kQ) { return MultiPoly::variable(f, s, i); }

CoefficientTensor duplicated_rows_tensor() {
  CoefficientTensor t = fixtures::random_tensor(17, 101);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) t.set(1, j, k, t.at(0, j, k));
  }
  return t;
}

}  // namespace

TEST(Tensor, DiagonalPattern) {
  CoefficientTensor t(kQ);
  for (int i = 0; i < 4; ++i) t.set(i, i, i, FieldElem::one(kQ));
  const DeterminantalData d = assemble(t);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(d.M(i, j), i == j ? var(VarSpace::X, i) : MultiPoly(kQ, VarSpace::X));
    }
  }
  EXPECT_EQ(d.det_M, var(VarSpace::X, 0) * var(VarSpace::X, 1) * var(VarSpace::X, 2) * var(VarSpace::X, 3));
}

TEST(Tensor, ZeroTensorIsDegenerate) {
  try {
    (void)build_data(CoefficientTensor(kQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateTensor);
  }
}

TEST(Tensor, GoldenIsNondegenerate) {
  const DeterminantalData d = build_data(fixtures::golden());
  EXPECT_EQ(d.det_M.degree(), 4);
  EXPECT_TRUE(d.M.is_linear());
  EXPECT_TRUE(d.N.is_linear());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(d.M(i, j), d.A(i, j));
      EXPECT_EQ(d.N(i, j), d.A_prime(i, j));
    }
  }
}

TEST(BilinearForm, ZeroTensor) {
  const ScalarMatrix b = bilinear_form_matrix(CoefficientTensor(kQ), 0);
  EXPECT_EQ(b, ScalarMatrix(kQ, 4, 4));
  EXPECT_THROW((void)bilinear_form_matrix(CoefficientTensor(kQ), 4), Error);
}

TEST(BilinearForm, SingleEntry) {
  // a[1][2][3] = 1 in 1-based indices.
  CoefficientTensor t(kQ);
  t.set(0, 1, 2, FieldElem::one(kQ));
  const ScalarMatrix b = bilinear_form_matrix(t, 0);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) EXPECT_EQ(b(j, k).is_one(), j == 1 && k == 2);
  }
  const DeterminantalData d = assemble(t);
  EXPECT_EQ(d.M(0, 1), var(VarSpace::X, 2));
  EXPECT_EQ(d.N(0, 2), var(VarSpace::Y, 1));
  EXPECT_TRUE(check_swap_identity(d).passed());
}

TEST(BilinearForm, PairingMatchesTermwiseSum) {
  const Field f7 = Field::prime(7);
  const CoefficientTensor t = fixtures::random_tensor(4, 7);
  SplitMix64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<FieldElem, 4> x, y;
    for (int k = 0; k < 4; ++k) {
      x[k] = FieldElem(f7, rng.uniform(0, 6));
      y[k] = FieldElem(f7, rng.uniform(0, 6));
    }
    for (int i = 0; i < 4; ++i) {
      FieldElem expected = FieldElem::zero(f7);
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) expected += t.at(i, j, k) * x[k] * y[j];
      }
      EXPECT_EQ(bilinear_pairing(t, i, x, y), expected);
    }
  }
}

TEST(SwapIdentity, ZeroTensorAndRandomTensorsOverF101) {
  EXPECT_TRUE(check_swap_identity(assemble(CoefficientTensor(kQ))).passed());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(check_swap_identity(assemble(fixtures::random_tensor(seed, 101))).passed()) << seed;
  }
  EXPECT_TRUE(check_swap_identity(assemble(fixtures::golden())).passed());
}

TEST(LaplaceContainment, IdentityBlock) {
  // A = [I3 | 0] as constants times x4 keeps every entry linear.
  CoefficientTensor t(kQ);
  for (int i = 0; i < 3; ++i) t.set(i, i, 3, FieldElem::one(kQ));
  for (int j = 0; j < 4; ++j) t.set(3, j, j, FieldElem::one(kQ));
  const DeterminantalData d = assemble(t);
  EXPECT_TRUE(check_laplace_containment(d).passed());
  EXPECT_TRUE(d.phi[0].is_zero());
  EXPECT_TRUE(d.phi[1].is_zero());
  EXPECT_TRUE(d.phi[2].is_zero());
  EXPECT_EQ(d.phi[3], var(VarSpace::X, 3).pow(3));
}

TEST(LaplaceContainment, GoldenAndRandom) {
  EXPECT_TRUE(check_laplace_containment(assemble(fixtures::golden())).passed());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(check_laplace_containment(assemble(fixtures::random_tensor(seed, 101))).passed());
  }
}

TEST(SignedMinors, SyzygiesOfA) {
  // Each row of A annihilates the vector of signed maximal minors.
  const DeterminantalData d = assemble(fixtures::random_tensor(21, 101));
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly s(d.A.field(), VarSpace::X);
    for (std::size_t j = 0; j < 4; ++j) s += d.A(i, j) * d.phi[j];
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Composition, Identity) {
  const CremonaMap id = CremonaMap::identity(kQ, VarSpace::X);
  EXPECT_EQ(proportionality_factor(id), MultiPoly::constant(kQ, VarSpace::X, 1));
  const DeterminantalData d = assemble(fixtures::random_tensor(5, 101));
  const CremonaMap back = compose(d.phi, CremonaMap::identity(d.phi.field(), VarSpace::X));
  EXPECT_EQ(back.components(), d.phi.components());
  EXPECT_THROW((void)compose(d.phi, d.phi), Error);
}

TEST(Composition, GoldenInverse) {
  const DeterminantalData d = assemble(fixtures::golden());
  const auto r = check_inverse_composition(d);
  ASSERT_TRUE(r.record.passed()) << r.record.message;
  ASSERT_TRUE(r.lambda && r.mu);
  EXPECT_EQ(r.lambda->degree(), 8);
  EXPECT_TRUE(r.lambda->is_homogeneous());
  EXPECT_EQ(r.mu->degree(), 8);
  EXPECT_EQ(d.phi.degree(), 3);
  EXPECT_EQ(d.psi.degree(), 3);
}

TEST(Composition, InverseOverFpProperty) {
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    const DeterminantalData d = assemble(fixtures::random_tensor(seed, 101));
    if (d.det_M.is_zero() || d.det_N.is_zero()) continue;
    const auto r = check_inverse_composition(d);
    EXPECT_TRUE(r.record.passed()) << seed << ": " << r.record.message;
  }
}

TEST(Composition, DuplicatedRowsAreNotBirational) {
  const DeterminantalData d = assemble(duplicated_rows_tensor());
  EXPECT_TRUE(d.phi.is_zero());
  try {
    (void)proportionality_factor(compose(d.psi, d.phi));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotBirational);
  }
  const auto r = check_inverse_composition(d);
  EXPECT_FALSE(r.record.passed());
  EXPECT_NE(r.record.message.find("NotBirational"), std::string::npos);
}

TEST(Composition, ProportionalRowsAreNotBirational) {
  CoefficientTensor t = fixtures::random_tensor(18, 101);
  const Field f = t.field();
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) t.set(2, j, k, FieldElem(f, 3) * t.at(0, j, k));
  }
  const auto r = check_inverse_composition(assemble(t));
  EXPECT_FALSE(r.record.passed());
  EXPECT_NE(r.record.message.find("NotBirational"), std::string::npos);
}

TEST(SurfaceTransfer, Golden) {
  const auto r = check_surface_transfer_symbolic(assemble(fixtures::golden()));
  ASSERT_TRUE(r.record.passed()) << r.record.message;
  EXPECT_EQ(r.q->degree(), 8);
  EXPECT_EQ(r.q_mirror->degree(), 8);
}

TEST(SurfaceTransfer, DegenerateReportsPrecondition) {
  const auto r = check_surface_transfer_symbolic(assemble(CoefficientTensor(kQ)));
  EXPECT_FALSE(r.record.passed());
  EXPECT_NE(r.record.message.find("precondition"), std::string::npos);
}

TEST(Mirror, SwappedRolesExchangeMAndN) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoefficientTensor t = fixtures::random_tensor(seed, 101);
    const DeterminantalData d = assemble(t);
    const DeterminantalData m = assemble(t.swapped_roles());
    EXPECT_EQ(m.det_M, d.det_N.with_space(VarSpace::X));
    EXPECT_EQ(m.det_N, d.det_M.with_space(VarSpace::Y));
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m.phi[j], d.psi[j].with_space(VarSpace::X));
    EXPECT_EQ(t.swapped_roles().swapped_roles(), t);
  }
}

TEST(Gates, SeedOneAcceptedAndZeroRejected) {
  RunConfig cfg;
  cfg.seed = 1;
  const GenerateResult g = generate(cfg);
  EXPECT_LE(g.attempt, 4U);
  EXPECT_FALSE(first_failed_gate(g.tensor).has_value());
  EXPECT_EQ(first_failed_gate(CoefficientTensor(kQ)), "det_M_nonzero");
}
