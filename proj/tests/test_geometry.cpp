#include <gtest/gtest.h>

#include <cmath>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/geometry.hpp"
#include "cubocubic/poly_matrix.hpp"
#include "cubocubic/rng.hpp"
#include "support.hpp"

using namespace cubocubic;

namespace {

GradedIdealView curve_ideal(const DeterminantalData& d) {
  return GradedIdealView({d.phi.components().begin(), d.phi.components().end()});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cubocubic::Error thrown";
  return ErrorKind::InvalidArgument;
}

MultiPoly xv(const Field& f, int i) { return MultiPoly::variable(f, VarSpace::X, i); }

const Parallelism kOne{1};

}  // namespace

TEST(Points, LexicographicEnumeration) {
  const Field f3 = Field::prime(3);
  EXPECT_EQ(projective_point_count(3), 40U);
  EXPECT_EQ(point_at(f3, 0).to_string(), "(0:0:0:1)");
  EXPECT_EQ(point_at(f3, 1).to_string(), "(0:0:1:0)");
  EXPECT_EQ(point_at(f3, 39).to_string(), "(1:2:2:2)");
  const auto all = enumerate_points(f3, kOne, [](const ProjPoint&) { return true; });
  ASSERT_EQ(all.size(), 40U);
  for (std::size_t i = 1; i < all.size(); ++i) {
    std::array<std::uint64_t, 4> a{}, b{};
    for (int k = 0; k < 4; ++k) {
      a[k] = all[i - 1].coords()[k].residue();
      b[k] = all[i].coords()[k].residue();
    }
    EXPECT_LT(a, b);
  }
  EXPECT_EQ(kind_of([] { (void)enumerate_points(Field::prime(103), kOne, [](const ProjPoint&) { return true; }); }),
            ErrorKind::PrimeTooLarge);
}

TEST(Points, NormalizationIsUnique) {
  const Field f = Field::prime(7);
  const std::array<FieldElem, 4> a{FieldElem(f, 0), FieldElem(f, 3), FieldElem(f, 6), FieldElem(f, 1)};
  std::array<FieldElem, 4> b;
  for (int k = 0; k < 4; ++k) b[k] = a[k] * FieldElem(f, 5);
  EXPECT_EQ(ProjPoint::normalize(a), ProjPoint::normalize(b));
  EXPECT_TRUE(ProjPoint::normalize(a).coords()[1].is_one());
}

TEST(Hilbert, Oracle) {
  EXPECT_EQ(hilbert_burch_dim(1), 4);
  EXPECT_EQ(hilbert_burch_dim(3), 16);
  EXPECT_EQ(hilbert_burch_dim(5), 28);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(hilbert_burch_dim(d), 6 * d - 2);
}

TEST(Hilbert, GoldenCurve) {
  const DeterminantalData d = assemble(fixtures::golden());
  const GradedIdealView ideal = curve_ideal(d);
  EXPECT_EQ(hilbert_dim(ideal, 1), 4U);
  EXPECT_EQ(hilbert_dim(ideal, 3), 16U);
  EXPECT_EQ(hilbert_dim(ideal, 5), 28U);
  EXPECT_EQ(kind_of([&] { (void)hilbert_dim(ideal, 11); }), ErrorKind::DegreeCapExceeded);
}

TEST(Hilbert, RandomCurvesOverFp) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GradedIdealView ideal = curve_ideal(assemble(fixtures::random_tensor(seed, 101)));
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(static_cast<std::int64_t>(hilbert_dim(ideal, d)), hilbert_burch_dim(d));
  }
}

TEST(DegreeGenus, Fit) {
  EXPECT_EQ(fit_degree_genus(34, 40, 46), (DegreeGenus{6, 3}));
  EXPECT_EQ(kind_of([] { (void)fit_degree_genus(34, 40, 47); }), ErrorKind::NotEventuallyLinear);
}

TEST(DegreeGenus, LinearFormIdealIsNotEventuallyLinear) {
  const Field q = Field::rational();
  const GradedIdealView plane({xv(q, 0)});
  EXPECT_EQ(hilbert_dim(plane, 2), 6U);
  EXPECT_EQ(kind_of([&] { (void)curve_degree_genus(plane); }), ErrorKind::NotEventuallyLinear);
}

TEST(DegreeGenus, Golden) { EXPECT_EQ(curve_degree_genus(curve_ideal(assemble(fixtures::golden()))), (DegreeGenus{6, 3})); }

TEST(Weil, Radius) {
  for (std::uint64_t p : {3ULL, 7ULL, 11ULL, 13ULL, 97ULL}) {
    EXPECT_EQ(weil_radius(p, 3), static_cast<std::int64_t>(std::floor(6.0 * std::sqrt(static_cast<double>(p)))));
  }
  EXPECT_EQ(weil_radius(7, 3), 15);
  EXPECT_EQ(weil_radius(13, 3), 21);
}

TEST(Weil, GoldenCountsInRange) {
  const CoefficientTensor g = fixtures::golden();
  for (std::uint64_t p : {7ULL, 13ULL}) {
    const DeterminantalData d = assemble(g.reduce_mod(p));
    const auto pts = enumerate_curve_points(d, kOne);
    const auto rec = curve_point_count(d, pts);
    EXPECT_TRUE(rec.passed()) << rec.message;
    EXPECT_LE(pts.size(), p == 7 ? 23U : 35U);
  }
}

TEST(QuarticScan, FermatAndCone) {
  const Field f5 = Field::prime(5);
  MultiPoly fermat(f5, VarSpace::X);
  for (int i = 0; i < 4; ++i) fermat += xv(f5, i).pow(4);
  EXPECT_TRUE(singular_points(fermat, kOne).empty());
  EXPECT_TRUE(smooth_scan_quartic(fermat, kOne).passed());

  const auto cone = singular_points(xv(f5, 0).pow(4), kOne);
  EXPECT_EQ(cone.size(), 31U);
  for (const auto& pt : cone) EXPECT_TRUE(pt.coords()[0].is_zero());
  EXPECT_FALSE(smooth_scan_quartic(xv(f5, 0).pow(4), kOne).passed());

  const Field f2 = Field::prime(2);
  EXPECT_EQ(kind_of([&] { (void)smooth_scan_quartic(xv(f2, 0).pow(4), kOne); }), ErrorKind::BadPrime);
}

TEST(CurveScan, EngineeredSingularPoint) {
  // A(e1) of rank 1: all 2x2 minors of A vanish at e1, so the Jacobian of
  // the maximal minors drops to rank 0 there.
  CoefficientTensor t = fixtures::random_tensor(77, 11);
  const Field f = t.field();
  const std::array<long long, 3> u{1, 2, 5};
  const std::array<long long, 4> v{3, 1, 4, 1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) t.set(i, j, 0, FieldElem(f, u[i] * v[j]));
  }
  const DeterminantalData d = assemble(t);
  const auto pts = enumerate_curve_points(d, kOne);
  const ProjPoint e1 = ProjPoint::normalize(std::array<FieldElem, 4>{
      FieldElem::one(f), FieldElem::zero(f), FieldElem::zero(f), FieldElem::zero(f)});
  EXPECT_NE(std::find(pts.begin(), pts.end(), e1), pts.end());
  const auto rec = smooth_scan_curve(d, pts);
  EXPECT_FALSE(rec.passed());
  ASSERT_FALSE(rec.witnesses.empty());
  EXPECT_NE(rec.witnesses.front().find("(1:0:0:0)"), std::string::npos);
}

TEST(CurveScan, EmptyPointSetIsVacuous) {
  const DeterminantalData d = assemble(fixtures::golden().reduce_mod(11));
  const auto rec = smooth_scan_curve(d, {});
  EXPECT_TRUE(rec.passed());
  EXPECT_EQ(rec.details["note"], "no witnesses");
}

TEST(Scans, GoldenSmoothAt11) {
  const DeterminantalData d = assemble(fixtures::golden().reduce_mod(11));
  const auto curve = enumerate_curve_points(d, kOne);
  EXPECT_TRUE(smooth_scan_curve(d, curve).passed());
  const auto s1 = smooth_scan_quartic(d.det_M, kOne);
  EXPECT_TRUE(s1.passed());
  EXPECT_EQ(s1.details["points_scanned"], 1464);
  EXPECT_TRUE(smooth_scan_quartic(d.det_N, kOne).passed());
}

TEST(BaseLocus, CurvePointsMatchRankDrop) {
  for (std::uint64_t p : {7ULL, 11ULL}) {
    const DeterminantalData d = assemble(fixtures::golden().reduce_mod(p));
    const auto curve = enumerate_curve_points(d, kOne);
    EXPECT_TRUE(base_locus_consistency(d, curve, kOne).passed());
    for (const auto& pt : curve) {
      EXPECT_LE(rank(d.A.evaluate(pt.span())), 2U);
      EXPECT_TRUE(d.det_M.evaluate(pt.span()).is_zero());
      for (const auto& f : d.phi.components()) EXPECT_TRUE(f.evaluate(pt.span()).is_zero());
    }
  }
}

TEST(Determinant, SymbolicAndPointwiseAgreeExhaustively) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    const DeterminantalData d = assemble(fixtures::random_tensor(p, p));
    std::size_t checked = 0;
    (void)enumerate_points(d.tensor.field(), kOne, [&](const ProjPoint& pt) {
      EXPECT_EQ(d.det_M.evaluate(pt.span()), det_scalar(d.M.evaluate(pt.span())));
      ++checked;
      return false;
    });
    EXPECT_EQ(checked, projective_point_count(p));
  }
}

TEST(Kernel, S1PointsOffCurveHaveOneDimensionalKernel) {
  const DeterminantalData d = assemble(fixtures::golden().reduce_mod(7));
  const auto s1 = enumerate_zeros(d.det_M, kOne);
  const auto curve = enumerate_curve_points(d, kOne);
  std::size_t off_curve = 0;
  for (const auto& pt : s1) {
    if (std::find(curve.begin(), curve.end(), pt) != curve.end()) continue;
    ++off_curve;
    EXPECT_EQ(rank(d.M.evaluate(pt.span())), 3U);
    EXPECT_EQ(kernel_basis(d.M.evaluate(pt.span())).size(), 1U);
  }
  EXPECT_GT(off_curve, 0U);
}

TEST(Transfer, GoldenAllPrimes) {
  for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
    const auto rec = transfer_points(assemble(fixtures::golden().reduce_mod(p)), kOne);
    EXPECT_TRUE(rec.passed()) << rec.message;
    EXPECT_EQ(rec.details["round_trips"], rec.details["transferred"]);
    EXPECT_EQ(rec.details["kernel_spanned_by_image"], rec.details["transferred"]);
  }
}

TEST(Transfer, CurvePointsAreExcluded) {
  const DeterminantalData d = assemble(fixtures::golden().reduce_mod(11));
  const auto curve = enumerate_curve_points(d, kOne);
  ASSERT_FALSE(curve.empty());
  for (const auto& pt : curve) EXPECT_TRUE(d.phi.evaluate(pt.span())[0].is_zero());
  const auto rec = transfer_points(d, kOne);
  EXPECT_EQ(rec.details["on_curve"], curve.size());
}

TEST(Chow, IntersectionMatrix) {
  const auto s = (ChowClassP3xP3::h1() + ChowClassP3xP3::h2()).pow(4);
  EXPECT_EQ((ChowClassP3xP3::h1().pow(2) * s).degree(), 4);
  EXPECT_EQ((ChowClassP3xP3::h1() * ChowClassP3xP3::h2() * s).degree(), 6);
  EXPECT_TRUE(ChowClassP3xP3::h1().pow(4) == ChowClassP3xP3());
  const auto m = intersection_matrix();
  EXPECT_EQ(m, (std::array<std::array<std::int64_t, 2>, 2>{{{4, 6}, {6, 4}}}));
}
