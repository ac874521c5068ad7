#include "cubocubic/geometry.hpp"

#include <algorithm>
#include <unordered_map>

#include "cubocubic/error.hpp"
#include "cubocubic/poly_matrix.hpp"
#include "cubocubic/scalar_matrix.hpp"

namespace cubocubic {

ProjPoint ProjPoint::normalize(std::span<const FieldElem> coords) {
  if (coords.size() != 4) throw Error(ErrorKind::InvalidArgument, "projective point needs 4 coordinates");
  std::size_t lead = 0;
  while (lead < 4 && coords[lead].is_zero()) ++lead;
  if (lead == 4) throw Error(ErrorKind::InvalidArgument, "zero vector is not a projective point");
  const FieldElem inv = coords[lead].inverse();
  return ProjPoint({coords[0] * inv, coords[1] * inv, coords[2] * inv, coords[3] * inv});
}

std::string ProjPoint::to_string() const {
  return "(" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() +
         ":" + coords_[3].to_string() + ")";
}

std::uint64_t projective_point_count(std::uint64_t p) noexcept { return ((p + 1) * p + 1) * p + 1; }

ProjPoint point_at(const Field& field, std::uint64_t index) {
  const std::uint64_t p = field.characteristic();
  // Blocks by position of the leading 1: (0,0,0,1) | (0,0,1,*) | (0,1,*,*) | (1,*,*,*).
  std::array<std::uint64_t, 4> c{0, 0, 0, 0};
  std::uint64_t block = 1;
  int lead = 3;
  while (index >= block) {
    index -= block;
    block *= p;
    --lead;
    if (lead < 0) throw Error(ErrorKind::IndexOutOfRange, "point index");
  }
  c[static_cast<std::size_t>(lead)] = 1;
  for (int i = 3; i > lead; --i) {
    c[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return ProjPoint::normalize(std::array<FieldElem, 4>{
      FieldElem(field, static_cast<long long>(c[0])), FieldElem(field, static_cast<long long>(c[1])),
      FieldElem(field, static_cast<long long>(c[2])), FieldElem(field, static_cast<long long>(c[3]))});
}

GradedIdealView::GradedIdealView(std::vector<MultiPoly> gens) : generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (!g.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "ideal generator not homogeneous");
    if (!(g.field() == generators.front().field())) throw Error(ErrorKind::FieldMismatch, "ideal generators");
    if (g.space() != generators.front().space()) throw Error(ErrorKind::NamespaceMismatch, "ideal generators");
  }
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t hilbert_dim(const GradedIdealView& ideal, int d) {
  if (d < 1 || d > 10) throw Error(ErrorKind::DegreeCapExceeded, "Hilbert degree must lie in 1..10");
  const auto columns = monomials_of_degree(d);
  if (ideal.generators.empty()) return columns.size();
  const Field field = ideal.generators.front().field();

  std::unordered_map<std::uint64_t, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c].key(), c);

  std::vector<FieldElem> entries;
  std::size_t rows = 0;
  for (const auto& g : ideal.generators) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(d - g.degree())) {
      std::vector<FieldElem> row(columns.size(), FieldElem::zero(field));
      for (const auto& t : g.terms()) row[column_of.at((t.mono * m).key())] = t.coeff;
      entries.insert(entries.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
      ++rows;
    }
  }
  if (rows == 0) return columns.size();
  const ScalarMatrix span(field, rows, columns.size(), std::move(entries));
  return columns.size() - rank(span);
}

std::int64_t hilbert_burch_dim(int d) {
  const std::int64_t ideal_part = 4 * binom(d, 3) - 3 * binom(d - 1, 3);
  return binom(d + 3, 3) - ideal_part;
}

DegreeGenus fit_degree_genus(std::int64_t hf6, std::int64_t hf7, std::int64_t hf8) {
  const std::int64_t deg = hf7 - hf6;
  if (hf8 - hf7 != deg) {
    throw Error(ErrorKind::NotEventuallyLinear,
                "HF(6..8) = " + std::to_string(hf6) + ", " + std::to_string(hf7) + ", " + std::to_string(hf8));
  }
  return {deg, 1 - (hf6 - 6 * deg)};
}

DegreeGenus curve_degree_genus(const GradedIdealView& ideal) {
  return fit_degree_genus(static_cast<std::int64_t>(hilbert_dim(ideal, 6)),
                          static_cast<std::int64_t>(hilbert_dim(ideal, 7)),
                          static_cast<std::int64_t>(hilbert_dim(ideal, 8)));
}

std::int64_t weil_radius(std::uint64_t p, std::int64_t genus) {
  // floor(2g sqrt(p)) = floor(sqrt(4 g^2 p))
  const auto target = static_cast<std::uint64_t>(4 * genus * genus) * p;
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= target) ++r;
  return static_cast<std::int64_t>(r);
}

namespace {

bool all_vanish(const CremonaMap& map, const ProjPoint& pt) {
  return std::all_of(map.components().begin(), map.components().end(),
                     [&](const MultiPoly& f) { return f.evaluate(pt.span()).is_zero(); });
}

std::string prime_suffix(const Field& f) { return "[p=" + std::to_string(f.characteristic()) + "]"; }

std::optional<ProjPoint> normalize_if_nonzero(std::span<const FieldElem> v) {
  if (std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return e.is_zero(); })) return std::nullopt;
  return ProjPoint::normalize(v);
}

}  // namespace

std::vector<ProjPoint> enumerate_curve_points(const DeterminantalData& d, const Parallelism& par) {
  return enumerate_points(d.tensor.field(), par, [&](const ProjPoint& pt) { return all_vanish(d.phi, pt); });
}

std::vector<ProjPoint> enumerate_mirror_curve_points(const DeterminantalData& d, const Parallelism& par) {
  return enumerate_points(d.tensor.field(), par, [&](const ProjPoint& pt) { return all_vanish(d.psi, pt); });
}

std::vector<ProjPoint> enumerate_zeros(const MultiPoly& f, const Parallelism& par) {
  return enumerate_points(f.field(), par, [&](const ProjPoint& pt) { return f.evaluate(pt.span()).is_zero(); });
}

CheckRecord curve_point_count(const DeterminantalData& d, std::span<const ProjPoint> curve_points) {
  const Field& f = d.tensor.field();
  const std::uint64_t p = f.characteristic();
  CheckRecord rec;
  rec.name = "curve_point_count" + prime_suffix(f);
  const auto count = static_cast<std::int64_t>(curve_points.size());
  const std::int64_t radius = weil_radius(p, 3);
  const auto center = static_cast<std::int64_t>(p) + 1;
  rec.details["count"] = count;
  const std::int64_t lower = std::max<std::int64_t>(0, center - radius);
  rec.details["lower"] = lower;
  rec.details["upper"] = center + radius;
  if (count < lower || count > center + radius) rec.fail("point count outside the Hasse-Weil interval");

  std::size_t on_s1 = 0;
  for (const auto& pt : curve_points) {
    if (d.det_M.evaluate(pt.span()).is_zero()) {
      ++on_s1;
    } else {
      rec.witnesses.push_back("not on S1: " + pt.to_string());
    }
  }
  rec.details["on_S1"] = on_s1;
  if (on_s1 != curve_points.size()) rec.fail("curve point off S1");
  return rec;
}

CheckRecord base_locus_consistency(const DeterminantalData& d, std::span<const ProjPoint> curve_points,
                                   const Parallelism& par) {
  const Field& f = d.tensor.field();
  CheckRecord rec;
  rec.name = "base_locus_consistency" + prime_suffix(f);
  const auto rank_drop = enumerate_points(f, par, [&](const ProjPoint& pt) {
    return rank(d.A.evaluate(pt.span())) <= 2;
  });
  rec.details["minor_vanishing_points"] = curve_points.size();
  rec.details["rank_drop_points"] = rank_drop.size();
  const bool same = std::equal(rank_drop.begin(), rank_drop.end(), curve_points.begin(), curve_points.end());
  if (!same) {
    rec.fail("vanishing locus of the minors differs from the rank-drop locus of A");
    for (const auto& pt : curve_points) {
      if (std::find(rank_drop.begin(), rank_drop.end(), pt) == rank_drop.end()) {
        rec.witnesses.push_back("minors vanish but rank 3: " + pt.to_string());
      }
    }
    for (const auto& pt : rank_drop) {
      if (std::find(curve_points.begin(), curve_points.end(), pt) == curve_points.end()) {
        rec.witnesses.push_back("rank drop but minors nonzero: " + pt.to_string());
      }
    }
  }
  return rec;
}

CheckRecord smooth_scan_curve(const DeterminantalData& d, std::span<const ProjPoint> curve_points) {
  const Field& f = d.tensor.field();
  CheckRecord rec;
  rec.name = "curve_smooth_scan" + prime_suffix(f);
  const PolyMatrix jac = jacobian(d.phi.components());
  std::size_t violations = 0;
  for (const auto& pt : curve_points) {
    const std::size_t r = rank(jac.evaluate(pt.span()));
    if (r != 2) {
      ++violations;
      rec.witnesses.push_back(pt.to_string() + " jacobian rank " + std::to_string(r));
    }
  }
  rec.details["points_checked"] = curve_points.size();
  rec.details["violations"] = violations;
  if (curve_points.empty()) rec.details["note"] = "no witnesses";
  if (violations) rec.fail("singular curve points found");
  return rec;
}

std::vector<ProjPoint> singular_points(const MultiPoly& quartic, const Parallelism& par) {
  const Field& f = quartic.field();
  if (f.is_prime() && f.characteristic() == 2) throw Error(ErrorKind::BadPrime, "smoothness scan needs p != 2");
  std::array<MultiPoly, 4> partials{quartic.derivative(0), quartic.derivative(1), quartic.derivative(2),
                                    quartic.derivative(3)};
  return enumerate_points(f, par, [&](const ProjPoint& pt) {
    return std::all_of(partials.begin(), partials.end(),
                       [&](const MultiPoly& g) { return g.evaluate(pt.span()).is_zero(); });
  });
}

CheckRecord smooth_scan_quartic(const MultiPoly& quartic, const Parallelism& par, std::string_view label) {
  CheckRecord rec;
  rec.name = std::string(label) + prime_suffix(quartic.field());
  if (quartic.is_zero()) {
    rec.fail("quartic vanishes identically");
    return rec;
  }
  const auto sing = singular_points(quartic, par);
  rec.details["points_scanned"] = projective_point_count(quartic.field().characteristic());
  rec.details["singular_points"] = sing.size();
  for (const auto& pt : sing) rec.witnesses.push_back(pt.to_string());
  if (!sing.empty()) rec.fail("singular F_p-points found");
  return rec;
}

CheckRecord transfer_points(const DeterminantalData& d, const Parallelism& par) {
  const Field& f = d.tensor.field();
  CheckRecord rec;
  rec.name = "point_transfer" + prime_suffix(f);

  struct Outcome {
    bool on_curve = false;
    bool lands_on_s2 = false;
    bool psi_defined = false;
    bool round_trip = false;
    bool kernel_one_dim = false;
    bool kernel_matches = false;
    std::string point;
  };

  const auto s1 = enumerate_zeros(d.det_M, par);
  const auto outcomes = parallel_collect<Outcome>(s1.size(), par, [&](std::uint64_t i) -> std::optional<Outcome> {
    const ProjPoint& x0 = s1[i];
    Outcome o;
    o.point = x0.to_string();
    const auto image = d.phi.evaluate(x0.span());
    const auto y0 = normalize_if_nonzero(image);
    if (!y0) {
      o.on_curve = true;
      return o;
    }
    o.lands_on_s2 = d.det_N.evaluate(y0->span()).is_zero();
    const auto back = normalize_if_nonzero(d.psi.evaluate(y0->span()));
    o.psi_defined = back.has_value();
    if (back) {
      o.round_trip = *back == x0;
    } else {
      // y0 lies on C', where psi has no value; the inverse of the surface
      // isomorphism is then read off the kernel of N(y0), as N(y0) x0 = M(x0) y0 = 0.
      const auto ker = kernel_basis(d.N.evaluate(y0->span()));
      o.round_trip = ker.size() == 1 && ProjPoint::normalize(ker.front()) == x0;
    }
    const auto ker = kernel_basis(d.M.evaluate(x0.span()));
    o.kernel_one_dim = ker.size() == 1;
    o.kernel_matches = o.kernel_one_dim && ProjPoint::normalize(ker.front()) == *y0;
    return o;
  });

  std::size_t on_curve = 0, transferred = 0, landed = 0, psi_defined = 0, round_trips = 0, kernel_checked = 0,
              kernel_matches = 0;
  for (const auto& o : outcomes) {
    if (o.on_curve) {
      ++on_curve;
      continue;
    }
    ++transferred;
    if (o.lands_on_s2) ++landed; else rec.witnesses.push_back("image off S2: " + o.point);
    if (o.psi_defined) ++psi_defined;
    if (o.round_trip) ++round_trips; else rec.witnesses.push_back("round trip failed: " + o.point);
    if (o.kernel_one_dim) ++kernel_checked;
    if (o.kernel_matches) ++kernel_matches; else rec.witnesses.push_back("kernel mismatch: " + o.point);
  }
  rec.details["s1_points"] = s1.size();
  rec.details["on_curve"] = on_curve;
  rec.details["transferred"] = transferred;
  rec.details["landed_on_s2"] = landed;
  rec.details["round_trips"] = round_trips;
  rec.details["round_trips_via_psi"] = psi_defined;
  rec.details["round_trips_via_kernel_of_N"] = transferred - psi_defined;
  rec.details["kernel_one_dimensional"] = kernel_checked;
  rec.details["kernel_spanned_by_image"] = kernel_matches;
  if (transferred == 0) rec.details["note"] = "S1(F_p) minus C is empty";
  if (landed != transferred) rec.fail("transferred points off S2");
  if (round_trips != transferred) rec.fail("round trip failures");
  if (kernel_matches != transferred) rec.fail("image does not span ker M(x0)");
  return rec;
}

ChowClassP3xP3 ChowClassP3xP3::unit() {
  ChowClassP3xP3 c;
  c.c_[0][0] = 1;
  return c;
}

ChowClassP3xP3 ChowClassP3xP3::h1() {
  ChowClassP3xP3 c;
  c.c_[1][0] = 1;
  return c;
}

ChowClassP3xP3 ChowClassP3xP3::h2() {
  ChowClassP3xP3 c;
  c.c_[0][1] = 1;
  return c;
}

ChowClassP3xP3 operator+(const ChowClassP3xP3& a, const ChowClassP3xP3& b) {
  ChowClassP3xP3 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
  }
  return r;
}

ChowClassP3xP3 operator*(const ChowClassP3xP3& a, const ChowClassP3xP3& b) {
  ChowClassP3xP3 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (a.c_[i][j] == 0) continue;
      for (int k = 0; i + k < 4; ++k) {
        for (int l = 0; j + l < 4; ++l) r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
      }
    }
  }
  return r;
}

ChowClassP3xP3 ChowClassP3xP3::pow(int e) const {
  ChowClassP3xP3 r = unit();
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::array<std::array<std::int64_t, 2>, 2> intersection_matrix() {
  const auto s = (ChowClassP3xP3::h1() + ChowClassP3xP3::h2()).pow(4);
  const std::array<ChowClassP3xP3, 2> h{ChowClassP3xP3::h1(), ChowClassP3xP3::h2()};
  std::array<std::array<std::int64_t, 2>, 2> m{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m[i][j] = (h[i] * h[j] * s).degree();
  }
  return m;
}

}  // namespace cubocubic
