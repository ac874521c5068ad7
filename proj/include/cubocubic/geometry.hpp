#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/multipoly.hpp"
#include "cubocubic/parallel.hpp"
#include "cubocubic/report.hpp"

namespace cubocubic {

// Largest prime accepted by the exhaustive P^3(F_p) scans.
inline constexpr std::uint64_t kMaxScanPrime = 101;

/// Point of P^3 normalized so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  // InvalidArgument for the zero vector.
  static ProjPoint normalize(std::span<const FieldElem> coords);

  const std::array<FieldElem, 4>& coords() const noexcept { return coords_; }
  std::span<const FieldElem> span() const noexcept { return coords_; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  explicit ProjPoint(std::array<FieldElem, 4> c) : coords_(std::move(c)) {}
  std::array<FieldElem, 4> coords_;
};

std::uint64_t projective_point_count(std::uint64_t p) noexcept;

/// The index-th point of P^3(F_p) in increasing lexicographic order of
/// normalized coordinates: (0:0:0:1), (0:0:1:0), ..., (1:p-1:p-1:p-1).
ProjPoint point_at(const Field& field, std::uint64_t index);

/// Normalized points of P^3(F_p) satisfying pred, in lexicographic order.
/// PrimeTooLarge above kMaxScanPrime; InvalidArgument for the rationals.
template <class Pred>
std::vector<ProjPoint> enumerate_points(const Field& field, const Parallelism& par, Pred pred);

/// Homogeneous generators of an ideal in four variables.
struct GradedIdealView {
  explicit GradedIdealView(std::vector<MultiPoly> gens);
  std::vector<MultiPoly> generators;
};

/// dim_k (R/I)_d for 1 <= d <= 10 (DegreeCapExceeded otherwise): the number
/// of degree-d monomials minus the rank of the span of m * g over generators
/// g and monomials m of complementary degree.
std::size_t hilbert_dim(const GradedIdealView& ideal, int d);

/// dim (R/I)_d predicted by the resolution 0 -> R(-4)^3 -> R(-3)^4 -> I -> 0
/// of the maximal minors of a generic 3x4 matrix of linear forms.
std::int64_t hilbert_burch_dim(int d);

struct DegreeGenus {
  std::int64_t degree;
  std::int64_t genus;
  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

/// Fits HF(d) = deg * d + 1 - g through d = 6, 7 and checks d = 8.
/// NotEventuallyLinear if the three values are not collinear.
DegreeGenus fit_degree_genus(std::int64_t hf6, std::int64_t hf7, std::int64_t hf8);
DegreeGenus curve_degree_genus(const GradedIdealView& ideal);

/// floor(2 g sqrt(p)), computed exactly.
std::int64_t weil_radius(std::uint64_t p, std::int64_t genus);

/// Points of P^3(F_p) where all components of phi vanish; d must be
/// assembled over a prime field.
std::vector<ProjPoint> enumerate_curve_points(const DeterminantalData& d, const Parallelism& par);
/// Same for psi (the curve C' in the y-space).
std::vector<ProjPoint> enumerate_mirror_curve_points(const DeterminantalData& d, const Parallelism& par);
/// Points where a polynomial vanishes.
std::vector<ProjPoint> enumerate_zeros(const MultiPoly& f, const Parallelism& par);

/// Count of curve points against the genus-3 Hasse-Weil interval, plus the
/// containment of every curve point in S1.
CheckRecord curve_point_count(const DeterminantalData& d, std::span<const ProjPoint> curve_points);

/// {phi = 0} equals {rank A(x) <= 2} on all of P^3(F_p).
CheckRecord base_locus_consistency(const DeterminantalData& d, std::span<const ProjPoint> curve_points,
                                   const Parallelism& par);

/// Jacobian of phi has rank exactly 2 at every listed curve point.
CheckRecord smooth_scan_curve(const DeterminantalData& d, std::span<const ProjPoint> curve_points);

/// Common zeros of the four partials of a quartic over F_p (BadPrime for
/// p = 2). Passes iff there are none.
CheckRecord smooth_scan_quartic(const MultiPoly& quartic, const Parallelism& par,
                                std::string_view label = "quartic_smooth_scan");
std::vector<ProjPoint> singular_points(const MultiPoly& quartic, const Parallelism& par);

/// Pushes every point of S1(F_p) off C through phi and checks it lands on
/// S2, returns through psi, and spans the kernel of M(x0).
CheckRecord transfer_points(const DeterminantalData& d, const Parallelism& par);

/// Classes a * h1^i h2^j in the Chow ring of P^3 x P^3 (h1^4 = h2^4 = 0).
class ChowClassP3xP3 {
 public:
  ChowClassP3xP3() = default;
  static ChowClassP3xP3 h1();
  static ChowClassP3xP3 h2();
  static ChowClassP3xP3 unit();

  std::int64_t coefficient(int a, int b) const { return c_.at(a).at(b); }
  // Degree of the zero-cycle part: coefficient of h1^3 h2^3.
  std::int64_t degree() const { return c_[3][3]; }

  ChowClassP3xP3 pow(int e) const;
  friend ChowClassP3xP3 operator+(const ChowClassP3xP3& a, const ChowClassP3xP3& b);
  friend ChowClassP3xP3 operator*(const ChowClassP3xP3& a, const ChowClassP3xP3& b);
  friend bool operator==(const ChowClassP3xP3&, const ChowClassP3xP3&) = default;

 private:
  std::array<std::array<std::int64_t, 4>, 4> c_{};
};

/// ((h_i . h_j . s)) for the class s = (h1 + h2)^4 of four (1,1)-divisors.
std::array<std::array<std::int64_t, 2>, 2> intersection_matrix();

// ---------------------------------------------------------------------------

template <class Pred>
std::vector<ProjPoint> enumerate_points(const Field& field, const Parallelism& par, Pred pred) {
  if (field.is_rational()) throw Error(ErrorKind::InvalidArgument, "enumeration needs a prime field");
  if (field.characteristic() > kMaxScanPrime) {
    throw Error(ErrorKind::PrimeTooLarge, std::to_string(field.characteristic()) + " > " +
                                              std::to_string(kMaxScanPrime));
  }
  return parallel_collect<ProjPoint>(
      projective_point_count(field.characteristic()), par,
      [&](std::uint64_t i) -> std::optional<ProjPoint> {
        ProjPoint pt = point_at(field, i);
        if (pred(pt)) return pt;
        return std::nullopt;
      });
}

}  // namespace cubocubic
