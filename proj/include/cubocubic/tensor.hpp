#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubocubic/field.hpp"
#include "cubocubic/scalar_matrix.hpp"

namespace cubocubic {

/// The 4x4x4 coefficients a[i][j][k] of four bilinear forms
///   Q_i(x, y) = sum_{j,k} a[i][j][k] * x_k * y_j
/// (i: equation, j: y-index, k: x-index; all 0-based). Slices i = 0..2 give
/// the 3x4 matrix of linear forms A(x); slice 3 is the extra divisor that
/// completes M(x).
class CoefficientTensor {
 public:
  static constexpr std::size_t kSize = 64;

  explicit CoefficientTensor(Field field);
  CoefficientTensor(Field field, std::vector<FieldElem> entries);
  // Entries in i-major, then j, then k order.
  static CoefficientTensor from_integers(Field field, std::span<const long long> values);

  const Field& field() const noexcept { return field_; }
  const FieldElem& at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[index(i, j, k)];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, FieldElem v);

  std::optional<std::uint64_t> seed;
  std::string source;

  /// Reduce an integral or rational tensor modulo p (BadPrime if p divides a
  /// denominator). A prime-field tensor must already live in F_p.
  CoefficientTensor reduce_mod(std::uint64_t p) const;

  /// a'[i][j][k] = a[i][k][j]: exchanges the roles of x and y, so M of the
  /// result is N of this tensor with y renamed to x.
  CoefficientTensor swapped_roles() const;

  friend bool operator==(const CoefficientTensor& a, const CoefficientTensor& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t index(std::size_t i, std::size_t j, std::size_t k);

  Field field_;
  std::vector<FieldElem> entries_;
};

/// B_i with (B_i)[j][k] = a[i][j][k], so Q_i(x, y) = y^T B_i x.
/// IndexOutOfRange unless i < 4.
ScalarMatrix bilinear_form_matrix(const CoefficientTensor& t, std::size_t i);

/// Q_i(x, y) evaluated as y^T B_i x.
FieldElem bilinear_pairing(const CoefficientTensor& t, std::size_t i,
                           std::span<const FieldElem> x, std::span<const FieldElem> y);

}  // namespace cubocubic
