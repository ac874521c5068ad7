#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubocubic/field.hpp"

namespace cubocubic {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over a single Field.
class ScalarMatrix {
 public:
  // Zero matrix.
  ScalarMatrix(Field field, std::size_t rows, std::size_t cols);
  // Entries must all lie in `field` (FieldMismatch otherwise) and number
  // rows * cols (InvalidArgument otherwise).
  ScalarMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  static ScalarMatrix identity(Field field, std::size_t n);
  static ScalarMatrix from_integers(Field field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const FieldElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  // Assigning an element of another field throws FieldMismatch.
  void set(std::size_t r, std::size_t c, FieldElem v);

  std::span<const FieldElem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  ScalarMatrix transpose() const;
  Vector apply(std::span<const FieldElem> v) const;

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> entries_;
};

/// Reduced row echelon form with its pivot columns. Pivots are chosen as the
/// first nonzero entry scanning columns left to right, rows top to bottom.
struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of the right null space. One vector per free column, with a 1 in
/// that column; empty iff rank(m) == cols.
std::vector<Vector> kernel_basis(const ScalarMatrix& m);

/// Throws NonSquare for non-square input.
FieldElem det_scalar(const ScalarMatrix& m);

}  // namespace cubocubic
