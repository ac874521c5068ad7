#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubocubic/multipoly.hpp"
#include "cubocubic/scalar_matrix.hpp"

namespace cubocubic {

/// Rectangular matrix of polynomials sharing one field and namespace.
class PolyMatrix {
 public:
  PolyMatrix(Field field, VarSpace space, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

  const Field& field() const noexcept { return field_; }
  VarSpace space() const noexcept { return space_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, MultiPoly p);

  std::span<const MultiPoly> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  // Rows [first, first + count).
  PolyMatrix row_block(std::size_t first, std::size_t count) const;
  PolyMatrix transpose() const;

  ScalarMatrix evaluate(std::span<const FieldElem> point) const;

  // Every entry homogeneous of degree <= 1.
  bool is_linear() const noexcept;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&);

 private:
  Field field_;
  VarSpace space_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Symbolic determinant of a square matrix of size <= 4 (NonSquare /
/// InvalidArgument otherwise). Expands along the last row at every level,
/// memoizing the minors of the leading rows by column subset.
MultiPoly det_poly(const PolyMatrix& m);

/// Cofactors of the last row: c_j = (-1)^{n+j} * det(m without row n and
/// column j), with 1-based n, j. det_poly(m) == sum_j m(n,j) * c_j.
std::vector<MultiPoly> last_row_cofactors(const PolyMatrix& m);

/// Determinant of the submatrix left after deleting the given rows and
/// columns (0-based). IndexOutOfRange for bad indices, NonSquare if the
/// remainder is not square.
MultiPoly minor(const PolyMatrix& m, std::span<const std::size_t> delete_rows,
                std::span<const std::size_t> delete_cols);

/// Row i holds the partials of polys[i] with respect to x1..x4.
PolyMatrix jacobian(std::span<const MultiPoly> polys);

}  // namespace cubocubic
