#include "cubocubic/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "cubocubic/error.hpp"

namespace cubocubic {

PolyMatrix::PolyMatrix(Field field, VarSpace space, std::size_t rows, std::size_t cols)
    : field_(field), space_(space), rows_(rows), cols_(cols),
      entries_(rows * cols, MultiPoly(field, space)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries)
    : field_(Field::rational()), space_(VarSpace::X), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows * cols || entries_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "PolyMatrix entry count");
  }
  field_ = entries_.front().field();
  space_ = entries_.front().space();
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "PolyMatrix entries");
    if (e.space() != space_) throw Error(ErrorKind::NamespaceMismatch, "PolyMatrix entries");
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, MultiPoly p) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "PolyMatrix::set");
  if (!(p.field() == field_)) throw Error(ErrorKind::FieldMismatch, "PolyMatrix::set");
  if (p.space() != space_) throw Error(ErrorKind::NamespaceMismatch, "PolyMatrix::set");
  entries_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorKind::IndexOutOfRange, "row_block");
  PolyMatrix out(field_, space_, count, cols_);
  std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_,
              out.entries_.begin());
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, space_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

ScalarMatrix PolyMatrix::evaluate(std::span<const FieldElem> point) const {
  std::vector<FieldElem> vals;
  vals.reserve(entries_.size());
  for (const auto& e : entries_) vals.push_back(e.evaluate(point));
  return ScalarMatrix(field_, rows_, cols_, std::move(vals));
}

bool PolyMatrix::is_linear() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MultiPoly& p) { return p.is_homogeneous() && p.degree() <= 1; });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

constexpr std::size_t kMaxDetSize = 4;

// minors[mask] = det of the leading popcount(mask) rows restricted to the
// columns in mask, each expanded along its own last row.
std::vector<MultiPoly> leading_row_minors(const PolyMatrix& m, std::size_t rows_needed) {
  const std::size_t n = m.cols();
  std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly(m.field(), m.space()));
  minors[0] = MultiPoly::constant(m.field(), m.space(), 1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k > rows_needed) continue;
    MultiPoly acc(m.field(), m.space());
    std::size_t position = 0;  // 1-based position of column j within mask
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      ++position;
      const MultiPoly& entry = m(k - 1, j);
      const MultiPoly& sub = minors[mask & ~(std::size_t{1} << j)];
      if (entry.is_zero() || sub.is_zero()) continue;
      if ((k + position) % 2 == 0) {
        acc += entry * sub;
      } else {
        acc -= entry * sub;
      }
    }
    minors[mask] = std::move(acc);
  }
  return minors;
}

void require_det_shape(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "det_poly");
  if (m.rows() == 0 || m.rows() > kMaxDetSize) {
    throw Error(ErrorKind::InvalidArgument, "det_poly supports sizes 1..4");
  }
}

}  // namespace

std::vector<MultiPoly> last_row_cofactors(const PolyMatrix& m) {
  require_det_shape(m);
  const std::size_t n = m.rows();
  const auto minors = leading_row_minors(m, n - 1);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<MultiPoly> cof;
  cof.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const MultiPoly& sub = minors[full & ~(std::size_t{1} << j)];
    cof.push_back(((n + j + 1) % 2 == 0) ? sub : -sub);
  }
  return cof;
}

MultiPoly det_poly(const PolyMatrix& m) {
  const auto cof = last_row_cofactors(m);
  const std::size_t n = m.rows();
  MultiPoly det(m.field(), m.space());
  for (std::size_t j = 0; j < n; ++j) {
    if (!m(n - 1, j).is_zero()) det += m(n - 1, j) * cof[j];
  }
  return det;
}

MultiPoly minor(const PolyMatrix& m, std::span<const std::size_t> delete_rows,
                std::span<const std::size_t> delete_cols) {
  auto keep = [](std::size_t total, std::span<const std::size_t> drop) {
    std::vector<bool> dropped(total, false);
    for (std::size_t d : drop) {
      if (d >= total) throw Error(ErrorKind::IndexOutOfRange, "minor index " + std::to_string(d));
      dropped[d] = true;
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < total; ++i) {
      if (!dropped[i]) kept.push_back(i);
    }
    return kept;
  };
  const auto rows = keep(m.rows(), delete_rows);
  const auto cols = keep(m.cols(), delete_cols);
  if (rows.size() != cols.size()) throw Error(ErrorKind::NonSquare, "minor");
  PolyMatrix sub(m.field(), m.space(), rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) sub.set(r, c, m(rows[r], cols[c]));
  }
  return det_poly(sub);
}

PolyMatrix jacobian(std::span<const MultiPoly> polys) {
  if (polys.empty()) throw Error(ErrorKind::InvalidArgument, "jacobian of nothing");
  PolyMatrix jac(polys[0].field(), polys[0].space(), polys.size(), kNumVars);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (int j = 0; j < kNumVars; ++j) jac.set(i, static_cast<std::size_t>(j), polys[i].derivative(j));
  }
  return jac;
}

}  // namespace cubocubic
