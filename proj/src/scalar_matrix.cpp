#include "cubocubic/scalar_matrix.hpp"

#include <sstream>
#include <utility>

#include "cubocubic/error.hpp"

namespace cubocubic {

ScalarMatrix::ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

ScalarMatrix::ScalarMatrix(Field field, std::size_t rows, std::size_t cols,
                           std::vector<FieldElem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::InvalidArgument, "matrix needs " + std::to_string(rows * cols) +
                                                " entries, got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry field");
  }
}

ScalarMatrix ScalarMatrix::identity(Field field, std::size_t n) {
  ScalarMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = FieldElem::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::from_integers(Field field,
                                         const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<FieldElem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::InvalidArgument, "ragged rows");
    for (long long v : row) entries.emplace_back(field, v);
  }
  return ScalarMatrix(field, r, c, std::move(entries));
}

void ScalarMatrix::set(std::size_t r, std::size_t c, FieldElem v) {
  if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry field");
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  entries_[r * cols_ + c] = std::move(v);
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

Vector ScalarMatrix::apply(std::span<const FieldElem> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length");
  Vector out(rows_, FieldElem::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

RowEchelon row_reduce(const ScalarMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Vector> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t piv = next;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[next]);
    const FieldElem inv = a[next][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[next][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][c].is_zero()) continue;
      const FieldElem factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[next][k].is_zero()) a[r][k] -= factor * a[next][k];
      }
    }
    pivots.push_back(c);
    ++next;
  }

  std::vector<FieldElem> flat;
  flat.reserve(rows * cols);
  for (auto& row : a) {
    for (auto& e : row) flat.push_back(std::move(e));
  }
  return {ScalarMatrix(m.field(), rows, cols, std::move(flat)), std::move(pivots)};
}

namespace {

// Fraction-free (Bareiss) forward elimination on an integer matrix obtained
// by clearing the denominators of each row; returns the rank.
std::size_t rational_rank(const ScalarMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational();
      a[r][c] = q.get_num() * (den / q.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    const mpz_class& pv = a[rk][c];
    for (std::size_t r = rk + 1; r < rows; ++r) {
      const mpz_class factor = a[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        // a[r][k] = (pv * a[r][k] - factor * a[rk][k]) / prev, exact.
        mpz_class& e = a[r][k];
        e *= pv;
        if (sgn(factor) != 0) mpz_submul(e.get_mpz_t(), factor.get_mpz_t(), a[rk][k].get_mpz_t());
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = pv;
    ++rk;
  }
  return rk;
}

std::size_t prime_rank(const ScalarMatrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).residue();
  }
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    const std::uint64_t inv = FieldElem(m.field(), static_cast<long long>(a[rk][c])).inverse().residue();
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = (a[r][k] + (p - factor) * a[rk][k]) % p;
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace

std::size_t rank(const ScalarMatrix& m) {
  return m.field().is_rational() ? rational_rank(m) : prime_rank(m);
}

std::vector<Vector> kernel_basis(const ScalarMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, FieldElem::zero(m.field()));
    v[free] = FieldElem::one(m.field());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      v[ech.pivot_cols[i]] = -ech.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElem det_scalar(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "det_scalar");
  const std::size_t n = m.rows();
  std::vector<Vector> a(n);
  for (std::size_t r = 0; r < n; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  FieldElem det = FieldElem::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return FieldElem::zero(m.field());
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const FieldElem inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const FieldElem factor = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

}  // namespace cubocubic
