#include "cubocubic/tensor.hpp"

#include "cubocubic/error.hpp"

namespace cubocubic {

CoefficientTensor::CoefficientTensor(Field field)
    : field_(field), entries_(kSize, FieldElem::zero(field)) {}

CoefficientTensor::CoefficientTensor(Field field, std::vector<FieldElem> entries)
    : field_(field), entries_(std::move(entries)) {
  if (entries_.size() != kSize) {
    throw Error(ErrorKind::InvalidArgument,
                "tensor needs 64 entries, got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "tensor entry");
  }
}

CoefficientTensor CoefficientTensor::from_integers(Field field, std::span<const long long> values) {
  std::vector<FieldElem> entries;
  entries.reserve(values.size());
  for (long long v : values) entries.emplace_back(field, v);
  return CoefficientTensor(field, std::move(entries));
}

std::size_t CoefficientTensor::index(std::size_t i, std::size_t j, std::size_t k) {
  if (i >= 4 || j >= 4 || k >= 4) throw Error(ErrorKind::IndexOutOfRange, "tensor index");
  return (i * 4 + j) * 4 + k;
}

void CoefficientTensor::set(std::size_t i, std::size_t j, std::size_t k, FieldElem v) {
  if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "tensor entry");
  entries_[index(i, j, k)] = std::move(v);
}

CoefficientTensor CoefficientTensor::reduce_mod(std::uint64_t p) const {
  const Field target = Field::prime(p);
  if (field_.is_prime()) {
    if (field_ == target) return *this;
    throw Error(ErrorKind::FieldMismatch,
                "cannot reduce " + field_.to_string() + " tensor to " + target.to_string());
  }
  std::vector<FieldElem> reduced;
  reduced.reserve(kSize);
  for (const auto& e : entries_) {
    const mpq_class& q = e.rational();
    if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p))) {
      throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides a denominator of the tensor");
    }
    reduced.emplace_back(target, q);
  }
  CoefficientTensor out(target, std::move(reduced));
  out.seed = seed;
  out.source = source;
  return out;
}

CoefficientTensor CoefficientTensor::swapped_roles() const {
  CoefficientTensor out(field_);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) out.entries_[index(i, j, k)] = at(i, k, j);
    }
  }
  out.seed = seed;
  out.source = source;
  return out;
}

ScalarMatrix bilinear_form_matrix(const CoefficientTensor& t, std::size_t i) {
  if (i >= 4) throw Error(ErrorKind::IndexOutOfRange, "bilinear form index " + std::to_string(i));
  ScalarMatrix b(t.field(), 4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) b.set(j, k, t.at(i, j, k));
  }
  return b;
}

FieldElem bilinear_pairing(const CoefficientTensor& t, std::size_t i,
                           std::span<const FieldElem> x, std::span<const FieldElem> y) {
  if (y.size() != 4) throw Error(ErrorKind::InvalidArgument, "y needs 4 coordinates");
  const ScalarMatrix b = bilinear_form_matrix(t, i);
  const Vector bx = b.apply(x);
  FieldElem sum = FieldElem::zero(t.field());
  for (std::size_t j = 0; j < 4; ++j) sum += y[j] * bx[j];
  return sum;
}

}  // namespace cubocubic
