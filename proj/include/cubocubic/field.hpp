#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cubocubic {

/// A coefficient field: either the rationals or F_p for a prime p < 2^31.
class Field {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

  static Field rational() noexcept { return Field(0); }
  // Throws InvalidArgument unless p is a prime below kMaxPrime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  // 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// Exact scalar in a Field. F_p residues are kept in [0, p); rationals are
/// canonical (lowest terms, positive denominator).
class FieldElem {
 public:
  FieldElem() : field_(Field::rational()), value_(mpq_class(0)) {}
  FieldElem(Field field, long long v);
  FieldElem(Field field, const mpz_class& v);
  // Rational fields take the value as is; prime fields reduce numerator
  // times inverse denominator (DivisionByZero when p divides the denominator).
  FieldElem(Field field, const mpq_class& v);

  static FieldElem zero(Field f) { return FieldElem(f, 0LL); }
  static FieldElem one(Field f) { return FieldElem(f, 1LL); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Only valid for prime fields / rational fields respectively.
  std::uint64_t residue() const;
  const mpq_class& rational() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b);
  FieldElem& operator-=(const FieldElem& b);
  FieldElem& operator*=(const FieldElem& b);
  FieldElem& operator/=(const FieldElem& b);
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Sign of the value: rationals by sign, prime residues are nonnegative.
  bool is_negative() const noexcept;

  std::string to_string() const;

 private:
  void require_same_field(const FieldElem& b) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

}  // namespace cubocubic
