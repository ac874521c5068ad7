#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubocubic/field.hpp"

namespace cubocubic {

inline constexpr int kNumVars = 4;
inline constexpr int kMaxDegree = 16;

// Which set of homogeneous coordinates a polynomial lives in: x = (x1..x4)
// on the source P^3, y = (y1..y4) on the target P^3.
enum class VarSpace : std::uint8_t { X, Y };

char var_letter(VarSpace s) noexcept;

/// Exponent vector packed into one word as
///   degree << 48 | e1 << 36 | e2 << 24 | e3 << 12 | e4,
/// so that integer comparison is graded lex with x1 > x2 > x3 > x4 and
/// multiplication is word addition.
class Monomial {
 public:
  constexpr Monomial() noexcept = default;
  // Throws DegreeOverflow if the total degree exceeds kMaxDegree.
  explicit Monomial(const std::array<int, kNumVars>& exps);
  static Monomial variable(int i);

  int degree() const noexcept { return static_cast<int>(key_ >> 48); }
  int exponent(int i) const noexcept {
    return static_cast<int>((key_ >> (12 * (3 - i))) & 0xFFFU);
  }
  std::array<int, kNumVars> exponents() const noexcept;
  std::uint64_t key() const noexcept { return key_; }

  bool divides(const Monomial& other) const noexcept;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const noexcept {
    return from_key(other.key_ - key_);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string(VarSpace s) const;

 private:
  static constexpr Monomial from_key(std::uint64_t k) noexcept {
    Monomial m;
    m.key_ = k;
    return m;
  }
  std::uint64_t key_ = 0;
};

/// All monomials of total degree d, in decreasing graded lex order.
std::vector<Monomial> monomials_of_degree(int d);

struct Term {
  Monomial mono;
  FieldElem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in four variables with exact coefficients. Terms are
/// kept strictly decreasing in graded lex order with no zero coefficients,
/// so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly(Field field, VarSpace space) : field_(field), space_(space) {}
  // Canonicalizes: sorts, merges equal monomials, drops zeros.
  MultiPoly(Field field, VarSpace space, std::vector<Term> terms);

  static MultiPoly constant(Field field, VarSpace space, const FieldElem& c);
  static MultiPoly constant(Field field, VarSpace space, long long c) {
    return constant(field, space, FieldElem(field, c));
  }
  // x_{i+1} (0-based index i).
  static MultiPoly variable(Field field, VarSpace space, int i);
  // sum_k coeffs[k] * x_{k+1}
  static MultiPoly linear_form(VarSpace space, std::span<const FieldElem> coeffs);

  const Field& field() const noexcept { return field_; }
  VarSpace space() const noexcept { return space_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  // The zero polynomial counts as homogeneous.
  bool is_homogeneous() const noexcept;
  const Term& leading_term() const { return terms_.front(); }
  FieldElem coefficient(const Monomial& m) const;

  // Same terms, relabelled variable namespace.
  MultiPoly with_space(VarSpace s) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  MultiPoly scale(const FieldElem& c) const;
  MultiPoly mul_monomial(const Monomial& m, const FieldElem& c) const;
  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Formal partial derivative with respect to variable i (0-based).
  MultiPoly derivative(int i) const;

  FieldElem evaluate(std::span<const FieldElem> point) const;

  // Canonical rendering, e.g. "x1^2 - 3*x1*x2 + x4^2".
  std::string to_string() const;

 private:
  void require_compatible(const MultiPoly& q) const;

  Field field_;
  VarSpace space_;
  std::vector<Term> terms_;
};

/// Replace variable i by images[i]. Nonzero images must be homogeneous of a
/// common degree (NonHomogeneousImages otherwise); the result lives in the
/// images' namespace.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Returns q with num == q * den, or nullopt if den does not divide num.
/// Throws DivisorZero for den == 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den);

}  // namespace cubocubic
