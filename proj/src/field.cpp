#include "cubocubic/field.hpp"

#include "cubocubic/error.hpp"

namespace cubocubic {

namespace {

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

// Inverse of a nonzero residue by extended Euclid.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime_number(p)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

FieldElem::FieldElem(Field field, long long v) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(mpz_class(static_cast<long>(v)));
  } else {
    value_ = reduce_signed(v, field.characteristic());
  }
}

FieldElem::FieldElem(Field field, const mpz_class& v) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(v);
  } else {
    value_ = reduce_mpz(v, field.characteristic());
  }
}

FieldElem::FieldElem(Field field, const mpq_class& v) : field_(field) {
  if (field.is_rational()) {
    mpq_class c = v;
    c.canonicalize();
    value_ = std::move(c);
    return;
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t den = reduce_mpz(v.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero,
                "denominator of " + v.get_str() + " vanishes mod " + std::to_string(p));
  }
  value_ = reduce_mpz(v.get_num(), p) * inverse_mod(den, p) % p;
}

bool FieldElem::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElem::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldElem::is_negative() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

std::uint64_t FieldElem::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorKind::FieldMismatch, "residue() on a rational element");
}

const mpq_class& FieldElem::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field element");
}

void FieldElem::require_same_field(const FieldElem& b) const {
  if (!(field_ == b.field_)) {
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + b.field_.to_string());
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (auto* v = std::get_if<std::uint64_t>(&r.value_)) {
    if (*v != 0) *v = field_.characteristic() - *v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& b) {
  require_same_field(b);
  if (auto* v = std::get_if<std::uint64_t>(&value_)) {
    *v += std::get<std::uint64_t>(b.value_);
    if (*v >= field_.characteristic()) *v -= field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& b) {
  require_same_field(b);
  if (auto* v = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t w = std::get<std::uint64_t>(b.value_);
    *v = (*v >= w) ? *v - w : *v + field_.characteristic() - w;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& b) {
  require_same_field(b);
  if (auto* v = std::get_if<std::uint64_t>(&value_)) {
    *v = *v * std::get<std::uint64_t>(b.value_) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElem r = *this;
  if (auto* v = std::get_if<std::uint64_t>(&r.value_)) {
    *v = inverse_mod(*v, field_.characteristic());
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& b) {
  require_same_field(b);
  return *this *= b.inverse();
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  if (const auto* v = std::get_if<std::uint64_t>(&value_)) {
    FieldElem r = *this;
    r.value_ = pow_mod(*v, e, field_.characteristic());
    return r;
  }
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

std::string FieldElem::to_string() const {
  if (const auto* v = std::get_if<std::uint64_t>(&value_)) return std::to_string(*v);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

}  // namespace cubocubic
