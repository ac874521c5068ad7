#include "cubocubic/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "cubocubic/error.hpp"

namespace cubocubic {

char var_letter(VarSpace s) noexcept { return s == VarSpace::X ? 'x' : 'y'; }

Monomial::Monomial(const std::array<int, kNumVars>& exps) {
  int deg = 0;
  std::uint64_t key = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    deg += exps[i];
    if (deg > kMaxDegree) {
      throw Error(ErrorKind::DegreeOverflow, "monomial degree exceeds " + std::to_string(kMaxDegree));
    }
    key |= static_cast<std::uint64_t>(exps[i]) << (12 * (3 - i));
  }
  key_ = key | (static_cast<std::uint64_t>(deg) << 48);
}

Monomial Monomial::variable(int i) {
  std::array<int, kNumVars> e{};
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(e);
}

std::array<int, kNumVars> Monomial::exponents() const noexcept {
  return {exponent(0), exponent(1), exponent(2), exponent(3)};
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (int i = 0; i < kNumVars; ++i) {
    if (exponent(i) > other.exponent(i)) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.degree() + b.degree() > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow, "product degree exceeds " + std::to_string(kMaxDegree));
  }
  return Monomial::from_key(a.key_ + b.key_);
}

std::string Monomial::to_string(VarSpace s) const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    const int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_letter(s);
    out += std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) {
      for (int c = d - a - b; c >= 0; --c) out.emplace_back(std::array<int, kNumVars>{a, b, c, d - a - b - c});
    }
  }
  return out;
}

namespace {

// Sort descending by monomial, merge duplicates, drop zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MultiPoly::MultiPoly(Field field, VarSpace space, std::vector<Term> terms)
    : field_(field), space_(space), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!(t.coeff.field() == field_)) throw Error(ErrorKind::FieldMismatch, "term coefficient");
  }
  canonicalize(terms_);
}

MultiPoly MultiPoly::constant(Field field, VarSpace space, const FieldElem& c) {
  std::vector<Term> t;
  t.push_back({Monomial(), c});
  return MultiPoly(field, space, std::move(t));
}

MultiPoly MultiPoly::variable(Field field, VarSpace space, int i) {
  std::vector<Term> t;
  t.push_back({Monomial::variable(i), FieldElem::one(field)});
  return MultiPoly(field, space, std::move(t));
}

MultiPoly MultiPoly::linear_form(VarSpace space, std::span<const FieldElem> coeffs) {
  if (coeffs.size() != kNumVars) throw Error(ErrorKind::InvalidArgument, "linear form needs 4 coefficients");
  const Field f = coeffs[0].field();
  std::vector<Term> t;
  for (int k = 0; k < kNumVars; ++k) t.push_back({Monomial::variable(k), coeffs[k]});
  return MultiPoly(f, space, std::move(t));
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return terms_.back().mono.degree() == d;  // sorted by degree first
}

FieldElem MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return FieldElem::zero(field_);
}

MultiPoly MultiPoly::with_space(VarSpace s) const {
  MultiPoly r = *this;
  r.space_ = s;
  return r;
}

void MultiPoly::require_compatible(const MultiPoly& q) const {
  if (!(field_ == q.field_)) {
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + q.field_.to_string());
  }
  if (space_ != q.space_) {
    throw Error(ErrorKind::NamespaceMismatch,
                std::string(1, var_letter(space_)) + " vs " + var_letter(q.space_));
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two canonical term lists, optionally negating the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      FieldElem c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_compatible(q);
  terms_ = merge_terms(terms_, q.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_compatible(q);
  terms_ = merge_terms(terms_, q.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  p.require_compatible(q);
  std::map<Monomial, FieldElem, std::greater<>> acc;
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) {
      const Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(m, s.coeff);
      if (inserted) {
        it->second *= t.coeff;
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  }
  MultiPoly r(p.field_, p.space_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  return r;
}

MultiPoly MultiPoly::scale(const FieldElem& c) const {
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "scale");
  MultiPoly r(field_, space_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const FieldElem& c) const {
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "mul_monomial");
  MultiPoly r(field_, space_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  MultiPoly result = constant(field_, space_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.space_ == b.space_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(int i) const {
  if (i < 0 || i >= kNumVars) throw Error(ErrorKind::IndexOutOfRange, "derivative variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono.exponents();
    if (e[i] == 0) continue;
    const FieldElem factor(field_, static_cast<long long>(e[i]));
    --e[i];
    out.push_back({Monomial(e), t.coeff * factor});
  }
  // Order is preserved up to ties introduced by lowering one exponent; the
  // constructor restores the canonical form.
  return MultiPoly(field_, space_, std::move(out));
}

FieldElem MultiPoly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != kNumVars) throw Error(ErrorKind::InvalidArgument, "point needs 4 coordinates");
  for (const auto& c : point) {
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "evaluation point");
  }
  // Powers table up to the degree of the polynomial.
  const int deg = std::max(degree(), 0);
  std::array<std::vector<FieldElem>, kNumVars> powers;
  for (int i = 0; i < kNumVars; ++i) {
    powers[i].reserve(static_cast<std::size_t>(deg) + 1);
    powers[i].push_back(FieldElem::one(field_));
    for (int e = 1; e <= deg; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  FieldElem sum = FieldElem::zero(field_);
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (int i = 0; i < kNumVars; ++i) {
      const int e = t.mono.exponent(i);
      if (e) v *= powers[i][static_cast<std::size_t>(e)];
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.is_negative();
    const FieldElem mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool is_const = t.mono.degree() == 0;
    if (is_const) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += t.mono.to_string(space_);
    } else {
      out += mag.to_string() + "*" + t.mono.to_string(space_);
    }
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != kNumVars) throw Error(ErrorKind::InvalidArgument, "substitute needs 4 images");
  const Field field = images[0].field();
  const VarSpace target = images[0].space();
  int common = -1;
  for (const auto& img : images) {
    if (!(img.field() == field) || !(img.field() == p.field())) {
      throw Error(ErrorKind::FieldMismatch, "substitute images");
    }
    if (img.space() != target) throw Error(ErrorKind::NamespaceMismatch, "substitute images");
    if (img.is_zero()) continue;
    if (!img.is_homogeneous() || (common >= 0 && img.degree() != common)) {
      throw Error(ErrorKind::NonHomogeneousImages, "images must be homogeneous of one degree");
    }
    common = img.degree();
  }

  // Memoized powers images[i]^e for the exponents that occur.
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& table = powers[static_cast<std::size_t>(i)];
    if (table.empty()) table.push_back(MultiPoly::constant(field, target, 1));
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * images[i]);
    return table[static_cast<std::size_t>(e)];
  };

  MultiPoly result(field, target);
  for (const auto& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(field, target, t.coeff);
    for (int i = 0; i < kNumVars; ++i) {
      const int e = t.mono.exponent(i);
      if (e) term = term * power(i, e);
    }
    result += term;
  }
  return result;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisorZero, "exact_divide by zero");
  if (!(num.field() == den.field())) throw Error(ErrorKind::FieldMismatch, "exact_divide");
  if (num.space() != den.space()) throw Error(ErrorKind::NamespaceMismatch, "exact_divide");

  const Term& lead = den.leading_term();
  const FieldElem lead_inv = lead.coeff.inverse();
  MultiPoly remainder = num;
  std::vector<Term> quotient;
  // If num = q * den then LT(remainder) = LT(q') * LT(den) at every step, so
  // a leading term not divisible by LT(den) proves non-divisibility.
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading_term();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    const Monomial m = lead.mono.quotient_of(r.mono);
    const FieldElem c = r.coeff * lead_inv;
    remainder -= den.mul_monomial(m, c);
    quotient.push_back({m, c});
  }
  return MultiPoly(num.field(), num.space(), std::move(quotient));
}

}  // namespace cubocubic
