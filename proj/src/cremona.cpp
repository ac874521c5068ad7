#include "cubocubic/cremona.hpp"

#include <algorithm>
#include <utility>

#include "cubocubic/error.hpp"

namespace cubocubic {

CremonaMap::CremonaMap(std::array<MultiPoly, 4> components, VarSpace target)
    : components_(std::move(components)), target_(target) {
  int common = -1;
  for (const auto& c : components_) {
    if (!(c.field() == components_[0].field())) throw Error(ErrorKind::FieldMismatch, "map components");
    if (c.space() != components_[0].space()) throw Error(ErrorKind::NamespaceMismatch, "map components");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || (common >= 0 && c.degree() != common)) {
      throw Error(ErrorKind::NonHomogeneousImages, "map components must share one degree");
    }
    common = c.degree();
  }
}

CremonaMap CremonaMap::identity(Field field, VarSpace space) {
  return CremonaMap({MultiPoly::variable(field, space, 0), MultiPoly::variable(field, space, 1),
                     MultiPoly::variable(field, space, 2), MultiPoly::variable(field, space, 3)},
                    space);
}

int CremonaMap::degree() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_zero()) return c.degree();
  }
  return -1;
}

bool CremonaMap::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const MultiPoly& c) { return c.is_zero(); });
}

std::array<FieldElem, 4> CremonaMap::evaluate(std::span<const FieldElem> point) const {
  return {components_[0].evaluate(point), components_[1].evaluate(point),
          components_[2].evaluate(point), components_[3].evaluate(point)};
}

CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner) {
  if (outer.source() != inner.target()) {
    throw Error(ErrorKind::NamespaceMismatch, "compose: inner target is not outer source");
  }
  const std::span<const MultiPoly> images(inner.components());
  return CremonaMap({substitute(outer[0], images), substitute(outer[1], images),
                     substitute(outer[2], images), substitute(outer[3], images)},
                    outer.target());
}

MultiPoly proportionality_factor(const CremonaMap& composite) {
  if (composite.source() != composite.target()) {
    throw Error(ErrorKind::NamespaceMismatch, "proportionality_factor needs a self-map");
  }
  std::optional<MultiPoly> factor;
  for (int i = 0; i < kNumVars; ++i) {
    const MultiPoly var = MultiPoly::variable(composite.field(), composite.source(), i);
    auto quotient = exact_divide(composite[static_cast<std::size_t>(i)], var);
    if (!quotient) {
      throw Error(ErrorKind::NotBirational,
                  "component " + std::to_string(i + 1) + " is not divisible by its coordinate");
    }
    if (factor && !(*factor == *quotient)) {
      throw Error(ErrorKind::NotBirational, "component quotients disagree");
    }
    factor = std::move(quotient);
  }
  if (factor->is_zero()) throw Error(ErrorKind::NotBirational, "composite map is identically zero");
  return *factor;
}

std::array<MultiPoly, 4> signed_maximal_minors(const PolyMatrix& a) {
  if (a.rows() != 3 || a.cols() != 4) throw Error(ErrorKind::InvalidArgument, "need a 3x4 matrix");
  const std::array<std::size_t, 0> no_rows{};
  std::array<MultiPoly, 4> out{MultiPoly(a.field(), a.space()), MultiPoly(a.field(), a.space()),
                               MultiPoly(a.field(), a.space()), MultiPoly(a.field(), a.space())};
  for (std::size_t j = 0; j < 4; ++j) {
    const std::array<std::size_t, 1> col{j};
    MultiPoly m = minor(a, no_rows, col);
    // (-1)^{4 + (j+1)}
    out[j] = (j % 2 == 1) ? std::move(m) : -m;
  }
  return out;
}

DeterminantalData assemble(const CoefficientTensor& t) {
  const Field f = t.field();
  PolyMatrix m(f, VarSpace::X, 4, 4);
  PolyMatrix n(f, VarSpace::Y, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::array<FieldElem, 4> over_k{t.at(i, j, 0), t.at(i, j, 1), t.at(i, j, 2), t.at(i, j, 3)};
      m.set(i, j, MultiPoly::linear_form(VarSpace::X, over_k));
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const std::array<FieldElem, 4> over_j{t.at(i, 0, k), t.at(i, 1, k), t.at(i, 2, k), t.at(i, 3, k)};
      n.set(i, k, MultiPoly::linear_form(VarSpace::Y, over_j));
    }
  }
  PolyMatrix a = m.row_block(0, 3);
  PolyMatrix a_prime = n.row_block(0, 3);
  MultiPoly det_m = det_poly(m);
  MultiPoly det_n = det_poly(n);
  CremonaMap phi(signed_maximal_minors(a), VarSpace::Y);
  CremonaMap psi(signed_maximal_minors(a_prime), VarSpace::X);
  return DeterminantalData{t,
                           std::move(a),
                           std::move(m),
                           std::move(n),
                           std::move(a_prime),
                           std::move(det_m),
                           std::move(det_n),
                           std::move(phi),
                           std::move(psi)};
}

DeterminantalData build_data(const CoefficientTensor& t) {
  DeterminantalData d = assemble(t);
  if (d.det_M.is_zero()) throw Error(ErrorKind::DegenerateTensor, "det M(x) vanishes identically");
  if (d.det_N.is_zero()) throw Error(ErrorKind::DegenerateTensor, "det N(y) vanishes identically");
  return d;
}

namespace {

// Coefficient of x_k y_j in sum_j m_ij(x) y_j, read off the x-linear entries.
ScalarMatrix expand_rows_times_y(const PolyMatrix& m, std::size_t i) {
  ScalarMatrix c(m.field(), 4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (const auto& term : m(i, j).terms()) {
      if (term.mono.degree() != 1) throw Error(ErrorKind::InvalidArgument, "entry is not a linear form");
      for (int k = 0; k < kNumVars; ++k) {
        if (term.mono.exponent(k) == 1) {
          const auto kk = static_cast<std::size_t>(k);
          c.set(j, kk, c(j, kk) + term.coeff);
        }
      }
    }
  }
  return c;
}

// Coefficient of x_k y_j in sum_k n_ik(y) x_k.
ScalarMatrix expand_rows_times_x(const PolyMatrix& n, std::size_t i) {
  ScalarMatrix c(n.field(), 4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& term : n(i, k).terms()) {
      if (term.mono.degree() != 1) throw Error(ErrorKind::InvalidArgument, "entry is not a linear form");
      for (int j = 0; j < kNumVars; ++j) {
        if (term.mono.exponent(j) == 1) {
          const auto jj = static_cast<std::size_t>(j);
          c.set(jj, k, c(jj, k) + term.coeff);
        }
      }
    }
  }
  return c;
}

}  // namespace

CheckRecord check_swap_identity(const DeterminantalData& d) {
  CheckRecord rec;
  rec.name = "swap_identity";
  int rows_equal = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const ScalarMatrix lhs = expand_rows_times_y(d.M, i);
    const ScalarMatrix rhs = expand_rows_times_x(d.N, i);
    if (lhs == rhs) {
      ++rows_equal;
    } else {
      rec.fail("row " + std::to_string(i + 1) + " of M(x)y^T differs from N(y)x^T");
      rec.witnesses.push_back("row " + std::to_string(i + 1) + ": " + lhs.to_string() + " vs " +
                              rhs.to_string());
    }
  }
  rec.details["rows_equal"] = rows_equal;
  return rec;
}

CheckRecord check_laplace_containment(const DeterminantalData& d) {
  CheckRecord rec;
  rec.name = "laplace_containment";
  // Cofactors of the last row computed independently from the 3x3 minors of A.
  MultiPoly expansion(d.M.field(), VarSpace::X);
  int cofactors_matching_phi = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    const std::array<std::size_t, 1> col{j};
    const std::array<std::size_t, 0> no_rows{};
    MultiPoly cofactor = minor(d.A, no_rows, col);
    if (j % 2 == 0) cofactor = -cofactor;  // (-1)^{4 + (j+1)}
    expansion += d.M(3, j) * cofactor;
    if (cofactor == d.phi[j]) {
      ++cofactors_matching_phi;
    } else {
      rec.fail("cofactor " + std::to_string(j + 1) + " differs from phi component");
    }
  }
  const bool identity = expansion == d.det_M;
  if (!identity) rec.fail("det M differs from its last-row Laplace expansion");
  rec.details["cofactors_matching_phi"] = cofactors_matching_phi;
  rec.details["det_M_equals_expansion"] = identity;
  rec.details["det_M_degree"] = d.det_M.degree();
  return rec;
}

InverseCompositionResult check_inverse_composition(const DeterminantalData& d) {
  InverseCompositionResult out;
  CheckRecord& rec = out.record;
  rec.name = "inverse_composition";
  rec.details["phi_degree"] = d.phi.degree();
  rec.details["psi_degree"] = d.psi.degree();
  if (!d.phi.is_zero() && d.phi.degree() != 3) rec.fail("phi components are not cubics");
  if (!d.psi.is_zero() && d.psi.degree() != 3) rec.fail("psi components are not cubics");

  auto factor = [&rec](const CremonaMap& composite, const char* label) -> std::optional<MultiPoly> {
    try {
      MultiPoly f = proportionality_factor(composite);
      rec.details[std::string(label) + "_degree"] = f.degree();
      rec.details[std::string(label) + "_homogeneous"] = f.is_homogeneous();
      rec.details[std::string(label) + "_terms"] = f.num_terms();
      if (!f.is_homogeneous() || f.degree() != 8) {
        rec.fail(std::string(label) + " is not a homogeneous form of degree 8");
      }
      return f;
    } catch (const Error& e) {
      rec.fail(std::string(label) + ": " + e.what());
      return std::nullopt;
    }
  };
  out.lambda = factor(compose(d.psi, d.phi), "lambda");
  out.mu = factor(compose(d.phi, d.psi), "mu");
  return out;
}

SurfaceTransferResult check_surface_transfer_symbolic(const DeterminantalData& d) {
  SurfaceTransferResult out;
  CheckRecord& rec = out.record;
  rec.name = "surface_transfer_symbolic";
  if (d.det_M.is_zero() || d.det_N.is_zero()) {
    rec.fail("precondition violated: det M or det N vanishes identically");
    return out;
  }
  auto divide = [&rec](const MultiPoly& pulled_back, const MultiPoly& det, const char* label)
      -> std::optional<MultiPoly> {
    rec.details[std::string(label) + "_numerator_degree"] = pulled_back.degree();
    auto q = exact_divide(pulled_back, det);
    if (!q) {
      rec.fail(std::string(label) + ": NotDivisible");
      return std::nullopt;
    }
    rec.details[std::string(label) + "_degree"] = q->degree();
    if (q->is_zero() || !q->is_homogeneous() || q->degree() != 8) {
      rec.fail(std::string(label) + " is not a nonzero homogeneous form of degree 8");
    }
    return q;
  };
  const std::span<const MultiPoly> phi(d.phi.components());
  const std::span<const MultiPoly> psi(d.psi.components());
  out.q = divide(substitute(d.det_N, phi), d.det_M, "q");
  out.q_mirror = divide(substitute(d.det_M, psi), d.det_N, "q_mirror");
  return out;
}

std::optional<std::string> first_failed_gate(const CoefficientTensor& t) {
  const DeterminantalData d = assemble(t);
  if (d.det_M.is_zero()) return "det_M_nonzero";
  if (d.det_N.is_zero()) return "det_N_nonzero";
  try {
    (void)proportionality_factor(compose(d.psi, d.phi));
  } catch (const Error&) {
    return "lambda_nonzero";
  }
  return std::nullopt;
}

}  // namespace cubocubic
