#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "cubocubic/multipoly.hpp"
#include "cubocubic/poly_matrix.hpp"
#include "cubocubic/report.hpp"
#include "cubocubic/tensor.hpp"

namespace cubocubic {

/// Rational self-map of P^3 given by four homogeneous forms of one degree.
/// The components are polynomials in `source()` variables; their values are
/// coordinates in `target()`.
class CremonaMap {
 public:
  // NonHomogeneousImages unless the nonzero components are homogeneous of
  // a common degree.
  CremonaMap(std::array<MultiPoly, 4> components, VarSpace target);

  static CremonaMap identity(Field field, VarSpace space);

  const std::array<MultiPoly, 4>& components() const noexcept { return components_; }
  const MultiPoly& operator[](std::size_t i) const { return components_[i]; }
  const Field& field() const noexcept { return components_[0].field(); }
  VarSpace source() const noexcept { return components_[0].space(); }
  VarSpace target() const noexcept { return target_; }
  // Common degree of the components, -1 if they are all zero.
  int degree() const noexcept;
  bool is_zero() const noexcept;

  std::array<FieldElem, 4> evaluate(std::span<const FieldElem> point) const;

 private:
  std::array<MultiPoly, 4> components_;
  VarSpace target_;
};

/// outer ∘ inner: the components of outer with each of its variables
/// replaced by the matching component of inner. NamespaceMismatch unless
/// inner's target is outer's source.
CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner);

/// Given a self-composite G with G_i = lambda * v_i for every coordinate v_i,
/// returns lambda. Throws NotBirational when some G_i is not divisible by v_i,
/// the quotients disagree, or lambda is zero.
MultiPoly proportionality_factor(const CremonaMap& composite);

/// Everything the tensor determines symbolically.
struct DeterminantalData {
  CoefficientTensor tensor;
  PolyMatrix A;        // 3x4 in x, rows are the slices i = 0..2
  PolyMatrix M;        // 4x4 in x, m_ij = sum_k a[i][j][k] x_k
  PolyMatrix N;        // 4x4 in y, n_ik = sum_j a[i][j][k] y_j
  PolyMatrix A_prime;  // first three rows of N
  MultiPoly det_M;
  MultiPoly det_N;
  CremonaMap phi;  // x -> y, cubic minors of A
  CremonaMap psi;  // y -> x, cubic minors of A'
};

/// f_j = (-1)^{4+j} det(A without column j) for j = 1..4: the signed maximal
/// minors of a 3x4 matrix, equal to the last-row cofactors of any 4x4 matrix
/// whose leading rows are A.
std::array<MultiPoly, 4> signed_maximal_minors(const PolyMatrix& a);

/// Builds all matrices and maps without any genericity test.
DeterminantalData assemble(const CoefficientTensor& t);

/// assemble() plus the gate: DegenerateTensor if det M or det N vanishes
/// identically.
DeterminantalData build_data(const CoefficientTensor& t);

CheckRecord check_swap_identity(const DeterminantalData& d);
CheckRecord check_laplace_containment(const DeterminantalData& d);

struct InverseCompositionResult {
  CheckRecord record;
  std::optional<MultiPoly> lambda;  // psi ∘ phi = lambda * x
  std::optional<MultiPoly> mu;      // phi ∘ psi = mu * y
};
InverseCompositionResult check_inverse_composition(const DeterminantalData& d);

struct SurfaceTransferResult {
  CheckRecord record;
  std::optional<MultiPoly> q;         // det N(phi(x)) = q * det M
  std::optional<MultiPoly> q_mirror;  // det M(psi(y)) = q' * det N
};
SurfaceTransferResult check_surface_transfer_symbolic(const DeterminantalData& d);

/// Fast genericity gates used by tensor generation: det M != 0, det N != 0,
/// psi ∘ phi proportional to the identity with lambda != 0. Returns the name
/// of the first failing gate.
std::optional<std::string> first_failed_gate(const CoefficientTensor& t);

}  // namespace cubocubic
