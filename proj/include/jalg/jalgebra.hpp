#ifndef JALG_JALGEBRA_HPP
#define JALG_JALGEBRA_HPP

#include <string>
#include <vector>

#include "jalg/lie.hpp"

namespace jalg {

enum class DomainKind { ball, lieball, siegel3, d5, custom };

std::string kind_name(DomainKind kind);

/// Normal j-algebra: a split-solvable Lie algebra with complex structure J
/// and admissible linear form lambda, together with its marked nilradical and
/// abelian part. Both marked parts are coordinate subspaces.
struct NormalJAlgebra {
  LieAlgebra alg;
  QMatrix J;                    // dim x dim, J^2 = -I
  QVector lambda;               // covector coordinates
  std::vector<int> nilradical_indices;
  std::vector<int> abelian_indices;
  DomainKind kind = DomainKind::custom;
  std::string name;

  int dim() const { return alg.dim(); }
  /// Complex dimension of the underlying domain; the maximal totally real
  /// dimension of a subspace.
  int complex_dim() const { return alg.dim() / 2; }

  Rational lambda_of(const QVector& x) const;
  /// omega(x, y) = lambda([x, y]).
  Rational omega(const QVector& x, const QVector& y) const;
  /// Antisymmetric Gram matrix of omega on the basis.
  QMatrix omega_matrix() const;
  /// Symmetric form B(x, y) = lambda([Jx, y]); positive definite by axiom.
  QMatrix metric_matrix() const;

  Subspace nilradical() const;
  Subspace abelian_part() const;
  bool in_nilradical(const Subspace& s) const;
};

struct AxiomCheck {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string first_failure() const;
};

/// Verifies every structural axiom: J^2 = -I, integrability, lambda
/// invariance, positivity of the metric (exact leading-minor test), the
/// nilradical being a nilpotent ideal, the abelian complement, and for the
/// unit-ball family the Heisenberg relation [x,y] = omega(x,y) * zeta_hat on
/// the nilradical.
AxiomReport check_axioms(const NormalJAlgebra& a);

NormalJAlgebra unit_ball_algebra(int n);  // n >= 2
NormalJAlgebra lie_ball_algebra(int n);   // n >= 3
NormalJAlgebra siegel3_algebra();
NormalJAlgebra d5_algebra();

/// Catalog dispatch; n is ignored for kinds with a fixed size.
NormalJAlgebra catalog_make(DomainKind kind, int n);

/// Parses "ball:4", "lieball:3", "siegel:3", "d5". Returns false when the
/// text is not a catalog spec.
bool parse_catalog_spec(const std::string& text, DomainKind& kind, int& n);

/// One basis element of the matrix model behind siegel3/d5: the pair (A, B)
/// with A lower triangular and B symmetric, both 3x3.
struct SiegelMatrixElement {
  QMatrix A;
  QMatrix B;
};

/// Matrix model basis in catalog order (12 elements; the first 10 span d5).
const std::vector<SiegelMatrixElement>& siegel3_matrix_basis();

/// Measured global sign between brackets of the induced affine vector fields
/// and the matrix-commutator structure constants stored in the catalog.
inline constexpr int kFieldVsMatrixBracketSign = -1;

}  // namespace jalg

#endif
