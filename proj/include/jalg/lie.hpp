#ifndef JALG_LIE_HPP
#define JALG_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jalg/linalg.hpp"

namespace jalg {

/// First basis triple violating the Jacobi identity, if any.
struct JacobiDefect {
  bool zero = true;
  int i = -1, j = -1, k = -1;
  QVector defect;
};

/// Finite-dimensional real Lie algebra given by basis labels and sparse
/// structure constants. Constants are stored for i < j only; the i > j case
/// is derived by antisymmetry. The checked factory rejects tables violating
/// the Jacobi identity.
class LieAlgebra {
public:
  using Constants = std::map<std::pair<int, int>, QVector>;

  LieAlgebra() = default;  // the zero-dimensional algebra

  static LieAlgebra checked(std::vector<std::string> labels, Constants constants);
  static LieAlgebra unchecked(std::vector<std::string> labels, Constants constants);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int k) const { return labels_.at(static_cast<size_t>(k)); }
  int label_index(const std::string& name) const;  // -1 when absent

  const Constants& constants() const { return constants_; }

  QVector basis_vector(int k) const;
  QVector basis_bracket(int i, int j) const;
  QVector bracket(const QVector& x, const QVector& y) const;

  /// Matrix of x -> [v, x].
  QMatrix adjoint(const QVector& v) const;

  JacobiDefect jacobi_defect() const;

  /// Restriction to a bracket-closed coordinate subspace. Throws when the
  /// selected coordinates are not closed under the bracket.
  LieAlgebra coordinate_restriction(const std::vector<int>& indices) const;

private:
  LieAlgebra(std::vector<std::string> labels, Constants constants);

  std::vector<std::string> labels_;
  Constants constants_;  // keys (i, j) with i < j; values are bracket coordinates
};

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// Smallest subalgebra containing the generators: fixed point of
/// span-plus-pairwise-brackets.
Subspace lie_generate(const LieAlgebra& alg, const Subspace& gens);

/// { y : [y, s] subset of s }. Requires s to be a subalgebra.
Subspace normalizer(const LieAlgebra& alg, const Subspace& s);

/// { y : [y, s] = 0 }.
Subspace centralizer(const LieAlgebra& alg, const Subspace& s);

/// Derived algebra [g, g] as a subspace.
Subspace derived_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// Length of the lower central series until zero, or nullopt when the series
/// stabilizes at a nonzero term.
std::optional<int> nilpotency_class(const LieAlgebra& alg);

}  // namespace jalg

#endif
