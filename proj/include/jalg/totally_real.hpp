#ifndef JALG_TOTALLY_REAL_HPP
#define JALG_TOTALLY_REAL_HPP

#include <string>
#include <vector>

#include "jalg/jalgebra.hpp"

namespace jalg {

/// True iff span(s) and J(span(s)) meet only in zero, tested as
/// rank([s | Js]) = 2 dim s.
bool is_totally_real(const NormalJAlgebra& a, const Subspace& s);

enum class CompletionStatus { completed, not_applicable, failed };

struct CompletionStep {
  QVector added;
  std::string rule;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::failed;
  Subspace result;
  std::vector<CompletionStep> trace;
  std::string message;
};

/// Extends a totally real subalgebra of the unit-ball nilradical to a maximal
/// one. Abelian inputs stay isotropic throughout (greedy Lagrangian
/// extension) and yield abelian outputs; nonabelian inputs contain the center
/// and are extended keeping only total realness. Candidates are the
/// nilradical basis vectors in catalog order, falling back to the reduced
/// basis of the admissible subspace when no coordinate vector qualifies.
CompletionResult complete_ball(const NormalJAlgebra& a, const Subspace& s);

/// Completion inside the Lie-ball nilradical n_{n-1} + R*eta. Inputs inside
/// n_{n-1} are reported not-applicable; otherwise the center is adjoined if
/// missing and then the xi_k missing from the projection of s onto
/// span{xi_k, zeta} are adjoined in index order.
CompletionResult complete_lie_ball(const NormalJAlgebra& a, const Subspace& s);

enum class SteinStatus { stein, not_stein, advisory };

struct SteinVerdict {
  SteinStatus verdict = SteinStatus::advisory;
  std::vector<std::string> reasons;
};

/// Stein decision for the quotient by a unipotent group with Zariski-closure
/// algebra s. For the ball and lie-ball kinds the verdict is exact: stein iff
/// s is totally real. For the other kinds the result is advisory:
/// prop-suff-holds when a greedy completion to a maximal totally real
/// subalgebra succeeds, prop-nec-violated when a sampled orbit fails the
/// totally-real test, inconclusive otherwise.
SteinVerdict stein_decide(const NormalJAlgebra& a, const Subspace& s);

}  // namespace jalg

#endif
