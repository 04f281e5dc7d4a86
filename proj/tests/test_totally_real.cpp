#include <doctest.h>

#include "jalg/rng.hpp"
#include "jalg/siegel.hpp"
#include "jalg/totally_real.hpp"

using namespace jalg;

namespace {

QVector unit_of(const NormalJAlgebra& a, const std::string& label) {
  return a.alg.basis_vector(a.alg.label_index(label));
}

}  // namespace

TEST_CASE("totally real examples") {
  NormalJAlgebra l3 = lie_ball_algebra(3);
  CHECK(is_totally_real(l3, Subspace::span_of({unit_of(l3, "xi1p")}, l3.dim())));

  NormalJAlgebra b2 = unit_ball_algebra(2);
  CHECK(!is_totally_real(b2, Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim())));

  NormalJAlgebra d5 = d5_algebra();
  Subspace n_gamma = Subspace::span_of({d5_x1(d5), d5_x2(d5), d5_x3(d5)}, d5.dim());
  CHECK(is_totally_real(d5, n_gamma));

  CHECK(is_totally_real(b2, Subspace::zero(b2.dim())));
}

TEST_CASE("complete_ball input validation") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  // Not a subalgebra (and not totally real either): xi1, xi1'.
  Subspace bad = Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim());
  CHECK_THROWS_AS(complete_ball(b2, bad), std::invalid_argument);
  // Not inside the nilradical.
  Subspace alpha = Subspace::span_of({unit_of(b2, "alpha")}, b2.dim());
  CHECK_THROWS_AS(complete_ball(b2, alpha), std::invalid_argument);
  // Wrong kind.
  NormalJAlgebra l3 = lie_ball_algebra(3);
  CHECK_THROWS_AS(complete_ball(l3, Subspace::zero(l3.dim())), std::invalid_argument);
}

TEST_CASE("complete_ball accepts the zero subspace") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  CompletionResult r = complete_ball(b2, Subspace::zero(b2.dim()));
  REQUIRE(r.status == CompletionStatus::completed);
  CHECK(r.result == Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "zeta")}, b2.dim()));
  CHECK(r.trace.size() == 2);
  CHECK(r.trace[0].rule == "isotropic-basis");
}

TEST_CASE("complete_ball falls back to reduced candidates when no basis vector fits") {
  // span{xi1 + xi2 + xi1' + xi2'} is omega-orthogonal to no coordinate basis
  // vector of the nilradical, so the greedy step needs the reduced fallback.
  NormalJAlgebra b3 = unit_ball_algebra(3);
  QVector seed_vec =
      unit_of(b3, "xi1") + unit_of(b3, "xi2") + unit_of(b3, "xi1p") + unit_of(b3, "xi2p");
  Subspace seed = Subspace::span_of({seed_vec}, b3.dim());
  REQUIRE(is_totally_real(b3, seed));
  CompletionResult r = complete_ball(b3, seed);
  REQUIRE(r.status == CompletionStatus::completed);
  CHECK(r.result.dim() == 3);
  CHECK(r.result.contains(seed));
  CHECK(is_totally_real(b3, r.result));
  bool used_fallback = false;
  for (const CompletionStep& step : r.trace) used_fallback |= step.rule == "isotropic-reduced";
  CHECK(used_fallback);
}

TEST_CASE("complete_ball keeps nonabelian inputs intact") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  std::vector<QVector> rows = {unit_of(b3, "xi1"), QVector(unit_of(b3, "xi1p") + unit_of(b3, "xi2p")),
                               unit_of(b3, "zeta")};
  Subspace heisenberg = Subspace::span_of(rows, b3.dim());
  CompletionResult r = complete_ball(b3, heisenberg);
  REQUIRE(r.status == CompletionStatus::completed);
  CHECK(r.result == heisenberg);
  CHECK(r.trace.empty());
}

TEST_CASE("complete_lie_ball worked examples") {
  NormalJAlgebra l3 = lie_ball_algebra(3);

  Subspace eta = Subspace::span_of({unit_of(l3, "eta")}, l3.dim());
  CompletionResult r1 = complete_lie_ball(l3, eta);
  REQUIRE(r1.status == CompletionStatus::completed);
  CHECK(r1.result == Subspace::span_of({unit_of(l3, "eta"), unit_of(l3, "zeta"), unit_of(l3, "xi1")}, l3.dim()));

  Subspace xi1p = Subspace::span_of({unit_of(l3, "xi1p")}, l3.dim());
  CHECK(complete_lie_ball(l3, xi1p).status == CompletionStatus::not_applicable);

  QVector mixed = unit_of(l3, "xi1p") + unit_of(l3, "eta");
  CompletionResult r2 = complete_lie_ball(l3, Subspace::span_of({mixed}, l3.dim()));
  REQUIRE(r2.status == CompletionStatus::completed);
  CHECK(r2.result == Subspace::span_of({mixed, unit_of(l3, "zeta"), unit_of(l3, "xi1")}, l3.dim()));

  // The zero subspace sits inside the ball ideal, so nothing is promised.
  CHECK(complete_lie_ball(l3, Subspace::zero(l3.dim())).status == CompletionStatus::not_applicable);
}

TEST_CASE("complete_lie_ball input validation") {
  NormalJAlgebra l3 = lie_ball_algebra(3);
  Subspace not_tr = Subspace::span_of({unit_of(l3, "xi1"), unit_of(l3, "xi1p"), unit_of(l3, "zeta")}, l3.dim());
  CHECK_THROWS_AS(complete_lie_ball(l3, not_tr), std::invalid_argument);
  NormalJAlgebra b2 = unit_ball_algebra(2);
  CHECK_THROWS_AS(complete_lie_ball(b2, Subspace::zero(b2.dim())), std::invalid_argument);
}

TEST_CASE("stein decisions on the ball and lie ball") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  std::vector<QVector> rows = {unit_of(b3, "xi1"), QVector(unit_of(b3, "xi1p") + unit_of(b3, "xi2p")),
                               unit_of(b3, "zeta")};
  CHECK(stein_decide(b3, Subspace::span_of(rows, b3.dim())).verdict == SteinStatus::stein);

  NormalJAlgebra l3 = lie_ball_algebra(3);
  CHECK(stein_decide(l3, Subspace::span_of({unit_of(l3, "xi1p")}, l3.dim())).verdict == SteinStatus::stein);
  Subspace pair = Subspace::span_of({unit_of(l3, "xi1"), unit_of(l3, "xi1p")}, l3.dim());
  CHECK(stein_decide(l3, pair).verdict == SteinStatus::not_stein);
}

TEST_CASE("stein verdict depends only on the span") {
  NormalJAlgebra l3 = lie_ball_algebra(3);
  Rng rng(61);
  QVector v = unit_of(l3, "xi1p");
  for (int trial = 0; trial < 10; ++trial) {
    Subspace s = Subspace::span_of({QVector(v * rng.nonzero_rational(5, 4))}, l3.dim());
    CHECK(stein_decide(l3, s).verdict == SteinStatus::stein);
  }

  // Random invertible changes of the spanning set leave the verdict alone.
  NormalJAlgebra b3 = unit_ball_algebra(3);
  std::vector<QVector> rows = {unit_of(b3, "xi1"), QVector(unit_of(b3, "xi1p") + unit_of(b3, "xi2p")),
                               unit_of(b3, "zeta")};
  Subspace reference = Subspace::span_of(rows, b3.dim());
  SteinVerdict expected = stein_decide(b3, reference);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix change(3, 3);
    do {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) change(r, c) = rng.rational(3, 2);
    } while (determinant<Rational>(change) == Rational(0));
    std::vector<QVector> mixed;
    for (int r = 0; r < 3; ++r) {
      QVector w = QVector::Constant(b3.dim(), Rational(0));
      for (int c = 0; c < 3; ++c) w += rows[static_cast<size_t>(c)] * change(r, c);
      mixed.push_back(w);
    }
    Subspace s = Subspace::span_of(mixed, b3.dim());
    REQUIRE(s == reference);
    CHECK(stein_decide(b3, s).verdict == expected.verdict);
  }
}

TEST_CASE("stein preconditions") {
  NormalJAlgebra l3 = lie_ball_algebra(3);
  // Outside the nilradical.
  CHECK_THROWS_AS(stein_decide(l3, Subspace::span_of({unit_of(l3, "delta")}, l3.dim())), std::invalid_argument);
  // Totally real but not a subalgebra: refused rather than silently closed.
  Subspace tr_not_alg =
      Subspace::span_of({QVector(unit_of(l3, "xi1") + unit_of(l3, "eta")), unit_of(l3, "xi1p")}, l3.dim());
  REQUIRE(is_totally_real(l3, tr_not_alg));
  REQUIRE(!is_subalgebra(l3.alg, tr_not_alg));
  CHECK_THROWS_AS(stein_decide(l3, tr_not_alg), std::invalid_argument);
}

TEST_CASE("advisory path on the five-dimensional domain") {
  NormalJAlgebra d5 = d5_algebra();

  // An abelian line completes greedily, so the sufficient criterion fires.
  SteinVerdict easy = stein_decide(d5, Subspace::span_of({unit_of(d5, "xi31")}, d5.dim()));
  CHECK(easy.verdict == SteinStatus::advisory);
  CHECK(easy.reasons == std::vector<std::string>{"prop-suff-holds"});

  // The counterexample span admits no completion; the verdict stays advisory.
  Subspace n_gamma = Subspace::span_of({d5_x1(d5), d5_x2(d5), d5_x3(d5)}, d5.dim());
  SteinVerdict hard = stein_decide(d5, n_gamma);
  CHECK(hard.verdict == SteinStatus::advisory);
  REQUIRE(hard.reasons.size() == 1);
  CHECK(hard.reasons[0] != "prop-suff-holds");
}
