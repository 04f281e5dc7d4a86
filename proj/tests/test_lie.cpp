#include <doctest.h>

#include "jalg/jalgebra.hpp"
#include "jalg/lie.hpp"
#include "jalg/rng.hpp"

using namespace jalg;

namespace {

QVector unit_of(const NormalJAlgebra& a, const std::string& label) {
  return a.alg.basis_vector(a.alg.label_index(label));
}

QVector random_vector(const LieAlgebra& alg, Rng& rng) {
  QVector v(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) v(k) = rng.rational(3, 2);
  return v;
}

}  // namespace

TEST_CASE("catalog brackets match the tables") {
  NormalJAlgebra b4 = unit_ball_algebra(4);
  CHECK(is_zero<Rational>(
      QVector(b4.alg.bracket(unit_of(b4, "xi1"), unit_of(b4, "xi1p")) - unit_of(b4, "zeta"))));
  NormalJAlgebra l4 = lie_ball_algebra(4);
  CHECK(is_zero<Rational>(
      QVector(l4.alg.bracket(unit_of(l4, "eta"), unit_of(l4, "xi1p")) - unit_of(l4, "xi1") * Rational(2))));
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  NormalJAlgebra a = unit_ball_algebra(3);
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    QVector x = random_vector(a.alg, rng), y = random_vector(a.alg, rng), z = random_vector(a.alg, rng);
    CHECK(is_zero<Rational>(a.alg.bracket(x, x)));
    CHECK(is_zero<Rational>(QVector(a.alg.bracket(x, y) + a.alg.bracket(y, x))));
    Rational s = rng.rational(3, 2);
    QVector lhs = a.alg.bracket(x, y * s + z);
    QVector rhs = a.alg.bracket(x, y) * s + a.alg.bracket(x, z);
    CHECK(is_zero<Rational>(QVector(lhs - rhs)));
  }
}

TEST_CASE("jacobi defect is zero on the catalogs") {
  CHECK(unit_ball_algebra(5).alg.jacobi_defect().zero);
  CHECK(lie_ball_algebra(4).alg.jacobi_defect().zero);
  CHECK(d5_algebra().alg.jacobi_defect().zero);
  CHECK(siegel3_algebra().alg.jacobi_defect().zero);
}

TEST_CASE("a corrupted table is rejected") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  LieAlgebra::Constants constants = b3.alg.constants();
  int alpha = b3.alg.label_index("alpha"), zeta = b3.alg.label_index("zeta");
  constants[{alpha, zeta}] = QVector(-constants[{alpha, zeta}]);  // [alpha,zeta] = +2 zeta
  JacobiDefect defect = LieAlgebra::unchecked(b3.alg.labels(), constants).jacobi_defect();
  CHECK(!defect.zero);
  CHECK(defect.i >= 0);
  CHECK_THROWS_AS(LieAlgebra::checked(b3.alg.labels(), constants), std::invalid_argument);
}

TEST_CASE("subalgebra tests") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  CHECK(is_subalgebra(b2.alg, Subspace::full(b2.dim())));
  CHECK(is_subalgebra(b2.alg, Subspace::span_of({unit_of(b2, "xi1")}, b2.dim())));
  Subspace pair = Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim());
  CHECK(!is_subalgebra(b2.alg, pair));  // [xi1, xi1'] = zeta is outside
}

TEST_CASE("lie_generate reaches the fixed point") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  Subspace pair = Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim());
  Subspace generated = lie_generate(b2.alg, pair);
  CHECK(generated.dim() == 3);
  CHECK(generated == b2.nilradical());
  CHECK(lie_generate(b2.alg, generated) == generated);  // idempotent on subalgebras
}

TEST_CASE("lie_generate is monotone in its generators") {
  NormalJAlgebra a = unit_ball_algebra(3);
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace small = Subspace::span_of({random_vector(a.alg, rng)}, a.dim());
    Subspace large = small.extend(random_vector(a.alg, rng));
    CHECK(lie_generate(a.alg, large).contains(lie_generate(a.alg, small)));
    CHECK(lie_generate(a.alg, small).contains(small));
  }
}

TEST_CASE("normalizer of the center is everything") {
  for (int n : {2, 3, 5}) {
    NormalJAlgebra b = unit_ball_algebra(n);
    Subspace center = Subspace::span_of({unit_of(b, "zeta")}, b.dim());
    CHECK(normalizer(b.alg, center) == Subspace::full(b.dim()));
  }
}

TEST_CASE("normalizer requires a subalgebra and contains it") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  Subspace bad = Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim());
  CHECK_THROWS_AS(normalizer(b2.alg, bad), std::invalid_argument);

  NormalJAlgebra a = unit_ball_algebra(4);
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    Subspace s = lie_generate(a.alg, Subspace::span_of({random_vector(a.alg, rng)}, a.dim()));
    Subspace norm = normalizer(a.alg, s);
    CHECK(norm.contains(s));
    CHECK(norm.contains(centralizer(a.alg, s)));
  }
}

TEST_CASE("centralizer facts") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  Subspace central = centralizer(b2.alg, b2.nilradical());
  CHECK(central == Subspace::span_of({unit_of(b2, "zeta")}, b2.dim()));
  CHECK(centralizer(b2.alg, Subspace::zero(b2.dim())) == Subspace::full(b2.dim()));

  // A random central direction is normalized by everything.
  NormalJAlgebra b3 = unit_ball_algebra(3);
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace line = Subspace::span_of({QVector(unit_of(b3, "zeta") * rng.nonzero_rational(4, 3))}, b3.dim());
    CHECK(normalizer(b3.alg, line) == Subspace::full(b3.dim()));
  }
}

TEST_CASE("nilpotency classes") {
  NormalJAlgebra b4 = unit_ball_algebra(4);
  LieAlgebra nil = b4.alg.coordinate_restriction(b4.nilradical_indices);
  CHECK(nilpotency_class(nil) == 2);  // Heisenberg

  LieAlgebra abelian = LieAlgebra::checked({"e1", "e2", "e3"}, {});
  CHECK(nilpotency_class(abelian) == 1);

  CHECK(!nilpotency_class(unit_ball_algebra(2).alg).has_value());  // alpha acts by nonzero weights
}

TEST_CASE("codimension-one subalgebras of a nilpotent algebra are ideals") {
  NormalJAlgebra d5 = d5_algebra();
  LieAlgebra nil = d5.alg.coordinate_restriction(d5.nilradical_indices);
  Subspace derived = derived_subalgebra(nil, Subspace::full(nil.dim()));
  Rng rng(45);
  for (int trial = 0; trial < 15; ++trial) {
    // Any hyperplane containing the derived algebra is a subalgebra.
    Subspace s = derived;
    while (s.dim() < nil.dim() - 1) s = s.extend(random_vector(nil, rng));
    REQUIRE(is_subalgebra(nil, s));
    CHECK(normalizer(nil, s) == Subspace::full(nil.dim()));
  }
}

TEST_CASE("coordinate restriction rejects non-closed subspaces") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  int xi1 = b2.alg.label_index("xi1"), xi1p = b2.alg.label_index("xi1p");
  CHECK_THROWS_AS(b2.alg.coordinate_restriction({xi1, xi1p}), std::invalid_argument);
}
