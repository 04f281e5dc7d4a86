#include <doctest.h>

#include "jalg/jalgebra.hpp"
#include "jalg/rng.hpp"
#include "jalg/totally_real.hpp"

using namespace jalg;

namespace {

QVector unit_of(const NormalJAlgebra& a, const std::string& label) {
  return a.alg.basis_vector(a.alg.label_index(label));
}

}  // namespace

TEST_CASE("catalog dimensions and sample brackets") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  CHECK(b3.dim() == 6);
  CHECK(is_zero<Rational>(
      QVector(b3.alg.bracket(unit_of(b3, "alpha"), unit_of(b3, "zeta")) - unit_of(b3, "zeta") * Rational(-2))));

  NormalJAlgebra l3 = lie_ball_algebra(3);
  CHECK(l3.dim() == 6);
  CHECK(is_zero<Rational>(
      QVector(l3.J * unit_of(l3, "zeta") - unit_of(l3, "alpha") - unit_of(l3, "delta"))));

  NormalJAlgebra d5 = d5_algebra();
  CHECK(d5.dim() == 10);
  CHECK(is_zero<Rational>(
      QVector(d5.alg.bracket(unit_of(d5, "zeta2"), unit_of(d5, "xi32p")) - unit_of(d5, "xi32") * Rational(2))));

  CHECK(siegel3_algebra().dim() == 12);
}

TEST_CASE("catalog size preconditions") {
  CHECK_THROWS_AS(unit_ball_algebra(1), std::invalid_argument);
  CHECK_THROWS_AS(lie_ball_algebra(2), std::invalid_argument);
  CHECK_THROWS_AS(catalog_make(DomainKind::siegel3, 4), std::invalid_argument);
  CHECK_NOTHROW(catalog_make(DomainKind::d5, 0));
}

TEST_CASE("catalog spec parsing") {
  DomainKind kind;
  int n = 0;
  CHECK(parse_catalog_spec("ball:4", kind, n));
  CHECK(kind == DomainKind::ball);
  CHECK(n == 4);
  CHECK(parse_catalog_spec("lieball:3", kind, n));
  CHECK(kind == DomainKind::lieball);
  CHECK(parse_catalog_spec("siegel:3", kind, n));
  CHECK(parse_catalog_spec("d5", kind, n));
  CHECK(!parse_catalog_spec("ball", kind, n));
  CHECK(!parse_catalog_spec("ball:x", kind, n));
  CHECK(!parse_catalog_spec("disc:2", kind, n));
}

TEST_CASE("axiom checker passes the catalogs") {
  CHECK(check_axioms(unit_ball_algebra(4)).all_pass());
  CHECK(check_axioms(lie_ball_algebra(5)).all_pass());
  CHECK(check_axioms(d5_algebra()).all_pass());
  CHECK(check_axioms(siegel3_algebra()).all_pass());
}

TEST_CASE("axiom checker catches a flipped lambda") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  b3.lambda = QVector(-b3.lambda);
  AxiomReport report = check_axioms(b3);
  CHECK(!report.all_pass());
  bool positivity_failed = false;
  for (const AxiomCheck& c : report.checks)
    if (c.id == "metric-positive" && !c.pass) positivity_failed = true;
  CHECK(positivity_failed);
  // Witness at the level of the quadratic form: B(xi1, xi1) flipped sign.
  QVector xi1 = unit_of(b3, "xi1");
  CHECK(b3.lambda_of(b3.alg.bracket(b3.J * xi1, xi1)).sign() < 0);
}

TEST_CASE("axiom checker catches a broken J") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  b2.J(0, 0) = Rational(1);  // no longer squares to -I
  AxiomReport report = check_axioms(b2);
  bool found = false;
  for (const AxiomCheck& c : report.checks)
    if (c.id == "J-square" && !c.pass) found = true;
  CHECK(found);
}

TEST_CASE("omega values on the unit ball") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  // With the catalog choice lambda = -zeta*, positivity pins
  // omega(xi1, xi1') = lambda(zeta) = -1.
  CHECK(b2.omega(unit_of(b2, "xi1"), unit_of(b2, "xi1p")) == Rational(-1));
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    QVector x(b2.dim());
    for (int k = 0; k < b2.dim(); ++k) x(k) = rng.rational(4, 3);
    CHECK(b2.omega(x, x) == Rational(0));
  }
}

TEST_CASE("omega matches the trace pairing of the matrix model") {
  NormalJAlgebra s3 = siegel3_algebra();
  const std::vector<SiegelMatrixElement>& basis = siegel3_matrix_basis();
  for (int i = 0; i < s3.dim(); ++i) {
    for (int j = 0; j < s3.dim(); ++j) {
      // Trace of the B-part of the matrix commutator.
      const QMatrix& A1 = basis[static_cast<size_t>(i)].A;
      const QMatrix& B1 = basis[static_cast<size_t>(i)].B;
      const QMatrix& A2 = basis[static_cast<size_t>(j)].A;
      const QMatrix& B2 = basis[static_cast<size_t>(j)].B;
      QMatrix B = A1 * B2 - B1 * A2.transpose() - A2 * B1 + B2 * A1.transpose();
      Rational trace(0);
      for (int r = 0; r < 3; ++r) trace += B(r, r);
      CHECK(s3.omega(s3.alg.basis_vector(i), s3.alg.basis_vector(j)) == trace);
    }
  }
}

TEST_CASE("omega form on the ball nilradical has the center as radical") {
  NormalJAlgebra b3 = unit_ball_algebra(3);
  // Gram matrix of omega restricted to the 5-dimensional nilradical.
  size_t m = b3.nilradical_indices.size();
  QMatrix gram(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      gram(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          b3.lambda_of(b3.alg.basis_bracket(b3.nilradical_indices[x], b3.nilradical_indices[y]));
  QMatrix radical = kernel<Rational>(gram);
  REQUIRE(radical.rows() == 1);
  // The kernel vector is the zeta direction (last nilradical coordinate).
  for (Eigen::Index k = 0; k + 1 < radical.cols(); ++k) CHECK(radical(0, k) == Rational(0));
  CHECK(radical(0, radical.cols() - 1) != Rational(0));
}

TEST_CASE("omega is nondegenerate on the full ball algebra") {
  for (int n : {2, 3, 4}) {
    NormalJAlgebra b = unit_ball_algebra(n);
    CHECK(determinant<Rational>(b.omega_matrix()) != Rational(0));
  }
}

TEST_CASE("a J-invariant span meets its J-image fully") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  Subspace s = Subspace::span_of({unit_of(b2, "xi1"), unit_of(b2, "xi1p")}, b2.dim());
  CHECK(s.image_under(b2.J) == s);
  CHECK(s.intersect(s.image_under(b2.J)) == s);
}

TEST_CASE("abelian subalgebras of the catalogs are totally real") {
  // Sparse generators keep commuting spans common enough to sample.
  auto sparse_vector = [](const NormalJAlgebra& a, Rng& rng) {
    QVector v = QVector::Constant(a.dim(), Rational(0));
    int support = static_cast<int>(rng.int_in(1, 2));
    for (int t = 0; t < support; ++t) v(rng.int_in(0, a.dim() - 1)) += rng.nonzero_rational(2, 2);
    return v;
  };
  Rng rng(52);
  std::vector<NormalJAlgebra> catalogs;
  catalogs.push_back(unit_ball_algebra(3));
  catalogs.push_back(lie_ball_algebra(3));
  catalogs.push_back(d5_algebra());
  catalogs.push_back(siegel3_algebra());
  for (const NormalJAlgebra& a : catalogs) {
    int found = 0;
    int attempts = 0;
    while (found < 25 && attempts < 4000) {
      ++attempts;
      Subspace gens = Subspace::span_of({sparse_vector(a, rng), sparse_vector(a, rng)}, a.dim());
      Subspace s = lie_generate(a.alg, gens);
      bool abelian = true;
      for (Eigen::Index r = 0; r < s.dim() && abelian; ++r)
        for (Eigen::Index q = r + 1; q < s.dim(); ++q)
          if (!is_zero<Rational>(a.alg.bracket(s.basis_vector(r), s.basis_vector(q)))) {
            abelian = false;
            break;
          }
      if (!abelian || s.dim() == 0) continue;
      ++found;
      CHECK(is_totally_real(a, s));
    }
    CHECK(found == 25);
  }
}

TEST_CASE("d5 is the ten-dimensional block of siegel3") {
  NormalJAlgebra d5 = d5_algebra();
  NormalJAlgebra s3 = siegel3_algebra();
  for (int k = 0; k < d5.dim(); ++k) CHECK(d5.alg.label(k) == s3.alg.label(k));
  for (int i = 0; i < d5.dim(); ++i) {
    for (int j = i + 1; j < d5.dim(); ++j) {
      QVector full = s3.alg.basis_bracket(i, j);
      CHECK(is_zero<Rational>(QVector(full.head(d5.dim()) - d5.alg.basis_bracket(i, j))));
      CHECK(is_zero<Rational>(QVector(full.tail(2))));  // the block is closed
    }
    CHECK(is_zero<Rational>(QVector(QVector(s3.J.col(i).head(d5.dim())) - d5.J.col(i))));
    CHECK(s3.lambda(i) == d5.lambda(i));
  }
}

TEST_CASE("the matrix-model complex structure on distinguished elements") {
  NormalJAlgebra d5 = d5_algebra();
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "xi31") - unit_of(d5, "xi31p"))));
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "xi31p") + unit_of(d5, "xi31"))));
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "zeta3") + unit_of(d5, "alpha3"))));
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "alpha3") - unit_of(d5, "zeta3"))));
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "xi21") - unit_of(d5, "xi21p"))));
  CHECK(is_zero<Rational>(QVector(d5.J * unit_of(d5, "zeta2") + unit_of(d5, "alpha2"))));
}

TEST_CASE("emitted names follow the kind") {
  CHECK(unit_ball_algebra(2).name == "ball:2");
  CHECK(lie_ball_algebra(3).name == "lieball:3");
  CHECK(siegel3_algebra().name == "siegel:3");
  CHECK(d5_algebra().name == "d5");
}
