#include <doctest.h>

#include "jalg/linalg.hpp"
#include "jalg/rng.hpp"

using namespace jalg;

namespace {

QMatrix random_qmatrix(Rng& rng, int rows, int cols) {
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.rational(4, 3);
  return m;
}

GMatrix random_gmatrix(Rng& rng, int rows, int cols) {
  GMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.gaussian(4, 3);
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
  CHECK(rank<Rational>(QMatrix::Identity(3, 3)) == 3);
  CHECK(rank<Rational>(QMatrix::Constant(4, 4, Rational(0))) == 0);
}

TEST_CASE("kernel of identity and zero matrices") {
  CHECK(kernel<Rational>(QMatrix::Identity(3, 3)).rows() == 0);
  QMatrix zero23 = QMatrix::Constant(2, 3, Rational(0));
  CHECK(kernel<Rational>(zero23).rows() == 3);
}

TEST_CASE("rank plus nullity equals column count") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = static_cast<int>(rng.int_in(1, 6)), cols = static_cast<int>(rng.int_in(1, 6));
    QMatrix m = random_qmatrix(rng, rows, cols);
    CHECK(rank<Rational>(m) + kernel<Rational>(m).rows() == cols);
    GMatrix g = random_gmatrix(rng, rows, cols);
    CHECK(rank<GaussianRational>(g) + kernel<GaussianRational>(g).rows() == cols);
  }
}

TEST_CASE("kernel vectors solve the system") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m = random_qmatrix(rng, 3, 5);
    QMatrix k = kernel<Rational>(m);
    for (Eigen::Index r = 0; r < k.rows(); ++r)
      CHECK(is_zero<Rational>(QVector(m * k.row(r).transpose())));
  }
}

TEST_CASE("complex elimination uses the field structure") {
  GMatrix m(2, 2);
  GaussianRational i = GaussianRational::i();
  m << GaussianRational(1), i, i, GaussianRational(-1);
  CHECK(rank<GaussianRational>(m) == 1);  // second row is i times the first
  CHECK(kernel<GaussianRational>(m).rows() == 1);
}

TEST_CASE("determinant basics") {
  QMatrix m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(determinant<Rational>(m) == Rational(-2));
  CHECK(determinant<Rational>(QMatrix::Identity(5, 5)) == Rational(1));
  QMatrix singular(2, 2);
  singular << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(determinant<Rational>(singular) == Rational(0));
  CHECK_THROWS_AS(determinant<Rational>(QMatrix(QMatrix::Constant(2, 3, Rational(0)))), std::invalid_argument);
}

TEST_CASE("subspaces are canonical") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix rows = random_qmatrix(rng, 3, 4);
    Subspace s = Subspace::span_of_rows(rows);
    // A reshuffled, rescaled spanning set gives the identical object.
    QMatrix shuffled(4, 4);
    shuffled.row(0) = rows.row(2) * Rational(3);
    shuffled.row(1) = rows.row(0) + rows.row(1);
    shuffled.row(2) = rows.row(1) * Rational(-1, 2);
    shuffled.row(3) = rows.row(0);
    CHECK(Subspace::span_of_rows(shuffled) == s);
  }
}

TEST_CASE("span intersection of equal and complementary spaces") {
  Subspace a = Subspace::span_of_rows(QMatrix::Identity(4, 4).topRows(2));
  CHECK(a.intersect(a) == a);
  Subspace b = Subspace::span_of_rows(QMatrix::Identity(4, 4).bottomRows(2));
  CHECK(a.intersect(b).dim() == 0);
  CHECK_THROWS_AS(a.intersect(Subspace::zero(5)), std::invalid_argument);
}

TEST_CASE("intersection dimension formula") {
  Rng rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    Subspace a = Subspace::span_of_rows(random_qmatrix(rng, static_cast<int>(rng.int_in(0, 4)), 5));
    Subspace b = Subspace::span_of_rows(random_qmatrix(rng, static_cast<int>(rng.int_in(0, 4)), 5));
    Subspace meet = a.intersect(b);
    Subspace join = a.sum(b);
    CHECK(a.dim() + b.dim() == meet.dim() + join.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(join.contains(a));
  }
}

TEST_CASE("reduce splits a vector against a subspace") {
  QMatrix rows(1, 3);
  rows << Rational(1), Rational(1), Rational(0);
  Subspace s = Subspace::span_of_rows(rows);
  QVector v(3);
  v << Rational(2), Rational(3), Rational(5);
  QVector reduced = s.reduce(v);
  CHECK(reduced(0) == Rational(0));
  CHECK(s.contains(QVector(v - reduced)));
  CHECK(!s.contains(v));
}
