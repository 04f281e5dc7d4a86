#include <doctest.h>

#include <sstream>

#include "jalg/io.hpp"
#include "jalg/siegel.hpp"

using namespace jalg;

namespace {

NormalJAlgebra reparse(const NormalJAlgebra& a) {
  std::istringstream in(print_algebra(a));
  return parse_algebra(in);
}

}  // namespace

TEST_CASE("algebra files round trip byte for byte") {
  for (const char* spec : {"ball:2", "ball:4", "lieball:3", "siegel:3", "d5"}) {
    DomainKind kind;
    int n = 0;
    REQUIRE(parse_catalog_spec(spec, kind, n));
    NormalJAlgebra a = catalog_make(kind, n);
    std::string first = print_algebra(a);
    NormalJAlgebra b = reparse(a);
    CHECK(print_algebra(b) == first);
    CHECK(b.kind == a.kind);
    CHECK(b.nilradical_indices == a.nilradical_indices);
    CHECK(b.abelian_indices == a.abelian_indices);
    CHECK(check_axioms(b).all_pass());
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error_at = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_algebra(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error_at("nonsense\n", 1);
  expect_error_at("algebra a\ndim x\n", 2);
  expect_error_at("algebra a\ndim 2\nbasis e1\n", 3);
  expect_error_at("algebra a\ndim 2\nbasis e1 e2\nbracket 1 1 = 1*2\n", 4);
  expect_error_at("algebra a\ndim 2\nbasis e1 e2\nbogus\n", 4);
  expect_error_at("algebra a\ndim 2\nbasis e1 e2\nlambda = 1/0*1\n", 4);
  expect_error_at("algebra a\ndim 2\nbasis e1 e2\nlambda = 1*1\nnilradical = e3\n", 5);
  // Missing end: reported at the last line seen.
  expect_error_at("algebra a\ndim 2\nbasis e1 e2\nlambda = 1*1\nnilradical = e2\n", 5);
}

TEST_CASE("subspace files round trip against an algebra") {
  NormalJAlgebra d5 = d5_algebra();
  Subspace n_gamma = Subspace::span_of({d5_x1(d5), d5_x2(d5), d5_x3(d5)}, d5.dim());
  std::string text = print_subspace(n_gamma, d5, "nGamma");
  std::istringstream in(text);
  std::string name;
  Subspace again = parse_subspace(in, d5, &name);
  CHECK(name == "nGamma");
  CHECK(again == n_gamma);
  CHECK(print_subspace(again, d5, name) == text);
}

TEST_CASE("subspace parse failures") {
  NormalJAlgebra b2 = unit_ball_algebra(2);
  auto expect_failure = [&b2](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_subspace(in, b2), ParseError);
  };
  expect_failure("subspace s in lieball:3\nend\n");        // wrong algebra
  expect_failure("subspace s in ball:2\nvector = 1*nope\nend\n");
  expect_failure("subspace s in ball:2\nvector = 0\nend\n");  // zero vector
  expect_failure("subspace s in ball:2\nvector = 1*xi1\n");   // missing end
  expect_failure("subspace s in ball:2\nvector = 1*xi1 + \nend\n");
}

TEST_CASE("point files round trip") {
  NamedPoint p;
  p.name = "Z0";
  p.coords = pinch_point(Rational(1, 2), Rational(3));
  std::string text = print_point(p);
  std::istringstream in(text);
  std::vector<NamedPoint> points = parse_points(in);
  REQUIRE(points.size() == 1);
  CHECK(points[0].name == "Z0");
  CHECK(is_zero<GaussianRational>(GVector(points[0].coords - p.coords)));
  CHECK(print_point(points[0]) == text);
}

TEST_CASE("point parse failures") {
  auto expect_failure = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_points(in), ParseError);
  };
  expect_failure("point p dim 2\nz 1 = 0 0\nend\n");            // missing z 2
  expect_failure("point p dim 1\nz 1 = 0 0\nz 1 = 1 0\nend\n");  // duplicate
  expect_failure("point p dim 1\nz 2 = 0 0\nend\n");             // out of range
  expect_failure("point p dim 1\nz 1 = 0\nend\n");               // missing imaginary part
}

TEST_CASE("multiple point blocks in one file") {
  std::string text = "point a dim 1\nz 1 = 1 0\nend\npoint b dim 2\nz 1 = 0 1\nz 2 = 1/2 -1/3\nend\n";
  std::istringstream in(text);
  std::vector<NamedPoint> points = parse_points(in);
  REQUIRE(points.size() == 2);
  CHECK(points[1].coords(1) == GaussianRational(Rational(1, 2), Rational(-1, 3)));
}

TEST_CASE("custom algebra files get the custom kind") {
  std::string text =
      "algebra heis3\n"
      "dim 3\n"
      "basis x y z\n"
      "bracket 1 2 = 1*3\n"
      "J 1 = 1*2\n"
      "J 2 = -1*1\n"
      "J 3 = 1*3\n"
      "lambda = 1*3\n"
      "nilradical = x y z\n"
      "end\n";
  std::istringstream in(text);
  NormalJAlgebra a = parse_algebra(in);
  CHECK(a.kind == DomainKind::custom);
  CHECK(a.name == "heis3");
  CHECK(a.alg.jacobi_defect().zero);
  CHECK(!check_axioms(a).all_pass());  // J^2 != -I on the third coordinate
}
