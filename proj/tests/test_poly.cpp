#include <doctest.h>

#include "jalg/poly.hpp"
#include "jalg/rng.hpp"

using namespace jalg;

namespace {

Poly random_poly(Rng& rng, int nvars) {
  Poly p(nvars);
  int terms = static_cast<int>(rng.int_in(1, 4));
  for (int t = 0; t < terms; ++t) {
    Poly::Monomial mono(static_cast<size_t>(nvars));
    for (int v = 0; v < nvars; ++v) mono[static_cast<size_t>(v)] = static_cast<unsigned>(rng.int_in(0, 2));
    p.add_term(mono, rng.gaussian(3, 2));
  }
  return p;
}

PolyMap random_map(Rng& rng, int dim) {
  std::vector<Poly> comps;
  for (int k = 0; k < dim; ++k) comps.push_back(random_poly(rng, dim));
  return PolyMap(dim, std::move(comps));
}

GVector random_point(Rng& rng, int dim) {
  GVector p(dim);
  for (int k = 0; k < dim; ++k) p(k) = rng.gaussian(3, 2);
  return p;
}

}  // namespace

TEST_CASE("composition with the identity map is the identity") {
  Rng rng(21);
  PolyMap f = random_map(rng, 3);
  CHECK(poly_compose(f, PolyMap::identity(3)) == f);
  CHECK(poly_compose(PolyMap::identity(3), f) == f);
}

TEST_CASE("evaluation commutes with composition at random points") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    PolyMap outer = random_map(rng, 2);
    PolyMap inner = random_map(rng, 2);
    PolyMap composed = poly_compose(outer, inner);
    GVector p = random_point(rng, 2);
    CHECK(is_zero<GaussianRational>(GVector(composed.eval(p) - outer.eval(inner.eval(p)))));
  }
}

TEST_CASE("composition is associative") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMap f = random_map(rng, 2), g = random_map(rng, 2), h = random_map(rng, 2);
    CHECK(poly_compose(poly_compose(f, g), h) == poly_compose(f, poly_compose(g, h)));
  }
}

TEST_CASE("composition dimension mismatch is rejected") {
  PolyMap f(2, {Poly::variable(2, 0)});                        // 2 -> 1
  PolyMap g(1, {Poly::variable(1, 0), Poly::variable(1, 0)});  // 1 -> 2
  CHECK_NOTHROW(poly_compose(f, g));
  CHECK_THROWS_AS(poly_compose(f, f), std::invalid_argument);  // source 2 vs target 1
}

TEST_CASE("zero coefficients are never stored") {
  Poly p(2);
  p.add_term({1, 0}, GaussianRational(1));
  p.add_term({1, 0}, GaussianRational(-1));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  Poly q = Poly::variable(2, 0) - Poly::variable(2, 0);
  CHECK(q.is_zero());
}

TEST_CASE("polynomial printing is canonical") {
  Poly p = Poly::variable(2, 0) * Poly::variable(2, 0) + GaussianRational(Rational(-1, 2)) * Poly::variable(2, 1);
  CHECK(p.str({"x", "y"}) == "(-1/2)*y + (1)*x^2");
  CHECK(Poly(2).str({"x", "y"}) == "0");
}

TEST_CASE("univariate division with remainder") {
  Poly w = Poly::variable(1, 0);
  Poly one = Poly::constant(1, GaussianRational(1));
  Poly f = w * w * w - GaussianRational(2) * w + one;  // w^3 - 2w + 1
  Poly g = w - one;
  auto [q, r] = univariate_divmod(f, g);
  CHECK(q * g + r == f);
  CHECK(r.is_zero());  // w = 1 is a root
  CHECK_THROWS_AS(univariate_divmod(f, Poly(1)), std::domain_error);
}

TEST_CASE("extended euclid produces the degree-minimal certificate") {
  Poly w = Poly::variable(1, 0);
  Poly one = Poly::constant(1, GaussianRational(1));
  Poly f = -(w * w + one);
  Poly g = GaussianRational(-2) * w;
  auto [gcd, s, t] = univariate_extended_gcd(f, g);
  CHECK(gcd == one);
  CHECK(s == Poly::constant(1, GaussianRational(-1)));
  CHECK(t == GaussianRational(Rational(1, 2)) * w);
  CHECK(s * f + t * g == one);
}

TEST_CASE("extended euclid finds nontrivial common factors") {
  Poly w = Poly::variable(1, 0);
  auto [gcd, s, t] = univariate_extended_gcd(w * w, w);
  CHECK(gcd == w);  // monic
  CHECK(s * (w * w) + t * w == gcd);
}
