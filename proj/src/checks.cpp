#include "jalg/checks.hpp"

#include <ostream>
#include <sstream>

#include "jalg/io.hpp"
#include "jalg/siegel.hpp"
#include "jalg/totally_real.hpp"

namespace jalg {

namespace {

// Collects requirements; keeps the first failure as witness.
struct Checker {
  bool pass = true;
  std::string witness;
  std::vector<std::string> detail;

  void require(bool ok, const std::string& msg) {
    if (pass && !ok) {
      pass = false;
      witness = msg;
    }
  }
};

CheckResult finish(const Checker& c) {
  CheckResult r;
  r.pass = c.pass;
  r.witness = c.witness;
  r.detail = c.detail;
  return r;
}

QVector unit_of(const NormalJAlgebra& a, const std::string& label) {
  int idx = a.alg.label_index(label);
  if (idx < 0) throw std::logic_error("missing label " + label);
  return a.alg.basis_vector(idx);
}

QVector bracket_of(const NormalJAlgebra& a, const std::string& x, const std::string& y) {
  return a.alg.bracket(unit_of(a, x), unit_of(a, y));
}

bool vectors_equal(const QVector& a, const QVector& b) { return is_zero<Rational>(QVector(a - b)); }

Subspace ball3_heisenberg(const NormalJAlgebra& ball3) {
  // The 3-dimensional Heisenberg subalgebra spanned by xi1, xi1'+xi2', zeta;
  // its field realization on the Siegel ball is the (x1, x2, x3) triple with
  // [x1, x2] = 4 x3.
  std::vector<QVector> rows = {unit_of(ball3, "xi1"),
                               QVector(unit_of(ball3, "xi1p") + unit_of(ball3, "xi2p")),
                               unit_of(ball3, "zeta")};
  return Subspace::span_of(rows, ball3.dim());
}

// Random vector supported on the nilradical coordinates.
QVector random_nilradical_vector(const NormalJAlgebra& a, Rng& rng) {
  QVector v = QVector::Constant(a.dim(), Rational(0));
  for (int idx : a.nilradical_indices) v(idx) = rng.rational(2, 2);
  if (is_zero<Rational>(v)) v(a.nilradical_indices.front()) = Rational(1);
  return v;
}

// Seed subalgebras for the completion sweep: the algebra generated by one to
// three random nilradical vectors, kept when totally real.
Subspace random_totally_real_subalgebra(const NormalJAlgebra& a, Rng& rng) {
  for (;;) {
    int count = static_cast<int>(rng.int_in(1, 3));
    std::vector<QVector> gens;
    for (int k = 0; k < count; ++k) gens.push_back(random_nilradical_vector(a, rng));
    Subspace s = lie_generate(a.alg, Subspace::span_of(gens, a.dim()));
    if (s.dim() == 0 || s.dim() > a.complex_dim()) continue;
    if (!is_totally_real(a, s)) continue;
    return s;
  }
}

bool subspace_abelian(const NormalJAlgebra& a, const Subspace& s) {
  for (Eigen::Index x = 0; x < s.dim(); ++x)
    for (Eigen::Index y = x + 1; y < s.dim(); ++y)
      if (!is_zero<Rational>(a.alg.bracket(s.basis_vector(x), s.basis_vector(y)))) return false;
  return true;
}

AffineField expected_field(std::vector<std::tuple<int, int, long>> linear, std::vector<std::pair<int, long>> constant) {
  AffineField f = AffineField::zero(kSymDim);
  for (auto [row, col, coeff] : linear) f.linear(row, col) = GaussianRational(Rational(coeff));
  for (auto [row, coeff] : constant) f.constant(row) = GaussianRational(Rational(coeff));
  return f;
}

// ---------------------------------------------------------------------------
// Section 3.1

CheckResult check_heisenberg_bracket(Rng&) {
  Checker c;
  std::vector<AffineField> x = heisenberg_ball3_fields();
  AffineField four_x3 = GaussianRational(4) * x[2];
  c.require(field_bracket(x[0], x[1]) == four_x3, "[x1, x2] != 4 x3");
  c.require(field_bracket(x[0], x[2]) == AffineField::zero(3), "[x1, x3] != 0");
  c.require(field_bracket(x[1], x[2]) == AffineField::zero(3), "[x2, x3] != 0");
  return finish(c);
}

CheckResult check_heisenberg_orbits(Rng& rng) {
  Checker c;
  std::vector<AffineField> x = heisenberg_ball3_fields();
  for (int k = 0; k < 100 && c.pass; ++k) {
    GVector p = random_ball3_point(rng);
    c.require(p(0).imag() > p(1).norm() + p(2).norm(), "sample point outside the domain");
    c.require(orbit_totally_real_at(x, p), "fields are C-dependent at sample " + std::to_string(k));
  }
  return finish(c);
}

CheckResult check_heisenberg_subalgebra(Rng&) {
  Checker c;
  NormalJAlgebra ball3 = unit_ball_algebra(3);
  Subspace s = ball3_heisenberg(ball3);
  c.require(s.dim() == 3, "span is not 3-dimensional");
  c.require(is_subalgebra(ball3.alg, s), "span is not a subalgebra");
  c.require(!subspace_abelian(ball3, s), "span should be nonabelian");
  c.require(is_totally_real(ball3, s), "span is not totally real");

  // The abstract brackets mirror the field brackets: with x3 = zeta/4 the
  // pair (x1, x2) = (xi1, xi1'+xi2') satisfies [x1, x2] = 4 x3.
  QVector x1 = unit_of(ball3, "xi1");
  QVector x2 = unit_of(ball3, "xi1p") + unit_of(ball3, "xi2p");
  c.require(vectors_equal(ball3.alg.bracket(x1, x2), unit_of(ball3, "zeta")), "[x1, x2] != zeta");

  CompletionResult completed = complete_ball(ball3, s);
  c.require(completed.status == CompletionStatus::completed, "completion failed: " + completed.message);
  c.require(completed.result == s, "maximal input was not returned unchanged");

  SteinVerdict verdict = stein_decide(ball3, s);
  c.require(verdict.verdict == SteinStatus::stein, "verdict is not stein");
  return finish(c);
}

CheckResult check_discrete_group_law(Rng& rng) {
  Checker c;
  c.require(discrete_ball2_element(0, 0, 0) == AffineMap::identity(2), "zero parameters are not the identity");
  for (int k = 0; k < 50 && c.pass; ++k) {
    long k1 = rng.int_in(-6, 6), m1 = rng.int_in(-6, 6), n1 = rng.int_in(-6, 6);
    long k2 = rng.int_in(-6, 6), m2 = rng.int_in(-6, 6), n2 = rng.int_in(-6, 6);
    AffineMap composed = discrete_ball2_element(k1, m1, n1).after(discrete_ball2_element(k2, m2, n2));
    auto params = discrete_ball2_parameters(composed);
    c.require(params.has_value(), "composition left the family at sample " + std::to_string(k));
    if (params) {
      c.require((*params)[1] == m1 + m2 && (*params)[2] == n1 + n2, "translation parameters do not add");
      c.require(determinant<GaussianRational>(composed.linear) == GaussianRational(1), "linear determinant != 1");
    }
  }
  return finish(c);
}

// ---------------------------------------------------------------------------
// Section 3.2

CheckResult check_ball_bracket_table(Rng&) {
  Checker c;
  for (int n = 2; n <= 6 && c.pass; ++n) {
    NormalJAlgebra a = unit_ball_algebra(n);
    std::string at = " (ball:" + std::to_string(n) + ")";
    for (int k = 1; k <= n - 1; ++k) {
      std::string xi = "xi" + std::to_string(k), xip = xi + "p";
      c.require(vectors_equal(bracket_of(a, xi, xip), unit_of(a, "zeta")), "[" + xi + "," + xip + "] != zeta" + at);
      c.require(vectors_equal(bracket_of(a, "alpha", xi), QVector(-unit_of(a, xi))),
                "[alpha," + xi + "] != -" + xi + at);
      c.require(vectors_equal(bracket_of(a, "alpha", xip), QVector(-unit_of(a, xip))),
                "[alpha," + xip + "] != -" + xip + at);
    }
    c.require(vectors_equal(bracket_of(a, "alpha", "zeta"), QVector(unit_of(a, "zeta") * Rational(-2))),
              "[alpha,zeta] != -2 zeta" + at);

    // Everything not in the table is zero.
    int nonzero_pairs = 0;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = i + 1; j < a.dim(); ++j)
        if (!is_zero<Rational>(a.alg.basis_bracket(i, j))) ++nonzero_pairs;
    c.require(nonzero_pairs == 3 * (n - 1) + 1, "unexpected nonzero brackets" + at);

    c.require(vectors_equal(a.J * unit_of(a, "zeta"), unit_of(a, "alpha")), "J(zeta) != alpha" + at);
    for (int k = 1; k <= n - 1; ++k) {
      std::string xi = "xi" + std::to_string(k);
      c.require(vectors_equal(a.J * unit_of(a, xi), unit_of(a, xi + "p")), "J(" + xi + ") != " + xi + "p" + at);
    }
  }
  return finish(c);
}

CheckResult check_ball_axioms(Rng&) {
  Checker c;
  for (int n = 2; n <= 8 && c.pass; ++n) {
    AxiomReport report = check_axioms(unit_ball_algebra(n));
    c.require(report.all_pass(), "ball:" + std::to_string(n) + " fails " + report.first_failure());
  }
  return finish(c);
}

CheckResult check_heisenberg_identity(Rng& rng) {
  Checker c;
  for (int n = 2; n <= 6 && c.pass; ++n) {
    NormalJAlgebra a = unit_ball_algebra(n);
    int zeta = a.alg.label_index("zeta");
    QVector zeta_hat = a.alg.basis_vector(zeta) * (Rational(1) / a.lambda(zeta));
    std::string at = " (ball:" + std::to_string(n) + ")";
    for (size_t x = 0; x < a.nilradical_indices.size() && c.pass; ++x) {
      for (size_t y = x + 1; y < a.nilradical_indices.size(); ++y) {
        int i = a.nilradical_indices[x], j = a.nilradical_indices[y];
        QVector lhs = a.alg.basis_bracket(i, j);
        QVector rhs = zeta_hat * a.lambda_of(lhs);
        if (!vectors_equal(lhs, rhs)) {
          c.require(false, "pair (" + a.alg.label(i) + ", " + a.alg.label(j) + ")" + at);
          break;
        }
      }
    }
    for (int k = 0; k < 20 && c.pass; ++k) {
      QVector x = random_nilradical_vector(a, rng);
      QVector y = random_nilradical_vector(a, rng);
      QVector lhs = a.alg.bracket(x, y);
      c.require(vectors_equal(lhs, QVector(zeta_hat * a.lambda_of(lhs))), "random pair" + at);
    }
  }
  return finish(c);
}

CheckResult check_mutation_guard(Rng&) {
  Checker c;
  NormalJAlgebra ball3 = unit_ball_algebra(3);

  {
    // Flip [alpha, zeta] to +2 zeta: the Jacobi identity must break.
    LieAlgebra::Constants constants = ball3.alg.constants();
    int alpha = ball3.alg.label_index("alpha"), zeta = ball3.alg.label_index("zeta");
    constants[{alpha, zeta}] = QVector(-constants[{alpha, zeta}]);
    LieAlgebra corrupted = LieAlgebra::unchecked(ball3.alg.labels(), constants);
    c.require(!corrupted.jacobi_defect().zero, "corrupted [alpha,zeta] passed the Jacobi check");
    bool threw = false;
    try {
      LieAlgebra::checked(ball3.alg.labels(), constants);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.require(threw, "checked construction accepted a corrupted table");
  }

  {
    // Flip the sign of lambda: positivity must fail, witnessed already by
    // B(xi1, xi1) = lambda([J xi1, xi1]).
    NormalJAlgebra flipped = ball3;
    flipped.lambda = QVector(-flipped.lambda);
    AxiomReport report = check_axioms(flipped);
    c.require(!report.all_pass(), "sign-flipped lambda passed the axioms");
    QVector xi1 = unit_of(flipped, "xi1");
    c.require(flipped.lambda_of(flipped.alg.bracket(flipped.J * xi1, xi1)).sign() < 0,
              "B(xi1, xi1) did not change sign");
  }

  {
    // Flip one sign in the cross-bracket table of d5.
    NormalJAlgebra d5 = d5_algebra();
    LieAlgebra::Constants constants = d5.alg.constants();
    int xi21 = d5.alg.label_index("xi21"), xi31p = d5.alg.label_index("xi31p");
    auto key = std::make_pair(std::min(xi21, xi31p), std::max(xi21, xi31p));
    constants[key] = QVector(-constants[key]);
    LieAlgebra corrupted = LieAlgebra::unchecked(d5.alg.labels(), constants);
    c.require(!corrupted.jacobi_defect().zero, "flipped [xi21, xi31p] passed the Jacobi check");
  }

  {
    // Flip lambda on zeta3 only: the d5 metric loses positivity.
    NormalJAlgebra d5 = d5_algebra();
    d5.lambda(d5.alg.label_index("zeta3")) = -d5.lambda(d5.alg.label_index("zeta3"));
    c.require(!check_axioms(d5).all_pass(), "sign-flipped lambda(zeta3) passed the axioms");
  }

  return finish(c);
}

CheckResult completion_postconditions(Checker& c, const NormalJAlgebra& a, const Subspace& seed,
                                      const CompletionResult& r, const std::string& at,
                                      bool preserve_abelian = true) {
  c.require(r.status == CompletionStatus::completed, "completion failed" + at + ": " + r.message);
  if (r.status != CompletionStatus::completed) return finish(c);
  c.require(r.result.dim() == a.complex_dim(), "completed dimension wrong" + at);
  c.require(r.result.contains(seed), "result does not contain the input" + at);
  c.require(is_subalgebra(a.alg, r.result), "result is not a subalgebra" + at);
  c.require(is_totally_real(a, r.result), "result is not totally real" + at);
  if (preserve_abelian && subspace_abelian(a, seed))
    c.require(subspace_abelian(a, r.result), "abelian input, nonabelian output" + at);
  return finish(c);
}

CheckResult check_completion_sweep(Rng& rng) {
  Checker c;
  for (int n = 2; n <= 6 && c.pass; ++n) {
    NormalJAlgebra a = unit_ball_algebra(n);
    for (int seed_no = 0; seed_no < 200 && c.pass; ++seed_no) {
      Subspace s = random_totally_real_subalgebra(a, rng);
      std::string at = " (ball:" + std::to_string(n) + ", seed " + std::to_string(seed_no) + ")";
      CompletionResult r = complete_ball(a, s);
      completion_postconditions(c, a, s, r, at);
      if (c.pass) {
        CompletionResult again = complete_ball(a, r.result);
        c.require(again.status == CompletionStatus::completed && again.result == r.result,
                  "completion is not idempotent" + at);
      }
    }
  }
  return finish(c);
}

CheckResult check_completion_examples(Rng&) {
  Checker c;
  {
    NormalJAlgebra a = unit_ball_algebra(2);
    CompletionResult r = complete_ball(a, Subspace::zero(a.dim()));
    completion_postconditions(c, a, Subspace::zero(a.dim()), r, " (ball:2 from zero)");
    Subspace expected = Subspace::span_of({unit_of(a, "xi1"), unit_of(a, "zeta")}, a.dim());
    c.require(r.result == expected, "ball:2 completion of {0} is not span{xi1, zeta}");
  }
  {
    NormalJAlgebra a = unit_ball_algebra(3);
    Subspace seed = Subspace::span_of({unit_of(a, "zeta")}, a.dim());
    CompletionResult r = complete_ball(a, seed);
    completion_postconditions(c, a, seed, r, " (ball:3 from zeta)");
    Subspace expected =
        Subspace::span_of({unit_of(a, "zeta"), unit_of(a, "xi1"), unit_of(a, "xi2")}, a.dim());
    c.require(r.result == expected, "ball:3 completion of {zeta} is not span{zeta, xi1, xi2}");
  }
  return finish(c);
}

// ---------------------------------------------------------------------------
// Section 4

CheckResult check_lieball_bracket_table(Rng&) {
  Checker c;
  for (int n = 3; n <= 6 && c.pass; ++n) {
    NormalJAlgebra a = lie_ball_algebra(n);
    std::string at = " (lieball:" + std::to_string(n) + ")";
    for (int k = 1; k <= n - 2; ++k) {
      std::string xi = "xi" + std::to_string(k), xip = xi + "p";
      c.require(vectors_equal(bracket_of(a, xi, xip), unit_of(a, "zeta")), "[" + xi + "," + xip + "] != zeta" + at);
      c.require(vectors_equal(bracket_of(a, "eta", xip), QVector(unit_of(a, xi) * Rational(2))),
                "[eta," + xip + "] != 2 " + xi + at);
      c.require(vectors_equal(bracket_of(a, "delta", xi), QVector(-unit_of(a, xi))),
                "[delta," + xi + "] != -" + xi + at);
      c.require(vectors_equal(bracket_of(a, "alpha", xip), QVector(-unit_of(a, xip))),
                "[alpha," + xip + "] != -" + xip + at);
      c.require(is_zero<Rational>(bracket_of(a, "delta", xip)), "[delta," + xip + "] != 0" + at);
      c.require(is_zero<Rational>(bracket_of(a, "alpha", xi)), "[alpha," + xi + "] != 0" + at);
    }
    c.require(vectors_equal(bracket_of(a, "delta", "zeta"), QVector(-unit_of(a, "zeta"))), "[delta,zeta]" + at);
    c.require(vectors_equal(bracket_of(a, "delta", "eta"), QVector(-unit_of(a, "eta"))), "[delta,eta]" + at);
    c.require(vectors_equal(bracket_of(a, "alpha", "zeta"), QVector(-unit_of(a, "zeta"))), "[alpha,zeta]" + at);
    c.require(vectors_equal(bracket_of(a, "alpha", "eta"), unit_of(a, "eta")), "[alpha,eta]" + at);

    int nonzero_pairs = 0;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = i + 1; j < a.dim(); ++j)
        if (!is_zero<Rational>(a.alg.basis_bracket(i, j))) ++nonzero_pairs;
    c.require(nonzero_pairs == 4 * (n - 2) + 4, "unexpected nonzero brackets" + at);

    for (int k = 1; k <= n - 2; ++k) {
      std::string xi = "xi" + std::to_string(k);
      c.require(vectors_equal(a.J * unit_of(a, xi), unit_of(a, xi + "p")), "J(" + xi + ")" + at);
    }
    c.require(vectors_equal(a.J * unit_of(a, "zeta"), QVector(unit_of(a, "alpha") + unit_of(a, "delta"))),
              "J(zeta) != alpha + delta" + at);
    c.require(vectors_equal(a.J * unit_of(a, "eta"), QVector(unit_of(a, "delta") - unit_of(a, "alpha"))),
              "J(eta) != delta - alpha" + at);
  }
  return finish(c);
}

CheckResult check_lieball_axioms(Rng&) {
  Checker c;
  for (int n = 3; n <= 8 && c.pass; ++n) {
    AxiomReport report = check_axioms(lie_ball_algebra(n));
    c.require(report.all_pass(), "lieball:" + std::to_string(n) + " fails " + report.first_failure());
  }
  return finish(c);
}

CheckResult check_lieball_fibration(Rng&) {
  Checker c;
  for (int n = 3; n <= 6 && c.pass; ++n) {
    NormalJAlgebra lie = lie_ball_algebra(n);
    NormalJAlgebra ball = unit_ball_algebra(n - 1);
    std::string at = " (lieball:" + std::to_string(n) + ")";

    // Identification of the ball ideal: alpha -> alpha + delta, xi_k -> xi_k,
    // xi_k' -> xi_k', zeta -> zeta.
    auto embed = [&](const std::string& label) -> QVector {
      if (label == "alpha") return unit_of(lie, "alpha") + unit_of(lie, "delta");
      return unit_of(lie, label);
    };
    std::vector<QVector> image_rows;
    QMatrix map(lie.dim(), ball.dim());
    for (int k = 0; k < ball.dim(); ++k) {
      QVector v = embed(ball.alg.label(k));
      map.col(k) = v;
      image_rows.push_back(v);
    }
    Subspace ideal = Subspace::span_of(image_rows, lie.dim());
    c.require(ideal.dim() == ball.dim(), "ideal has wrong dimension" + at);

    for (int i = 0; i < lie.dim() && c.pass; ++i)
      for (Eigen::Index r = 0; r < ideal.dim(); ++r)
        if (!ideal.contains(lie.alg.bracket(lie.alg.basis_vector(i), ideal.basis_vector(r)))) {
          c.require(false, "not an ideal" + at);
          break;
        }
    c.require(ideal.image_under(lie.J) == ideal, "ideal is not J-invariant" + at);

    // The embedding is a morphism of the bracket and of J.
    for (int i = 0; i < ball.dim() && c.pass; ++i) {
      c.require(vectors_equal(QVector(lie.J * map.col(i)), QVector(map * (ball.J * ball.alg.basis_vector(i)))),
                "J does not match on the ideal" + at);
      for (int j = i + 1; j < ball.dim(); ++j)
        if (!vectors_equal(lie.alg.bracket(map.col(i), map.col(j)), QVector(map * ball.alg.basis_bracket(i, j)))) {
          c.require(false, "bracket does not match on the ideal" + at);
          break;
        }
    }

    // The complementary pair (alpha2, eta) is a one-dimensional-ball block:
    // [alpha2, eta] = -2 eta and J(eta) = alpha2.
    QVector alpha2 = unit_of(lie, "delta") - unit_of(lie, "alpha");
    c.require(vectors_equal(lie.alg.bracket(alpha2, unit_of(lie, "eta")), QVector(unit_of(lie, "eta") * Rational(-2))),
              "[alpha2, eta] != -2 eta" + at);
    c.require(vectors_equal(QVector(lie.J * unit_of(lie, "eta")), alpha2), "J(eta) != alpha2" + at);
  }
  return finish(c);
}

CheckResult check_xi1prime_obstruction(Rng& rng) {
  Checker c;
  NormalJAlgebra a = lie_ball_algebra(3);
  Subspace xi1p = Subspace::span_of({unit_of(a, "xi1p")}, a.dim());
  c.require(is_totally_real(a, xi1p), "R xi1' is not totally real");
  CompletionResult r = complete_lie_ball(a, xi1p);
  c.require(r.status == CompletionStatus::not_applicable, "R xi1' was not reported not-applicable");

  for (int k = 0; k < 50 && c.pass; ++k) {
    Rational d = rng.nonzero_rational(4, 3);
    QVector x = unit_of(a, "xi1") * rng.rational(4, 3) + unit_of(a, "xi1p") * rng.rational(4, 3) +
                unit_of(a, "zeta") * rng.rational(4, 3) + unit_of(a, "eta") * d;
    Subspace generated = lie_generate(a.alg, Subspace::span_of({unit_of(a, "xi1p"), x}, a.dim()));
    std::string at = " (sample " + std::to_string(k) + ")";
    c.require(generated.contains(unit_of(a, "zeta")), "generated algebra misses zeta" + at);
    c.require(generated.contains(unit_of(a, "xi1")), "generated algebra misses xi1" + at);
    c.require(!is_totally_real(a, generated), "generated algebra is still totally real" + at);
  }
  return finish(c);
}

CheckResult check_lieball_completion_traces(Rng&) {
  Checker c;
  NormalJAlgebra a = lie_ball_algebra(3);

  {
    Subspace seed = Subspace::span_of({unit_of(a, "eta")}, a.dim());
    CompletionResult r = complete_lie_ball(a, seed);
    completion_postconditions(c, a, seed, r, " (span{eta})", /*preserve_abelian=*/false);
    Subspace expected =
        Subspace::span_of({unit_of(a, "eta"), unit_of(a, "zeta"), unit_of(a, "xi1")}, a.dim());
    c.require(r.result == expected, "completion of span{eta} is not span{eta, zeta, xi1}");
    // Trace: the eta representative, then zeta, then xi1.
    std::vector<std::string> rules;
    for (const CompletionStep& step : r.trace) rules.push_back(step.rule);
    c.require(rules == std::vector<std::string>{"eta-representative", "adjoin-center", "adjoin-xi1"},
              "unexpected trace for span{eta}");
    CompletionResult again = complete_lie_ball(a, r.result);
    c.require(again.status == CompletionStatus::completed && again.result == r.result,
              "lie-ball completion is not idempotent");
  }

  {
    QVector x0 = unit_of(a, "xi1p") + unit_of(a, "eta");
    Subspace seed = Subspace::span_of({x0}, a.dim());
    CompletionResult r = complete_lie_ball(a, seed);
    completion_postconditions(c, a, seed, r, " (span{xi1p + eta})", /*preserve_abelian=*/false);
    Subspace expected = Subspace::span_of({x0, unit_of(a, "zeta"), unit_of(a, "xi1")}, a.dim());
    c.require(r.result == expected, "completion of span{xi1p + eta} has the wrong result");
    c.require(vectors_equal(a.alg.bracket(x0, unit_of(a, "xi1")), QVector(-unit_of(a, "zeta"))),
              "[xi1p + eta, xi1] != -zeta");
  }
  return finish(c);
}

CheckResult check_stein_decisions(Rng&) {
  Checker c;
  {
    NormalJAlgebra ball3 = unit_ball_algebra(3);
    SteinVerdict v = stein_decide(ball3, ball3_heisenberg(ball3));
    c.require(v.verdict == SteinStatus::stein, "Heisenberg span in ball:3 is not stein");
  }
  NormalJAlgebra lie3 = lie_ball_algebra(3);
  {
    SteinVerdict v = stein_decide(lie3, Subspace::span_of({unit_of(lie3, "xi1p")}, lie3.dim()));
    c.require(v.verdict == SteinStatus::stein, "R xi1' in lieball:3 is not stein");
    c.require(v.reasons == std::vector<std::string>{"thm-main"}, "unexpected reasons for R xi1'");
  }
  {
    Subspace s = Subspace::span_of({unit_of(lie3, "xi1"), unit_of(lie3, "xi1p")}, lie3.dim());
    SteinVerdict v = stein_decide(lie3, s);
    c.require(v.verdict == SteinStatus::not_stein, "span{xi1, xi1'} in lieball:3 is not not-stein");
  }
  return finish(c);
}

// ---------------------------------------------------------------------------
// Section 5.1

CheckResult check_siegel3_axioms(Rng&) {
  Checker c;
  AxiomReport report = check_axioms(siegel3_algebra());
  c.require(report.all_pass(), "siegel:3 fails " + report.first_failure());
  return finish(c);
}

CheckResult check_d5_axioms(Rng&) {
  Checker c;
  AxiomReport report = check_axioms(d5_algebra());
  c.require(report.all_pass(), "d5 fails " + report.first_failure());
  return finish(c);
}

CheckResult check_d5_bracket_table(Rng&) {
  Checker c;
  NormalJAlgebra a = d5_algebra();

  // The seven displayed cross-bracket relations.
  c.require(vectors_equal(bracket_of(a, "alpha2", "xi32"), unit_of(a, "xi32")), "[alpha2, xi32] != xi32");
  c.require(vectors_equal(bracket_of(a, "alpha2", "xi32p"), QVector(-unit_of(a, "xi32p"))),
            "[alpha2, xi32p] != -xi32p");
  c.require(vectors_equal(bracket_of(a, "xi21", "xi31p"), QVector(-unit_of(a, "xi32"))), "[xi21, xi31p] != -xi32");
  c.require(vectors_equal(bracket_of(a, "xi21", "xi32p"), QVector(-unit_of(a, "xi31"))), "[xi21, xi32p] != -xi31");
  c.require(vectors_equal(bracket_of(a, "xi21p", "xi31"), unit_of(a, "xi32")), "[xi21p, xi31] != xi32");
  c.require(vectors_equal(bracket_of(a, "xi21p", "xi32p"), QVector(-unit_of(a, "xi31p"))),
            "[xi21p, xi32p] != -xi31p");
  c.require(vectors_equal(bracket_of(a, "zeta2", "xi32p"), QVector(unit_of(a, "xi32") * Rational(2))),
            "[zeta2, xi32p] != 2 xi32");

  // All other cross brackets between the two blocks vanish.
  std::vector<std::string> block2 = {"alpha2", "xi21", "xi21p", "zeta2"};
  std::vector<std::string> block3 = {"alpha3", "xi31", "xi32", "xi31p", "xi32p", "zeta3"};
  std::vector<std::pair<std::string, std::string>> table = {
      {"alpha2", "xi32"},  {"alpha2", "xi32p"}, {"xi21", "xi31p"}, {"xi21", "xi32p"},
      {"xi21p", "xi31"},   {"xi21p", "xi32p"},  {"zeta2", "xi32p"}};
  for (const std::string& x : block2) {
    for (const std::string& y : block3) {
      bool in_table = false;
      for (const auto& [tx, ty] : table) in_table = in_table || (tx == x && ty == y);
      if (in_table) continue;
      c.require(is_zero<Rational>(bracket_of(a, x, y)), "[" + x + ", " + y + "] should vanish");
    }
  }

  // Block-internal relations of the matrix model.
  c.require(vectors_equal(bracket_of(a, "xi31", "xi31p"), unit_of(a, "zeta3")), "[xi31, xi31p] != zeta3");
  c.require(vectors_equal(bracket_of(a, "xi32", "xi32p"), unit_of(a, "zeta3")), "[xi32, xi32p] != zeta3");
  c.require(vectors_equal(bracket_of(a, "xi21", "xi21p"), unit_of(a, "zeta2")), "[xi21, xi21p] != zeta2");

  // lambda is the B-block trace.
  for (int k = 0; k < a.dim(); ++k) {
    const std::string& label = a.alg.label(k);
    Rational expected = (label == "zeta3" || label == "zeta2") ? Rational(-2) : Rational(0);
    c.require(a.lambda(k) == expected, "lambda(" + label + ") wrong");
  }
  return finish(c);
}

CheckResult check_field_table(Rng&) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  std::vector<AffineField> fields = catalog_basis_fields(a);
  const int z11 = 0, z12 = 1, z13 = 2, z22 = 3, z23 = 4, z33 = 5;
  auto expect = [&](const std::string& label, const AffineField& f) {
    int idx = a.alg.label_index(label);
    c.require(fields[static_cast<size_t>(idx)] == f, "field of " + label + " does not match the table");
  };
  expect("zeta3", expected_field({}, {{z33, -2}}));
  expect("alpha3", expected_field({{z13, z13, 1}, {z23, z23, 1}, {z33, z33, 2}}, {}));
  expect("xi31", expected_field({}, {{z13, 1}}));
  expect("xi31p", expected_field({{z13, z11, 1}, {z23, z12, 1}, {z33, z13, 2}}, {}));
  expect("xi32", expected_field({}, {{z23, 1}}));
  expect("xi32p", expected_field({{z13, z12, 1}, {z23, z22, 1}, {z33, z23, 2}}, {}));
  expect("zeta2", expected_field({}, {{z22, -2}}));
  expect("alpha2", expected_field({{z12, z12, 1}, {z22, z22, 2}, {z23, z23, 1}}, {}));
  expect("xi21", expected_field({}, {{z12, 1}}));
  expect("xi21p", expected_field({{z12, z11, 1}, {z22, z12, 2}, {z23, z13, 1}}, {}));
  return finish(c);
}

CheckResult check_field_bracket_sign(Rng&) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  std::vector<AffineField> fields = catalog_basis_fields(a);
  for (int i = 0; i < a.dim() && c.pass; ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      AffineField lhs = field_bracket(fields[static_cast<size_t>(i)], fields[static_cast<size_t>(j)]);
      AffineField rhs = d5_field_for_vector(a, a.alg.basis_bracket(i, j));
      if (lhs != GaussianRational(kFieldVsMatrixBracketSign) * rhs) {
        c.require(false,
                  "field bracket of (" + a.alg.label(i) + ", " + a.alg.label(j) + ") is not the recorded sign");
        break;
      }
    }
  }
  return finish(c);
}

CheckResult check_exponential_flow(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  std::vector<AffineField> fields = catalog_basis_fields(a);
  const AffineField& xi31p = fields[static_cast<size_t>(a.alg.label_index("xi31p"))];
  const AffineField& xi31 = fields[static_cast<size_t>(a.alg.label_index("xi31"))];
  const int z11 = 0, z12 = 1, z13 = 2, z23 = 4, z33 = 5;

  // exp(t xi31') maps z13 -> z13 + t z11, z23 -> z23 + t z12,
  // z33 -> z33 + 2t z13 + t^2 z11.
  for (int k = 0; k < 5 && c.pass; ++k) {
    GaussianRational t(rng.rational(5, 3));
    AffineMap flow = exp_nilpotent_affine(xi31p, t);
    AffineMap expected = AffineMap::identity(kSymDim);
    expected.linear(z13, z11) = t;
    expected.linear(z23, z12) = t;
    expected.linear(z33, z13) = GaussianRational(2) * t;
    expected.linear(z33, z11) = t * t;
    c.require(flow == expected, "exp(t xi31') does not match the displayed action");
  }

  {
    AffineMap translation = exp_nilpotent_affine(xi31, GaussianRational(1));
    AffineMap expected = AffineMap::identity(kSymDim);
    expected.translation(z13) = GaussianRational(1);
    c.require(translation == expected, "exp(xi31) is not the unit translation of z13");
  }

  c.require(exp_nilpotent_affine(xi31p, GaussianRational(0)) == AffineMap::identity(kSymDim),
            "time-zero flow is not the identity");

  for (int k = 0; k < 10 && c.pass; ++k) {
    GaussianRational s(rng.rational(4, 3)), t(rng.rational(4, 3));
    AffineField f = d5_field_for_vector(a, d5_x1(a));
    c.require(exp_nilpotent_affine(f, s).after(exp_nilpotent_affine(f, t)) == exp_nilpotent_affine(f, s + t),
              "flow group law fails for x1");
  }

  // The one-parameter group law on every nilpotent basis field of the
  // twelve-dimensional catalog (the alpha fields are not nilpotent).
  {
    NormalJAlgebra s3 = siegel3_algebra();
    std::vector<AffineField> all_fields = catalog_basis_fields(s3);
    for (int idx : s3.nilradical_indices) {
      const AffineField& f = all_fields[static_cast<size_t>(idx)];
      GaussianRational s(rng.rational(4, 3)), t(rng.rational(4, 3));
      if (exp_nilpotent_affine(f, s).after(exp_nilpotent_affine(f, t)) != exp_nilpotent_affine(f, s + t)) {
        c.require(false, "flow group law fails for " + s3.alg.label(idx));
        break;
      }
    }
  }

  {
    bool threw = false;
    try {
      exp_nilpotent_affine(fields[static_cast<size_t>(a.alg.label_index("alpha3"))], GaussianRational(1));
    } catch (const std::domain_error&) {
      threw = true;
    }
    c.require(threw, "non-nilpotent linear part was accepted");
  }
  return finish(c);
}

CheckResult check_flow_vs_group(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  AffineField x1 = d5_field_for_vector(a, d5_x1(a));
  AffineField x2 = d5_field_for_vector(a, d5_x2(a));
  AffineField x3 = d5_field_for_vector(a, d5_x3(a));
  for (int k = 0; k < 10 && c.pass; ++k) {
    GaussianRational t = rng.gaussian(4, 3);
    GaussianRational zero(0);
    c.require(exp_nilpotent_affine(x1, t) == group_action_map({t, zero, zero}),
              "flow of x1 does not match the (a,0,0) action");
    c.require(exp_nilpotent_affine(x2, t) == group_action_map({zero, t, zero}),
              "flow of x2 does not match the (0,b,0) action");
    c.require(exp_nilpotent_affine(x3, t) == group_action_map({zero, zero, t}),
              "flow of x3 does not match the (0,0,c) action");
  }
  return finish(c);
}

// ---------------------------------------------------------------------------
// Section 5.2

CheckResult check_d5_generators(Rng&) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  QVector x1 = d5_x1(a), x2 = d5_x2(a), x3 = d5_x3(a);
  c.require(vectors_equal(a.alg.bracket(x1, x2), x3), "[x1, x2] != x3");
  c.require(is_zero<Rational>(a.alg.bracket(x1, x3)), "[x1, x3] != 0");
  c.require(is_zero<Rational>(a.alg.bracket(x2, x3)), "[x2, x3] != 0");

  Subspace generated = lie_generate(a.alg, Subspace::span_of({x1, x2}, a.dim()));
  Subspace n_gamma = Subspace::span_of({x1, x2, x3}, a.dim());
  c.require(generated == n_gamma, "x1, x2 do not generate span{x1, x2, x3}");
  c.require(n_gamma.dim() == 3, "n_gamma is not 3-dimensional");
  c.require(is_totally_real(a, n_gamma), "n_gamma is not totally real");

  // Heisenberg: the derived algebra is the center line and brackets with it
  // vanish.
  Subspace derived = derived_subalgebra(a.alg, n_gamma);
  c.require(derived.dim() == 1 && derived.contains(x3), "derived algebra is not R x3");
  c.require(is_zero<Rational>(a.alg.bracket(x3, x1)) && is_zero<Rational>(a.alg.bracket(x3, x2)),
            "x3 is not central in n_gamma");

  // n_gamma projects onto the nilradical of the second block.
  QMatrix projected = n_gamma.basis();
  for (Eigen::Index r = 0; r < projected.rows(); ++r)
    for (int k = 0; k < a.dim(); ++k) {
      const std::string& label = a.alg.label(k);
      bool second_block = label == "xi21" || label == "xi21p" || label == "zeta2";
      if (!second_block) projected(r, k) = Rational(0);
    }
  c.require(Subspace::span_of_rows(std::move(projected)).dim() == 3,
            "n_gamma does not project onto the second-block nilradical");
  return finish(c);
}

CheckResult check_ytau_centralizes(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  QVector x1 = d5_x1(a), x2 = d5_x2(a), x3 = d5_x3(a);
  Subspace n_gamma = Subspace::span_of({x1, x2, x3}, a.dim());
  Subspace central = centralizer(a.alg, n_gamma);
  for (int k = 0; k < 20 && c.pass; ++k) {
    QVector y = d5_y_tau(a, rng.rational(6, 4));
    c.require(is_zero<Rational>(a.alg.bracket(y, x1)) && is_zero<Rational>(a.alg.bracket(y, x2)) &&
                  is_zero<Rational>(a.alg.bracket(y, x3)),
              "y_tau does not commute with n_gamma at sample " + std::to_string(k));
    c.require(central.contains(y), "y_tau is not in the computed centralizer at sample " + std::to_string(k));
    Subspace extended = n_gamma.extend(y);
    c.require(is_subalgebra(a.alg, extended) && is_totally_real(a, extended),
              "n_gamma + R y_tau is not a totally real subalgebra at sample " + std::to_string(k));
  }
  return finish(c);
}

CheckResult check_d5_normalizer(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  LieAlgebra nil = a.alg.coordinate_restriction(a.nilradical_indices);
  QVector x1 = d5_x1(a), x2 = d5_x2(a), x3 = d5_x3(a);

  // Displayed normalizer: span{xi31' + xi21, -xi31 + xi21', xi32, zeta3, zeta2}.
  std::vector<QVector> displayed_rows = {QVector(unit_of(a, "xi31p") + unit_of(a, "xi21")),
                                         QVector(-unit_of(a, "xi31") + unit_of(a, "xi21p")),
                                         unit_of(a, "xi32"), unit_of(a, "zeta3"), unit_of(a, "zeta2")};
  Subspace displayed = Subspace::span_of(displayed_rows, a.dim());

  auto to_nil = [&](const QVector& v) {
    QVector out(static_cast<Eigen::Index>(a.nilradical_indices.size()));
    for (size_t k = 0; k < a.nilradical_indices.size(); ++k) out(static_cast<Eigen::Index>(k)) = v(a.nilradical_indices[k]);
    return out;
  };
  auto from_nil = [&](const QVector& v) {
    QVector out = QVector::Constant(a.dim(), Rational(0));
    for (size_t k = 0; k < a.nilradical_indices.size(); ++k) out(a.nilradical_indices[k]) = v(static_cast<Eigen::Index>(k));
    return out;
  };

  for (int k = 0; k < 20 && c.pass; ++k) {
    QVector y = d5_y_tau(a, rng.rational(6, 4));
    Subspace s_nil = Subspace::span_of({to_nil(x1), to_nil(x2), to_nil(x3), to_nil(y)},
                                       static_cast<Eigen::Index>(a.nilradical_indices.size()));
    c.require(s_nil.dim() == 4, "n_gamma + R y_tau has wrong dimension at sample " + std::to_string(k));
    Subspace norm_nil = normalizer(nil, s_nil);
    std::vector<QVector> lifted;
    for (Eigen::Index r = 0; r < norm_nil.dim(); ++r) lifted.push_back(from_nil(norm_nil.basis_vector(r)));
    Subspace norm = Subspace::span_of(lifted, a.dim());
    c.require(norm == displayed, "normalizer does not match the displayed span at sample " + std::to_string(k));
    c.require(!is_totally_real(a, norm), "normalizer is totally real at sample " + std::to_string(k));
  }
  return finish(c);
}

CheckResult check_extension_classification(Rng&) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  Subspace n_gamma = Subspace::span_of({d5_x1(a), d5_x2(a), d5_x3(a)}, a.dim());
  int xi32 = a.alg.label_index("xi32"), zeta3 = a.alg.label_index("zeta3");

  for (int idx : a.nilradical_indices) {
    QVector v = a.alg.basis_vector(idx);
    Subspace extended = n_gamma.extend(v);
    bool survives = extended.dim() == 4 && is_subalgebra(a.alg, extended) && is_totally_real(a, extended);

    // Reduction of v modulo n_gamma must be of the y_tau shape (nonzero xi32
    // part, support in {xi32, zeta3}) exactly when the extension survives.
    QVector reduced = n_gamma.reduce(v);
    bool ytau_shape = !reduced(xi32).is_zero();
    for (int k = 0; k < a.dim() && ytau_shape; ++k)
      if (k != xi32 && k != zeta3 && !reduced(k).is_zero()) ytau_shape = false;
    c.require(survives == ytau_shape,
              "basis extension by " + a.alg.label(idx) + " disagrees with the y_tau classification");
  }
  return finish(c);
}

CheckResult check_pinch_point_dependence(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  std::vector<AffineField> x = {d5_field_for_vector(a, d5_x1(a)), d5_field_for_vector(a, d5_x2(a)),
                                d5_field_for_vector(a, d5_x3(a))};

  {
    // tau = 0, alpha = 2: the four field values span a rank-3 column space.
    GVector z0 = pinch_point(Rational(0), Rational(2));
    std::vector<AffineField> four = x;
    four.push_back(d5_field_for_vector(a, d5_y_tau(a, Rational(0))));
    GMatrix values(kSymDim, 4);
    for (int k = 0; k < 4; ++k) values.col(k) = field_eval(four[static_cast<size_t>(k)], z0);
    c.require(rank<GaussianRational>(std::move(values)) == 3, "rank at the tau=0 pinch point is not 3");
  }

  for (int k = 0; k < 20 && c.pass; ++k) {
    Rational tau = rng.rational(5, 3);
    Rational bound = Rational(1) / ((Rational(1) + tau * tau) * (Rational(1) + tau * tau));
    Rational alpha = bound + rng.positive_rational(5, 3);
    GVector z0 = pinch_point(tau, alpha);
    std::string at = " at sample " + std::to_string(k);
    c.require(in_siegel_upper_halfplane(z0), "pinch point is outside the domain" + at);
    c.require(z0(0) == GaussianRational::i(), "pinch point is off the fiber" + at);
    std::vector<AffineField> four = x;
    four.push_back(d5_field_for_vector(a, d5_y_tau(a, tau)));
    c.require(!orbit_totally_real_at(four, z0), "extended orbit is totally real at the pinch point" + at);
    c.require(orbit_totally_real_at(x, z0), "the n_gamma orbit itself should stay totally real" + at);
  }
  return finish(c);
}

CheckResult check_fiber_orbits(Rng& rng) {
  Checker c;
  NormalJAlgebra a = d5_algebra();
  std::vector<AffineField> x = {d5_field_for_vector(a, d5_x1(a)), d5_field_for_vector(a, d5_x2(a)),
                                d5_field_for_vector(a, d5_x3(a))};
  for (int k = 0; k < 100 && c.pass; ++k) {
    GVector p = random_domain_fiber_point(rng);
    c.require(orbit_totally_real_at(x, p), "orbit fails the totally-real test at sample " + std::to_string(k));
  }

  // Emit the 3x3 minors of the symbolic field matrix for inspection; their
  // common zero locus is what the sampled points avoid.
  std::vector<std::string> names = {"z11", "z12", "z13", "z22", "z23", "z33"};
  std::vector<std::vector<Poly>> columns;
  for (const AffineField& f : x) {
    std::vector<Poly> column;
    for (int r = 0; r < kSymDim; ++r) {
      Poly entry = Poly::constant(kSymDim, f.constant(r));
      for (int v = 0; v < kSymDim; ++v)
        entry = entry + f.linear(r, v) * Poly::variable(kSymDim, v);
      column.push_back(entry);
    }
    columns.push_back(column);
  }
  for (int r0 = 0; r0 < kSymDim; ++r0)
    for (int r1 = r0 + 1; r1 < kSymDim; ++r1)
      for (int r2 = r1 + 1; r2 < kSymDim; ++r2) {
        Poly det = columns[0][r0] * (columns[1][r1] * columns[2][r2] - columns[1][r2] * columns[2][r1]) -
                   columns[1][r0] * (columns[0][r1] * columns[2][r2] - columns[0][r2] * columns[2][r1]) +
                   columns[2][r0] * (columns[0][r1] * columns[1][r2] - columns[0][r2] * columns[1][r1]);
        if (det.is_zero()) continue;
        std::ostringstream os;
        os << "minor(rows " << r0 + 1 << "," << r1 + 1 << "," << r2 + 1 << ") = " << det.str(names);
        c.detail.push_back(os.str());
      }
  return finish(c);
}

CheckResult check_group_closure(Rng& rng) {
  Checker c;
  GroupElement5 zero{GaussianRational(0), GaussianRational(0), GaussianRational(0)};
  c.require(group_action_map(zero) == AffineMap::identity(kSymDim), "zero parameters do not act as the identity");

  for (int k = 0; k < 50 && c.pass; ++k) {
    GroupElement5 g{rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3)};
    GroupElement5 h{rng.gaussian(4, 3), rng.gaussian(4, 3), rng.gaussian(4, 3)};
    std::string at = " at sample " + std::to_string(k);

    GMatrix product = g.matrix6() * h.matrix6();
    auto composed = GroupElement5::from_matrix6(product);
    c.require(composed.has_value(), "matrix product left the parameter family" + at);
    if (!composed) break;
    c.require(composed->a == g.a + h.a && composed->b == g.b + h.b, "a/b parameters do not add" + at);

    c.require(is_unipotent(g.matrix6()), "family matrix is not unipotent" + at);
    c.require(determinant<GaussianRational>(group_action_map(g).linear) == GaussianRational(1),
              "linear part determinant != 1" + at);

    GVector z = random_sym_point(rng);
    c.require(is_zero<GaussianRational>(GVector(apply_group(g, z) - apply_group_block(g, z))),
              "displayed action differs from the block action" + at);
    c.require(is_zero<GaussianRational>(GVector(apply_group(g, apply_group(h, z)) - apply_group(*composed, z))),
              "sequential application differs from the composed element" + at);
  }
  return finish(c);
}

CheckResult check_freeness(Rng& rng) {
  Checker c;

  {
    // Symbolic sanity on the (1,2) and (1,3) entries: they force
    // a = -b z11 and then b (z11^2 + 1) = 0.
    const int N = 9;
    PolyMap action = [] {
      // Rebuild the symbolic action from the displayed formula.
      auto var = [](int idx) { return Poly::variable(9, idx); };
      Poly a = var(0), b = var(1), cc = var(2);
      Poly z11 = var(3), z12 = var(4), z13 = var(5), z22 = var(6), z23 = var(7), z33 = var(8);
      Poly two = Poly::constant(9, GaussianRational(2));
      Poly half = Poly::constant(9, GaussianRational(Rational(1, 2)));
      return PolyMap(9, {z11, z12 + b * z11 + a, z13 + a * z11 - b,
                         z22 + two * b * z12 + b * b * z11 + a * b - two * cc,
                         z23 + a * z12 + b * z13 + a * b * z11 + half * (a * a - b * b),
                         z33 + two * a * z13 + a * a * z11 - a * b - two * (a + cc)});
    }();
    Poly e12 = action.coords[1] - Poly::variable(N, 4);
    Poly expected12 = Poly::variable(N, 0) + Poly::variable(N, 1) * Poly::variable(N, 3);
    c.require(e12 == expected12, "entry (1,2) equation is not a + b z11");

    std::vector<Poly> subst;
    for (int k = 0; k < N; ++k) subst.push_back(Poly::variable(N, k));
    subst[0] = -(Poly::variable(N, 1) * Poly::variable(N, 3));  // a -> -b z11
    Poly e13 = (action.coords[2] - Poly::variable(N, 5)).substitute(subst);
    Poly expected13 =
        -(Poly::variable(N, 1) * (Poly::variable(N, 3) * Poly::variable(N, 3) + Poly::constant(N, GaussianRational(1))));
    c.require(e13 == expected13, "substituted entry (1,3) equation is not -b (z11^2 + 1)");
  }

  {
    Rational tau = rng.rational(5, 3);
    Rational bound = Rational(1) / ((Rational(1) + tau * tau) * (Rational(1) + tau * tau));
    GVector z0 = pinch_point(tau, bound + rng.positive_rational(5, 3));
    std::vector<GroupElement5> stab = stabilizer_solve(z0);
    c.require(stab.size() == 1 && stab[0].a.is_zero() && stab[0].b.is_zero() && stab[0].c.is_zero(),
              "stabilizer at the pinch point is nontrivial");
  }

  for (int k = 0; k < 100 && c.pass; ++k) {
    std::vector<GroupElement5> stab = stabilizer_solve(random_sym_point(rng));
    c.require(stab.size() == 1 && stab[0].a.is_zero() && stab[0].b.is_zero() && stab[0].c.is_zero(),
              "stabilizer is nontrivial at sample " + std::to_string(k));
  }
  return finish(c);
}

CheckResult check_trivialization_chain(Rng&) {
  Checker c;
  ChainReport report = verify_trivialization_chain();
  for (const ChainCheck& step : report.checks) c.require(step.pass, step.id + ": " + step.witness);
  c.require(report.checks.size() == 5, "expected five chain identities");
  return finish(c);
}

CheckResult check_trivialization_mutations(Rng&) {
  Checker c;
  const std::vector<std::pair<ChainMutation, std::string>> cases = {
      {ChainMutation::quotient_map, "center-invariance"},
      {ChainMutation::induced_c2, "induced-c2-action"},
      {ChainMutation::straightening, "straightened-a-flow"},
      {ChainMutation::induced_c4, "induced-c4-action"},
      {ChainMutation::projected_flow, "projected-c3-flow"}};
  for (const auto& [mutation, expected_id] : cases) {
    ChainReport report = verify_trivialization_chain(mutation);
    bool found = false;
    for (const ChainCheck& step : report.checks)
      if (step.id == expected_id) found = !step.pass;
    c.require(found, "mutation of " + expected_id + " was not caught");
  }
  return finish(c);
}

CheckResult check_bezout(Rng&) {
  Checker c;
  Poly w = Poly::variable(1, 0);
  Poly one = Poly::constant(1, GaussianRational(1));

  {
    Poly f = -(w * w + one);
    Poly g = GaussianRational(-2) * w;
    BezoutResult r = bezout_trivialize(f, g);
    c.require(r.phi == Poly::constant(1, GaussianRational(-1)), "phi != -1");
    c.require(r.psi == GaussianRational(Rational(1, 2)) * w, "psi != w/2");
    c.require(r.phi * f + r.psi * g == one, "phi f + psi g != 1");

    // The map conjugates the flow to a translation in the third coordinate.
    const int N = 4;  // (t, z1, z2, z3)
    Poly t = Poly::variable(N, 0), z1 = Poly::variable(N, 1), z2 = Poly::variable(N, 2), z3 = Poly::variable(N, 3);
    PolyMap flow(N, {z1, z2 + t * f.substitute({z1}), z3 + t * g.substitute({z1})});
    PolyMap lhs = poly_compose(r.map3, flow);
    std::vector<Poly> inc = {z1, z2, z3};
    PolyMap rhs = poly_compose(r.map3, PolyMap(N, inc));
    rhs.coords[2] = rhs.coords[2] + t;
    c.require(lhs == rhs, "straightening map does not turn the flow into a translation");
  }

  {
    BezoutResult r = bezout_trivialize(one, Poly(1));
    c.require(r.phi == one && r.psi.is_zero(), "(f,g) = (1,0) should give (1,0)");
  }

  {
    bool threw = false;
    try {
      bezout_trivialize(w, w);
    } catch (const std::domain_error&) {
      threw = true;
    }
    c.require(threw, "common root was not rejected");
  }
  return finish(c);
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = {
      {"3.1-heisenberg-bracket", "3.1", check_heisenberg_bracket},
      {"3.1-heisenberg-orbits", "3.1", check_heisenberg_orbits},
      {"3.1-heisenberg-subalgebra", "3.1", check_heisenberg_subalgebra},
      {"3.1-discrete-group-law", "3.1", check_discrete_group_law},
      {"3.2-ball-bracket-table", "3.2", check_ball_bracket_table},
      {"3.2-ball-axioms", "3.2", check_ball_axioms},
      {"3.2-heisenberg-identity", "3.2", check_heisenberg_identity},
      {"3.2-mutation-guard", "3.2", check_mutation_guard},
      {"3.2-completion-sweep", "3.2", check_completion_sweep},
      {"3.2-completion-examples", "3.2", check_completion_examples},
      {"4.1-lieball-bracket-table", "4.1", check_lieball_bracket_table},
      {"4.1-lieball-axioms", "4.1", check_lieball_axioms},
      {"4.2-fibration", "4.2", check_lieball_fibration},
      {"4.2-xi1prime-obstruction", "4.2", check_xi1prime_obstruction},
      {"4.2-completion-traces", "4.2", check_lieball_completion_traces},
      {"4.2-stein-decisions", "4.2", check_stein_decisions},
      {"5.1-siegel3-axioms", "5.1", check_siegel3_axioms},
      {"5.1-d5-axioms", "5.1", check_d5_axioms},
      {"5.1-d5-bracket-table", "5.1", check_d5_bracket_table},
      {"5.1-field-table", "5.1", check_field_table},
      {"5.1-field-bracket-sign", "5.1", check_field_bracket_sign},
      {"5.1-exponential-flow", "5.1", check_exponential_flow},
      {"5.1-flow-vs-group", "5.1", check_flow_vs_group},
      {"5.2-generators", "5.2", check_d5_generators},
      {"5.2-ytau-centralizes", "5.2", check_ytau_centralizes},
      {"5.2-normalizer", "5.2", check_d5_normalizer},
      {"5.2-extension-classification", "5.2", check_extension_classification},
      {"5.2-pinch-point-dependence", "5.2", check_pinch_point_dependence},
      {"5.2-fiber-orbits", "5.2", check_fiber_orbits},
      {"5.2-group-closure", "5.2", check_group_closure},
      {"5.2-freeness", "5.2", check_freeness},
      {"5.2-trivialization-chain", "5.2", check_trivialization_chain},
      {"5.2-trivialization-mutations", "5.2", check_trivialization_mutations},
      {"5.2-bezout", "5.2", check_bezout},
  };
  return registry;
}

SuiteReport run_paper_suite(const std::string& section_filter, std::uint64_t seed) {
  SuiteReport report;
  for (const CheckDef& def : check_registry()) {
    if (!section_filter.empty() && def.section.rfind(section_filter, 0) != 0 &&
        def.id.rfind(section_filter, 0) != 0)
      continue;
    Rng rng = Rng::keyed(seed, def.id);
    CheckResult result = def.run(rng);
    result.id = def.id;
    result.section = def.section;
    (result.pass ? report.passed : report.failed)++;
    report.results.push_back(std::move(result));
  }
  return report;
}

void print_suite_report(std::ostream& os, const SuiteReport& report) {
  for (const CheckResult& r : report.results) {
    os << "CHECK " << r.id << " " << (r.pass ? "PASS" : "FAIL") << "\n";
    if (!r.pass && !r.witness.empty()) os << "WITNESS " << r.id << " " << r.witness << "\n";
    for (const std::string& line : r.detail) os << "DETAIL " << r.id << " " << line << "\n";
  }
  os << "SUMMARY checks=" << report.results.size() << " passed=" << report.passed << " failed=" << report.failed
     << "\n";
}

}  // namespace jalg
