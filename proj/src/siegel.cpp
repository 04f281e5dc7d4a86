#include "jalg/siegel.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "jalg/linalg.hpp"

namespace jalg {

int sym_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 3) throw std::invalid_argument("sym_index: entry out of range");
  // (1,1) (1,2) (1,3) (2,2) (2,3) (3,3)
  static constexpr int table[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
  return table[i - 1][j - 1];
}

GMatrix sym_from_coords(const GVector& z) {
  if (z.size() != kSymDim) throw std::invalid_argument("sym_from_coords: need 6 coordinates");
  GMatrix Z(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) Z(i - 1, j - 1) = z(sym_index(i, j));
  return Z;
}

GVector sym_to_coords(const GMatrix& Z) {
  if (Z.rows() != 3 || Z.cols() != 3) throw std::invalid_argument("sym_to_coords: need a 3x3 matrix");
  if (!is_zero<GaussianRational>(GMatrix(Z - Z.transpose())))
    throw std::invalid_argument("sym_to_coords: matrix is not symmetric");
  GVector z(kSymDim);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) z(sym_index(i, j)) = Z(i - 1, j - 1);
  return z;
}

AffineField siegel_field(const SiegelMatrixElement& e) {
  GMatrix A = to_gaussian(e.A);
  AffineField field = AffineField::zero(kSymDim);
  // Column for coordinate (p,q): pack A*S + S*A^t where S is the symmetric
  // coordinate matrix of z_pq.
  for (int p = 1; p <= 3; ++p) {
    for (int q = p; q <= 3; ++q) {
      GMatrix S = GMatrix::Constant(3, 3, GaussianRational(0));
      S(p - 1, q - 1) = GaussianRational(1);
      S(q - 1, p - 1) = GaussianRational(1);
      if (p == q) S(p - 1, p - 1) = GaussianRational(1);
      GMatrix image = A * S + S * A.transpose();
      field.linear.col(sym_index(p, q)) = sym_to_coords(image);
    }
  }
  field.constant = sym_to_coords(to_gaussian(e.B));
  return field;
}

std::vector<AffineField> catalog_basis_fields(const NormalJAlgebra& a) {
  if (a.kind != DomainKind::d5 && a.kind != DomainKind::siegel3)
    throw std::invalid_argument("catalog_basis_fields: no field realization for this kind");
  const std::vector<SiegelMatrixElement>& basis = siegel3_matrix_basis();
  std::vector<AffineField> fields;
  for (int k = 0; k < a.dim(); ++k) fields.push_back(siegel_field(basis[static_cast<size_t>(k)]));
  return fields;
}

AffineField d5_field_for_vector(const NormalJAlgebra& a, const QVector& v) {
  std::vector<AffineField> basis = catalog_basis_fields(a);
  AffineField out = AffineField::zero(kSymDim);
  for (int k = 0; k < a.dim(); ++k) {
    if (v(k).is_zero()) continue;
    out = out + GaussianRational(v(k)) * basis[static_cast<size_t>(k)];
  }
  return out;
}

bool orbit_totally_real_at(const std::vector<AffineField>& fields, const GVector& p) {
  if (fields.empty()) return true;
  GMatrix values(p.size(), static_cast<Eigen::Index>(fields.size()));
  for (size_t k = 0; k < fields.size(); ++k) values.col(static_cast<Eigen::Index>(k)) = field_eval(fields[k], p);
  return rank<GaussianRational>(std::move(values)) == static_cast<Eigen::Index>(fields.size());
}

// ---------------------------------------------------------------------------

GMatrix GroupElement5::matrix6() const {
  GaussianRational half(Rational(1, 2));
  GaussianRational sq = (a * a + b * b) * half;
  GMatrix m = GMatrix::Identity(6, 6);
  m(0, 4) = a;
  m(0, 5) = -b;
  m(1, 0) = b;
  m(1, 3) = a;
  m(1, 4) = GaussianRational(-2) * c;
  m(1, 5) = -sq;
  m(2, 0) = a;
  m(2, 3) = -b;
  m(2, 4) = sq;
  m(2, 5) = GaussianRational(-2) * (a + c);
  m(3, 4) = -b;
  m(3, 5) = -a;
  return m;
}

std::optional<GroupElement5> GroupElement5::from_matrix6(const GMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6) return std::nullopt;
  GroupElement5 g{m(2, 0), m(1, 0), GaussianRational(Rational(-1, 2)) * m(1, 4)};
  if (!is_zero<GaussianRational>(GMatrix(g.matrix6() - m))) return std::nullopt;
  return g;
}

GroupElement5 compose(const GroupElement5& g, const GroupElement5& h) {
  GMatrix product = g.matrix6() * h.matrix6();
  std::optional<GroupElement5> composed = GroupElement5::from_matrix6(product);
  if (!composed) throw std::logic_error("compose: product left the parameter family");
  return *composed;
}

GVector apply_group(const GroupElement5& g, const GVector& z) {
  if (z.size() != kSymDim) throw std::invalid_argument("apply_group: need 6 coordinates");
  const GaussianRational &a = g.a, &b = g.b, &c = g.c;
  GaussianRational half(Rational(1, 2));
  GaussianRational z11 = z(0), z12 = z(1), z13 = z(2), z22 = z(3), z23 = z(4), z33 = z(5);
  GVector out(kSymDim);
  out(0) = z11;
  out(1) = z12 + b * z11 + a;
  out(2) = z13 + a * z11 - b;
  out(3) = z22 + GaussianRational(2) * b * z12 + b * b * z11 + a * b - GaussianRational(2) * c;
  out(4) = z23 + a * z12 + b * z13 + a * b * z11 + (a * a - b * b) * half;
  out(5) = z33 + GaussianRational(2) * a * z13 + a * a * z11 - a * b - GaussianRational(2) * (a + c);
  return out;
}

GVector apply_group_block(const GroupElement5& g, const GVector& z) {
  GMatrix m = g.matrix6();
  GMatrix A = m.topLeftCorner(3, 3);
  GMatrix B = m.topRightCorner(3, 3);
  GMatrix Z = sym_from_coords(z);
  GMatrix image = A * Z * A.transpose() + B * A.transpose();
  return sym_to_coords(image);
}

AffineMap group_action_map(const GroupElement5& g) {
  GVector zero = GVector::Constant(kSymDim, GaussianRational(0));
  GVector translation = apply_group(g, zero);
  GMatrix linear(kSymDim, kSymDim);
  for (int k = 0; k < kSymDim; ++k) {
    GVector e = GVector::Constant(kSymDim, GaussianRational(0));
    e(k) = GaussianRational(1);
    linear.col(k) = apply_group(g, e) - translation;
  }
  return AffineMap(std::move(linear), std::move(translation));
}

bool is_unipotent(const GMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return nilpotency_index(GMatrix(m - GMatrix::Identity(m.rows(), m.cols()))) >= 0;
}

std::vector<GroupElement5> stabilizer_solve(const GVector& z) {
  if (z.size() != kSymDim) throw std::invalid_argument("stabilizer_solve: need 6 coordinates");
  const GaussianRational z11 = z(0), z12 = z(1), z13 = z(2);
  const GaussianRational one(1);

  std::vector<GroupElement5> solutions;
  GaussianRational disc = one + z11 * z11;  // determinant of the (1,2)/(1,3) linear system up to sign
  if (!disc.is_zero()) {
    // a + b z11 = 0 and a z11 - b = 0 force a = b = 0; the (2,2) entry then
    // forces c = 0.
    solutions.push_back({GaussianRational(0), GaussianRational(0), GaussianRational(0)});
  } else {
    // z11^2 = -1. The linear equations leave the family a = -b z11; the
    // (2,2) entry gives c = b z12, and the remaining entries reduce to
    //   b (z13 - z11 z12) = 0  and  b (z11 - z11 z13 - z12) = 0.
    GaussianRational k1 = z13 - z11 * z12;
    GaussianRational k2 = z11 - z11 * z13 - z12;
    if (k1.is_zero() && k2.is_zero())
      throw std::logic_error("stabilizer_solve: both residual coefficients vanished");  // k1 = 0 makes k2 = z11 != 0
    solutions.push_back({GaussianRational(0), GaussianRational(0), GaussianRational(0)});
  }

  for (const GroupElement5& g : solutions)
    if (!is_zero<GaussianRational>(GVector(apply_group(g, z) - z)))
      throw std::logic_error("stabilizer_solve: produced a non-fixing solution");
  return solutions;
}

// ---------------------------------------------------------------------------

bool in_siegel_upper_halfplane(const GVector& z) {
  GMatrix Z = sym_from_coords(z);
  QMatrix Y(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) Y(r, c) = Z(r, c).imag();
  for (int k = 1; k <= 3; ++k)
    if (determinant<Rational>(Y.topLeftCorner(k, k)).sign() <= 0) return false;
  return true;
}

GVector random_sym_point(Rng& rng) {
  GVector z(kSymDim);
  for (int k = 0; k < kSymDim; ++k) z(k) = rng.gaussian(5, 3);
  return z;
}

GVector random_domain_fiber_point(Rng& rng) {
  // Im Z = L L^t with L lower triangular, L(0,0) = 1 and positive diagonal,
  // so the imaginary part is positive definite and has (1,1) entry 1.
  QMatrix L = QMatrix::Constant(3, 3, Rational(0));
  L(0, 0) = Rational(1);
  L(1, 1) = rng.positive_rational(4, 3);
  L(2, 2) = rng.positive_rational(4, 3);
  L(1, 0) = rng.rational(3, 3);
  L(2, 0) = rng.rational(3, 3);
  L(2, 1) = rng.rational(3, 3);
  QMatrix Y = L * L.transpose();
  QMatrix X(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < 3; ++c) X(r, c) = X(c, r) = rng.rational(4, 3);
  X(0, 0) = Rational(0);

  GMatrix Z(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) Z(r, c) = GaussianRational(X(r, c), Y(r, c));
  GVector z = sym_to_coords(Z);
  if (!in_siegel_upper_halfplane(z)) throw std::logic_error("random_domain_fiber_point: construction failed");
  return z;
}

GVector pinch_point(const Rational& tau, const Rational& alpha) {
  Rational denom = Rational(1) + tau * tau;
  GVector z = GVector::Constant(kSymDim, GaussianRational(0));
  z(0) = GaussianRational::i();
  z(1) = GaussianRational(tau / denom, Rational(1) / denom);
  z(3) = GaussianRational(Rational(0), alpha);
  z(5) = GaussianRational::i();
  return z;
}

namespace {

QVector label_combination(const NormalJAlgebra& a,
                          const std::vector<std::pair<const char*, Rational>>& terms) {
  QVector v = QVector::Constant(a.dim(), Rational(0));
  for (const auto& [label, coeff] : terms) {
    int idx = a.alg.label_index(label);
    if (idx < 0) throw std::invalid_argument(std::string("missing label ") + label);
    v(idx) += coeff;
  }
  return v;
}

}  // namespace

QVector d5_x1(const NormalJAlgebra& a) {
  return label_combination(a, {{"xi31p", Rational(1)}, {"zeta3", Rational(1)}, {"xi21", Rational(1)}});
}

QVector d5_x2(const NormalJAlgebra& a) {
  return label_combination(a, {{"xi31", Rational(-1)}, {"xi21p", Rational(1)}});
}

QVector d5_x3(const NormalJAlgebra& a) {
  return label_combination(a, {{"zeta3", Rational(1)}, {"zeta2", Rational(1)}});
}

QVector d5_y_tau(const NormalJAlgebra& a, const Rational& tau) {
  return label_combination(a, {{"xi32", Rational(1)}, {"zeta3", tau}});
}

// ---------------------------------------------------------------------------
// Trivialization chain.

bool ChainReport::all_pass() const {
  for (const ChainCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

Poly var(int total, int index) { return Poly::variable(total, index); }

Poly con(int total, long num, long den = 1) { return Poly::constant(total, GaussianRational(Rational(num, den))); }

PolyMap lift(const PolyMap& f, int total, int offset) {
  std::vector<Poly> args;
  for (int k = 0; k < f.source_dim; ++k) args.push_back(var(total, offset + k));
  std::vector<Poly> comps;
  for (const Poly& p : f.coords) comps.push_back(p.substitute(args));
  return PolyMap(total, std::move(comps));
}

// The group action in 9 variables (a, b, c, z11, z12, z13, z22, z23, z33).
PolyMap symbolic_group_action() {
  const int N = 9;
  Poly a = var(N, 0), b = var(N, 1), c = var(N, 2);
  Poly z11 = var(N, 3), z12 = var(N, 4), z13 = var(N, 5), z22 = var(N, 6), z23 = var(N, 7), z33 = var(N, 8);
  Poly two = con(N, 2), half = con(N, 1, 2);
  std::vector<Poly> comps = {
      z11,
      z12 + b * z11 + a,
      z13 + a * z11 - b,
      z22 + two * b * z12 + b * b * z11 + a * b - two * c,
      z23 + a * z12 + b * z13 + a * b * z11 + half * (a * a - b * b),
      z33 + two * a * z13 + a * a * z11 - a * b - two * (a + c)};
  return PolyMap(N, std::move(comps));
}

PolyMap quotient_map(bool mutated) {
  const int N = 6;
  Poly z11 = var(N, 0), z12 = var(N, 1), z13 = var(N, 2), z22 = var(N, 3), z23 = var(N, 4), z33 = var(N, 5);
  std::vector<Poly> comps = {z11, z12, z13, mutated ? z22 + z33 : z22 - z33, z23};
  return PolyMap(N, std::move(comps));
}

// Displayed two-parameter action on C^5 in variables (a, b, z1..z5).
PolyMap displayed_c2_action(bool mutated) {
  const int N = 7;
  Poly a = var(N, 0), b = var(N, 1);
  Poly z1 = var(N, 2), z2 = var(N, 3), z3 = var(N, 4), z4 = var(N, 5), z5 = var(N, 6);
  Poly two = con(N, 2), half = con(N, 1, 2);
  Poly fourth = z4 + two * b * z2 - two * a * z3 + (b * b - a * a) * z1 + two * a * b;
  if (!mutated) fourth = fourth + two * a;
  std::vector<Poly> comps = {z1, z2 + b * z1 + a, z3 + a * z1 - b, fourth,
                             z5 + a * z2 + b * z3 + a * b * z1 + half * (a * a - b * b)};
  return PolyMap(N, std::move(comps));
}

// The straightening map of C^5 in variables (z1..z5).
PolyMap straightening_map(bool mutated) {
  const int N = 5;
  Poly z1 = var(N, 0), z2 = var(N, 1), z3 = var(N, 2), z4 = var(N, 3), z5 = var(N, 4);
  Poly two = con(N, 2);
  Poly fourth = z4 + two * z2 * z3 - two * z1 * z5;
  if (!mutated) fourth = fourth - two * z2;
  std::vector<Poly> comps = {z2, z1, z3 - z1 * z2, fourth, z2 * z2 - two * z5};
  return PolyMap(N, std::move(comps));
}

// Displayed one-parameter action on C^4 in variables (b, w1..w4).
PolyMap displayed_c4_action(bool mutated) {
  const int N = 5;
  Poly b = var(N, 0), w1 = var(N, 1), w2 = var(N, 2), w3 = var(N, 3), w4 = var(N, 4);
  Poly two = con(N, 2), one = con(N, 1);
  Poly fourth = w4 - two * b * w2;
  if (!mutated) fourth = fourth + b * b * (w1 * w1 + one);
  std::vector<Poly> comps = {w1, w2 - b * (w1 * w1 + one), w3 - two * b * w1, fourth};
  return PolyMap(N, std::move(comps));
}

std::pair<Poly, Poly> projected_flow_pair(bool mutated) {
  Poly w = var(1, 0);
  Poly f = -(w * w + con(1, 1));
  Poly g = mutated ? -w : con(1, -2) * w;
  return {f, g};
}

ChainCheck compare_maps(const std::string& id, const PolyMap& lhs, const PolyMap& rhs,
                        const std::vector<std::string>& names) {
  ChainCheck check;
  check.id = id;
  if (lhs == rhs) return check;
  check.pass = false;
  std::ostringstream os;
  for (int k = 0; k < lhs.target_dim(); ++k) {
    Poly diff = lhs.coords[static_cast<size_t>(k)] - rhs.coords[static_cast<size_t>(k)];
    if (diff.is_zero()) continue;
    os << "coordinate " << k + 1 << ": lhs - rhs = " << diff.str(names) << "; ";
  }
  check.witness = os.str();
  return check;
}

}  // namespace

ChainReport verify_trivialization_chain(ChainMutation mutation) {
  ChainReport report;
  PolyMap pi = quotient_map(mutation == ChainMutation::quotient_map);
  PolyMap dc2 = displayed_c2_action(mutation == ChainMutation::induced_c2);
  PolyMap phi = straightening_map(mutation == ChainMutation::straightening);
  PolyMap dc4 = displayed_c4_action(mutation == ChainMutation::induced_c4);
  auto [f, g] = projected_flow_pair(mutation == ChainMutation::projected_flow);

  // (1) pi is invariant under the center (a = b = 0).
  {
    const int N = 7;  // (c, z11..z33)
    std::vector<Poly> comps = {var(N, 1), var(N, 2), var(N, 3),
                               var(N, 4) - con(N, 2) * var(N, 0), var(N, 5),
                               var(N, 6) - con(N, 2) * var(N, 0)};
    PolyMap center_action(N, std::move(comps));
    PolyMap lhs = poly_compose(pi, center_action);
    PolyMap rhs = lift(pi, N, 1);
    report.checks.push_back(
        compare_maps("center-invariance", lhs, rhs, {"c", "z11", "z12", "z13", "z22", "z23", "z33"}));
  }

  // (2) pi intertwines the full action with the displayed C^2 action on C^5.
  {
    const int N = 9;  // (a, b, c, z11..z33)
    PolyMap action = symbolic_group_action();
    PolyMap lhs = poly_compose(pi, action);
    std::vector<Poly> bridge_comps = {var(N, 0), var(N, 1)};
    PolyMap pi_lifted = lift(pi, N, 3);
    for (const Poly& p : pi_lifted.coords) bridge_comps.push_back(p);
    PolyMap rhs = poly_compose(dc2, PolyMap(N, std::move(bridge_comps)));
    report.checks.push_back(compare_maps("induced-c2-action", lhs, rhs,
                                         {"a", "b", "c", "z11", "z12", "z13", "z22", "z23", "z33"}));
  }

  // (3) Phi straightens the a-flow to a translation in the first coordinate.
  {
    const int N = 6;  // (a, z1..z5)
    std::vector<Poly> a_slice = {var(N, 0), Poly(N)};
    for (int k = 0; k < 5; ++k) a_slice.push_back(var(N, 1 + k));
    PolyMap a_action = poly_compose(dc2, PolyMap(N, std::move(a_slice)));
    PolyMap lhs = poly_compose(phi, a_action);
    PolyMap phi_lifted = lift(phi, N, 1);
    std::vector<Poly> rhs_comps = phi_lifted.coords;
    rhs_comps[0] = rhs_comps[0] + var(N, 0);
    PolyMap rhs(N, std::move(rhs_comps));
    report.checks.push_back(compare_maps("straightened-a-flow", lhs, rhs, {"a", "z1", "z2", "z3", "z4", "z5"}));
  }

  // (4) the b-flow descends through the last four coordinates of Phi to the
  // displayed C^4 action.
  {
    const int N = 6;  // (b, z1..z5)
    std::vector<Poly> b_slice = {Poly(N), var(N, 0)};
    for (int k = 0; k < 5; ++k) b_slice.push_back(var(N, 1 + k));
    PolyMap b_action = poly_compose(dc2, PolyMap(N, std::move(b_slice)));
    PolyMap tail(5, std::vector<Poly>(phi.coords.begin() + 1, phi.coords.end()));
    PolyMap lhs = poly_compose(tail, b_action);
    PolyMap tail_lifted = lift(tail, N, 1);
    std::vector<Poly> bridge_comps = {var(N, 0)};
    for (const Poly& p : tail_lifted.coords) bridge_comps.push_back(p);
    PolyMap rhs = poly_compose(dc4, PolyMap(N, std::move(bridge_comps)));
    report.checks.push_back(compare_maps("induced-c4-action", lhs, rhs, {"b", "z1", "z2", "z3", "z4", "z5"}));
  }

  // (5) projecting to the first three coordinates gives the flow
  // (w1, w2 + t f(w1), w3 + t g(w1)).
  {
    const int N = 5;  // (b, w1..w4)
    PolyMap proj3(N, std::vector<Poly>(dc4.coords.begin(), dc4.coords.begin() + 3));
    Poly w1 = var(N, 1);
    Poly f_at = f.substitute({w1});
    Poly g_at = g.substitute({w1});
    std::vector<Poly> rhs_comps = {w1, var(N, 2) + var(N, 0) * f_at, var(N, 3) + var(N, 0) * g_at};
    PolyMap rhs(N, std::move(rhs_comps));
    report.checks.push_back(compare_maps("projected-c3-flow", proj3, rhs, {"b", "w1", "w2", "w3", "w4"}));
  }

  return report;
}

BezoutResult bezout_trivialize(const Poly& f, const Poly& g) {
  if (f.nvars() != 1 || g.nvars() != 1) throw std::invalid_argument("bezout_trivialize: inputs must be univariate");
  auto [gcd, phi, psi] = univariate_extended_gcd(f, g);
  if (gcd.is_zero() || univariate_degree(gcd) > 0)
    throw std::domain_error("bezout_trivialize: f and g share a root, the action is not free");

  BezoutResult out;
  out.phi = phi;
  out.psi = psi;
  Poly identity_check = phi * f + psi * g - Poly::constant(1, GaussianRational(1));
  if (!identity_check.is_zero()) throw std::logic_error("bezout_trivialize: certificate does not hold");

  // z -> (z1, g(z1) z2 - f(z1) z3, phi(z1) z2 + psi(z1) z3): the second row
  // annihilates the flow direction (0, f, g) and the third moves it by 1.
  const int N = 3;
  Poly z1 = Poly::variable(N, 0), z2 = Poly::variable(N, 1), z3 = Poly::variable(N, 2);
  Poly f_at = f.substitute({z1});
  Poly g_at = g.substitute({z1});
  Poly phi_at = phi.substitute({z1});
  Poly psi_at = psi.substitute({z1});
  out.map3 = PolyMap(N, {z1, g_at * z2 - f_at * z3, phi_at * z2 + psi_at * z3});

  Poly det = g_at * psi_at + f_at * phi_at;  // determinant of the coefficient matrix
  if (det != Poly::constant(N, GaussianRational(1)))
    throw std::logic_error("bezout_trivialize: straightening map determinant is not 1");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<AffineField> heisenberg_ball3_fields() {
  // Coordinates (z, w1, w2).
  GaussianRational i = GaussianRational::i();
  AffineField x1 = AffineField::zero(3);
  x1.linear(0, 1) = GaussianRational(2) * i;
  x1.constant(1) = GaussianRational(1);
  AffineField x2 = AffineField::zero(3);
  x2.linear(0, 1) = GaussianRational(2);
  x2.linear(0, 2) = GaussianRational(2);
  x2.constant(1) = i;
  x2.constant(2) = i;
  AffineField x3 = AffineField::zero(3);
  x3.constant(0) = GaussianRational(1);
  return {x1, x2, x3};
}

GVector random_ball3_point(Rng& rng) {
  GaussianRational w1 = rng.gaussian(4, 3);
  GaussianRational w2 = rng.gaussian(4, 3);
  Rational im_z = w1.norm() + w2.norm() + rng.positive_rational(4, 3);
  GVector p(3);
  p(0) = GaussianRational(rng.rational(4, 3), im_z);
  p(1) = w1;
  p(2) = w2;
  return p;
}

AffineMap discrete_ball2_element(long k, long m, long n) {
  AffineMap map = AffineMap::identity(2);
  map.linear(0, 1) = GaussianRational(Rational(2 * n), Rational(2 * m));
  map.translation(0) = GaussianRational(Rational(2 * k), Rational(m * m + n * n));
  map.translation(1) = GaussianRational(Rational(m), Rational(n));
  return map;
}

namespace {

std::optional<long> rational_to_long(const Rational& r) {
  if (r.value().get_den() != 1) return std::nullopt;
  if (!r.value().get_num().fits_slong_p()) return std::nullopt;
  return r.value().get_num().get_si();
}

}  // namespace

std::optional<std::array<long, 3>> discrete_ball2_parameters(const AffineMap& map) {
  if (map.dim() != 2) return std::nullopt;
  std::optional<long> m = rational_to_long(map.translation(1).real());
  std::optional<long> n = rational_to_long(map.translation(1).imag());
  if (!m || !n) return std::nullopt;
  Rational two_k = map.translation(0).real();
  std::optional<long> two_k_long = rational_to_long(two_k);
  if (!two_k_long || *two_k_long % 2 != 0) return std::nullopt;
  long k = *two_k_long / 2;
  if (map != discrete_ball2_element(k, *m, *n)) return std::nullopt;
  return std::array<long, 3>{k, *m, *n};
}

}  // namespace jalg
