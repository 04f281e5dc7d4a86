#include "jalg/jalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace jalg {

std::string kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::ball: return "ball";
    case DomainKind::lieball: return "lieball";
    case DomainKind::siegel3: return "siegel3";
    case DomainKind::d5: return "d5";
    case DomainKind::custom: return "custom";
  }
  return "custom";
}

Rational NormalJAlgebra::lambda_of(const QVector& x) const {
  Rational acc(0);
  for (int k = 0; k < dim(); ++k) acc += lambda(k) * x(k);
  return acc;
}

Rational NormalJAlgebra::omega(const QVector& x, const QVector& y) const {
  return lambda_of(alg.bracket(x, y));
}

QMatrix NormalJAlgebra::omega_matrix() const {
  QMatrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m(i, j) = lambda_of(alg.basis_bracket(i, j));
  return m;
}

QMatrix NormalJAlgebra::metric_matrix() const {
  QMatrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    QVector Jei = J.col(i);
    for (int j = 0; j < dim(); ++j) m(i, j) = lambda_of(alg.bracket(Jei, alg.basis_vector(j)));
  }
  return m;
}

namespace {

Subspace coordinate_span(int dim, const std::vector<int>& indices) {
  QMatrix rows(static_cast<Eigen::Index>(indices.size()), dim);
  rows.setConstant(Rational(0));
  for (size_t k = 0; k < indices.size(); ++k) rows(static_cast<Eigen::Index>(k), indices[k]) = Rational(1);
  return Subspace::span_of_rows(std::move(rows));
}

}  // namespace

Subspace NormalJAlgebra::nilradical() const { return coordinate_span(dim(), nilradical_indices); }
Subspace NormalJAlgebra::abelian_part() const { return coordinate_span(dim(), abelian_indices); }

bool NormalJAlgebra::in_nilradical(const Subspace& s) const { return nilradical().contains(s); }

bool AxiomReport::all_pass() const {
  for (const AxiomCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const AxiomCheck& c : checks)
    if (!c.pass) return c.id + ": " + c.witness;
  return "";
}

namespace {

std::string vec_str(const NormalJAlgebra& a, const QVector& v) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < a.dim(); ++k) {
    if (v(k).is_zero()) continue;
    if (!first) os << " + ";
    os << v(k) << "*" << a.alg.label(k);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

AxiomReport check_axioms(const NormalJAlgebra& a) {
  AxiomReport report;
  int d = a.dim();
  auto add = [&report](const std::string& id, bool pass, const std::string& witness) {
    report.checks.push_back({id, pass, pass ? "" : witness});
  };

  {
    JacobiDefect defect = a.alg.jacobi_defect();
    std::ostringstream os;
    if (!defect.zero)
      os << "triple (" << a.alg.label(defect.i) << ", " << a.alg.label(defect.j) << ", " << a.alg.label(defect.k)
         << ") leaves " << vec_str(a, defect.defect);
    add("jacobi", defect.zero, os.str());
  }

  add("even-dimension", d % 2 == 0, "dimension is odd");

  {
    QMatrix jj = a.J * a.J + QMatrix::Identity(d, d);
    add("J-square", is_zero<Rational>(jj), "J^2 + I is nonzero");
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < d && ok; ++i) {
      QVector Jei = a.J.col(i);
      for (int j = i + 1; j < d && ok; ++j) {
        QVector Jej = a.J.col(j);
        QVector lhs = a.alg.bracket(Jei, Jej);
        QVector rhs = a.alg.basis_bracket(i, j) + a.J * a.alg.bracket(Jei, a.alg.basis_vector(j)) +
                      a.J * a.alg.bracket(a.alg.basis_vector(i), Jej);
        if (!is_zero<Rational>(QVector(lhs - rhs))) {
          ok = false;
          witness = "pair (" + a.alg.label(i) + ", " + a.alg.label(j) + ")";
        }
      }
    }
    add("J-integrability", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < d && ok; ++i) {
      for (int j = i + 1; j < d && ok; ++j) {
        Rational lhs = a.lambda_of(a.alg.bracket(a.J.col(i), a.J.col(j)));
        Rational rhs = a.lambda_of(a.alg.basis_bracket(i, j));
        if (lhs != rhs) {
          ok = false;
          witness = "pair (" + a.alg.label(i) + ", " + a.alg.label(j) + ")";
        }
      }
    }
    add("lambda-J-invariance", ok, witness);
  }

  {
    QMatrix b = a.metric_matrix();
    bool symmetric = is_zero<Rational>(QMatrix(b - b.transpose()));
    add("metric-symmetric", symmetric, "lambda([Jx,y]) is not symmetric");

    bool positive = true;
    std::string witness;
    for (int k = 1; k <= d && positive; ++k) {
      Rational minor = determinant<Rational>(b.topLeftCorner(k, k));
      if (minor.sign() <= 0) {
        positive = false;
        std::ostringstream os;
        os << "leading principal minor " << k << " = " << minor << " (witness basis vector " << a.alg.label(k - 1)
           << ")";
        witness = os.str();
      }
    }
    add("metric-positive", positive, witness);
  }

  {
    Subspace nil = a.nilradical();
    bool ideal = true;
    std::string witness;
    for (int i = 0; i < d && ideal; ++i) {
      for (int j : a.nilradical_indices) {
        if (!nil.contains(a.alg.basis_bracket(i, j))) {
          ideal = false;
          witness = "[" + a.alg.label(i) + ", " + a.alg.label(j) + "] leaves the nilradical";
          break;
        }
      }
    }
    add("nilradical-ideal", ideal, witness);

    bool nilpotent = false;
    std::string nil_witness = "lower central series stabilizes above zero";
    if (ideal) {
      try {
        LieAlgebra restricted = a.alg.coordinate_restriction(a.nilradical_indices);
        nilpotent = nilpotency_class(restricted).has_value();
      } catch (const std::exception& e) {
        nil_witness = e.what();
      }
    }
    add("nilradical-nilpotent", nilpotent, nil_witness);
  }

  {
    Subspace nil = a.nilradical();
    Subspace ab = a.abelian_part();
    bool splits = ab.intersect(nil).dim() == 0 &&
                  ab.dim() + nil.dim() == d;
    add("abelian-complement", splits, "a + n is not a direct-sum decomposition");

    bool abelian = true;
    std::string witness;
    for (size_t x = 0; x < a.abelian_indices.size() && abelian; ++x) {
      for (size_t y = x + 1; y < a.abelian_indices.size(); ++y) {
        QVector br = a.alg.basis_bracket(a.abelian_indices[x], a.abelian_indices[y]);
        if (!is_zero<Rational>(br)) {
          abelian = false;
          witness = "[" + a.alg.label(a.abelian_indices[x]) + ", " + a.alg.label(a.abelian_indices[y]) + "] != 0";
          break;
        }
      }
    }
    add("abelian-part-abelian", abelian, witness);
  }

  if (a.kind == DomainKind::ball) {
    // Center relation: on the nilradical, [x, y] = omega(x, y) * zeta_hat
    // where zeta_hat is zeta normalized so lambda(zeta_hat) = 1.
    bool ok = true;
    std::string witness;
    int zeta = a.alg.label_index("zeta");
    if (zeta < 0) {
      ok = false;
      witness = "no zeta label";
    } else {
      Rational lz = a.lambda(zeta);
      if (lz.is_zero()) {
        ok = false;
        witness = "lambda(zeta) = 0";
      } else {
        QVector zeta_hat = a.alg.basis_vector(zeta) * (Rational(1) / lz);
        for (size_t x = 0; x < a.nilradical_indices.size() && ok; ++x) {
          for (size_t y = x + 1; y < a.nilradical_indices.size() && ok; ++y) {
            int i = a.nilradical_indices[x], j = a.nilradical_indices[y];
            QVector lhs = a.alg.basis_bracket(i, j);
            QVector rhs = zeta_hat * a.lambda_of(lhs);
            if (!is_zero<Rational>(QVector(lhs - rhs))) {
              ok = false;
              witness = "pair (" + a.alg.label(i) + ", " + a.alg.label(j) + ")";
            }
          }
        }
      }
    }
    add("heisenberg-center", ok, witness);
  }

  return report;
}

namespace {

NormalJAlgebra finish_catalog(NormalJAlgebra a) {
  AxiomReport report = check_axioms(a);
  if (!report.all_pass())
    throw std::logic_error("catalog " + a.name + " fails its axioms: " + report.first_failure());
  return a;
}

}  // namespace

NormalJAlgebra unit_ball_algebra(int n) {
  if (n < 2) throw std::invalid_argument("unit_ball_algebra: need n >= 2");
  int m = n - 1;
  int d = 2 * n;
  // Basis order: alpha, xi_1..xi_m, xi_1'..xi_m', zeta.
  std::vector<std::string> labels;
  labels.push_back("alpha");
  for (int k = 1; k <= m; ++k) labels.push_back("xi" + std::to_string(k));
  for (int k = 1; k <= m; ++k) labels.push_back("xi" + std::to_string(k) + "p");
  labels.push_back("zeta");
  const int alpha = 0, zeta = d - 1;
  auto xi = [m](int k) { return k; };            // k = 1..m
  auto xip = [m](int k) { return m + k; };       // k = 1..m

  LieAlgebra::Constants c;
  auto unit = [d](int k, Rational coeff) {
    QVector v = QVector::Constant(d, Rational(0));
    v(k) = coeff;
    return v;
  };
  for (int k = 1; k <= m; ++k) {
    c[{alpha, xi(k)}] = unit(xi(k), Rational(-1));
    c[{alpha, xip(k)}] = unit(xip(k), Rational(-1));
    c[{xi(k), xip(k)}] = unit(zeta, Rational(1));
  }
  c[{alpha, zeta}] = unit(zeta, Rational(-2));

  QMatrix J = QMatrix::Constant(d, d, Rational(0));
  for (int k = 1; k <= m; ++k) {
    J(xip(k), xi(k)) = Rational(1);   // J(xi_k) = xi_k'
    J(xi(k), xip(k)) = Rational(-1);  // J(xi_k') = -xi_k
  }
  J(alpha, zeta) = Rational(1);   // J(zeta) = alpha
  J(zeta, alpha) = Rational(-1);  // J(alpha) = -zeta

  QVector lambda = QVector::Constant(d, Rational(0));
  lambda(zeta) = Rational(-1);

  NormalJAlgebra a;
  a.alg = LieAlgebra::checked(std::move(labels), std::move(c));
  a.J = std::move(J);
  a.lambda = std::move(lambda);
  for (int k = 1; k < d; ++k) a.nilradical_indices.push_back(k);
  a.abelian_indices = {alpha};
  a.kind = DomainKind::ball;
  a.name = "ball:" + std::to_string(n);
  return finish_catalog(std::move(a));
}

NormalJAlgebra lie_ball_algebra(int n) {
  if (n < 3) throw std::invalid_argument("lie_ball_algebra: need n >= 3");
  int m = n - 2;
  int d = 2 * n;
  // Basis order: delta, alpha, xi_1..xi_m, xi_1'..xi_m', zeta, eta.
  std::vector<std::string> labels;
  labels.push_back("delta");
  labels.push_back("alpha");
  for (int k = 1; k <= m; ++k) labels.push_back("xi" + std::to_string(k));
  for (int k = 1; k <= m; ++k) labels.push_back("xi" + std::to_string(k) + "p");
  labels.push_back("zeta");
  labels.push_back("eta");
  const int delta = 0, alpha = 1, zeta = d - 2, eta = d - 1;
  auto xi = [](int k) { return 1 + k; };
  auto xip = [m](int k) { return 1 + m + k; };

  LieAlgebra::Constants c;
  auto unit = [d](int k, Rational coeff) {
    QVector v = QVector::Constant(d, Rational(0));
    v(k) = coeff;
    return v;
  };
  for (int k = 1; k <= m; ++k) {
    c[{delta, xi(k)}] = unit(xi(k), Rational(-1));
    c[{alpha, xip(k)}] = unit(xip(k), Rational(-1));
    c[{xi(k), xip(k)}] = unit(zeta, Rational(1));
    c[{xip(k), eta}] = unit(xi(k), Rational(-2));  // [eta, xi_k'] = 2 xi_k
  }
  c[{delta, zeta}] = unit(zeta, Rational(-1));
  c[{delta, eta}] = unit(eta, Rational(-1));
  c[{alpha, zeta}] = unit(zeta, Rational(-1));
  c[{alpha, eta}] = unit(eta, Rational(1));

  QMatrix J = QMatrix::Constant(d, d, Rational(0));
  for (int k = 1; k <= m; ++k) {
    J(xip(k), xi(k)) = Rational(1);
    J(xi(k), xip(k)) = Rational(-1);
  }
  // J(zeta) = alpha + delta, J(eta) = delta - alpha, and the inverse images
  // J(delta) = -(zeta + eta)/2, J(alpha) = (eta - zeta)/2.
  J(alpha, zeta) = Rational(1);
  J(delta, zeta) = Rational(1);
  J(delta, eta) = Rational(1);
  J(alpha, eta) = Rational(-1);
  J(zeta, delta) = Rational(-1, 2);
  J(eta, delta) = Rational(-1, 2);
  J(zeta, alpha) = Rational(-1, 2);
  J(eta, alpha) = Rational(1, 2);

  QVector lambda = QVector::Constant(d, Rational(0));
  lambda(zeta) = Rational(-1);
  lambda(eta) = Rational(-1);

  NormalJAlgebra a;
  a.alg = LieAlgebra::checked(std::move(labels), std::move(c));
  a.J = std::move(J);
  a.lambda = std::move(lambda);
  for (int k = 2; k < d; ++k) a.nilradical_indices.push_back(k);
  a.abelian_indices = {delta, alpha};
  a.kind = DomainKind::lieball;
  a.name = "lieball:" + std::to_string(n);
  return finish_catalog(std::move(a));
}

namespace {

QMatrix unit3(int i, int j) {
  QMatrix m = QMatrix::Constant(3, 3, Rational(0));
  m(i - 1, j - 1) = Rational(1);
  return m;
}

std::vector<std::string> siegel_labels(bool full) {
  std::vector<std::string> labels = {"alpha3", "xi31", "xi32", "xi31p", "xi32p",
                                     "zeta3",  "alpha2", "xi21", "xi21p", "zeta2"};
  if (full) {
    labels.push_back("alpha1");
    labels.push_back("zeta1");
  }
  return labels;
}

// Flattens the (A, B) pair into an 18-vector for coordinate solves.
QVector flatten(const SiegelMatrixElement& e) {
  QVector v(18);
  int p = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v(p++) = e.A(r, c);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v(p++) = e.B(r, c);
  return v;
}

// Commutator in the (A, B) model:
//   [ (A1,B1), (A2,B2) ] = ( [A1,A2],  A1 B2 - B1 A2^t - A2 B1 + B2 A1^t ).
SiegelMatrixElement siegel_commutator(const SiegelMatrixElement& x, const SiegelMatrixElement& y) {
  SiegelMatrixElement out;
  out.A = x.A * y.A - y.A * x.A;
  out.B = x.A * y.B - x.B * y.A.transpose() - y.A * x.B + y.B * x.A.transpose();
  return out;
}

// Complex structure of the matrix model: (A, B) -> (phi^{-1}(B), -(A + A^t))
// where phi^{-1}(B) is the lower-triangular solution of L + L^t = B.
SiegelMatrixElement siegel_J(const SiegelMatrixElement& e) {
  SiegelMatrixElement out;
  out.A = QMatrix::Constant(3, 3, Rational(0));
  for (int r = 0; r < 3; ++r) {
    out.A(r, r) = e.B(r, r) / Rational(2);
    for (int c = 0; c < r; ++c) out.A(r, c) = e.B(r, c);
  }
  out.B = -(e.A + QMatrix(e.A.transpose()));
  return out;
}

// Coordinates of a flattened element in the span of the basis; throws when
// the element leaves the span.
QVector solve_in_basis(const QMatrix& basis_columns, const QVector& target) {
  Eigen::Index rows = basis_columns.rows(), cols = basis_columns.cols();
  QMatrix augmented(rows, cols + 1);
  augmented.leftCols(cols) = basis_columns;
  augmented.col(cols) = target;
  std::vector<Eigen::Index> pivots = rref_in_place(augmented);
  QVector solution = QVector::Constant(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) throw std::logic_error("siegel basis solve: element outside the span");
    solution(pivots[r]) = augmented(static_cast<Eigen::Index>(r), cols);
  }
  return solution;
}

NormalJAlgebra siegel_algebra_from_matrices(bool full) {
  const std::vector<SiegelMatrixElement>& all = siegel3_matrix_basis();
  std::vector<SiegelMatrixElement> basis(all.begin(), all.begin() + (full ? 12 : 10));
  std::vector<std::string> labels = siegel_labels(full);
  int d = static_cast<int>(basis.size());

  QMatrix columns(18, d);
  for (int k = 0; k < d; ++k) columns.col(k) = flatten(basis[static_cast<size_t>(k)]);

  LieAlgebra::Constants c;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      QVector coords = solve_in_basis(columns, flatten(siegel_commutator(basis[i], basis[j])));
      if (!is_zero<Rational>(coords)) c[{i, j}] = coords;
    }
  }

  QMatrix J(d, d);
  for (int k = 0; k < d; ++k) J.col(k) = solve_in_basis(columns, flatten(siegel_J(basis[static_cast<size_t>(k)])));

  QVector lambda(d);
  for (int k = 0; k < d; ++k) {
    Rational tr(0);
    for (int r = 0; r < 3; ++r) tr += basis[static_cast<size_t>(k)].B(r, r);
    lambda(k) = tr;
  }

  NormalJAlgebra a;
  a.alg = LieAlgebra::checked(std::move(labels), std::move(c));
  a.J = std::move(J);
  a.lambda = std::move(lambda);
  for (int k = 0; k < d; ++k) {
    if (a.alg.label(k).rfind("alpha", 0) == 0)
      a.abelian_indices.push_back(k);
    else
      a.nilradical_indices.push_back(k);
  }
  a.kind = full ? DomainKind::siegel3 : DomainKind::d5;
  a.name = full ? "siegel:3" : "d5";
  return finish_catalog(std::move(a));
}

}  // namespace

const std::vector<SiegelMatrixElement>& siegel3_matrix_basis() {
  static const std::vector<SiegelMatrixElement> basis = [] {
    QMatrix zero = QMatrix::Constant(3, 3, Rational(0));
    std::vector<SiegelMatrixElement> b;
    b.push_back({unit3(3, 3), zero});                                  // alpha3
    b.push_back({zero, unit3(1, 3) + unit3(3, 1)});                    // xi31
    b.push_back({zero, unit3(2, 3) + unit3(3, 2)});                    // xi32
    b.push_back({unit3(3, 1), zero});                                  // xi31p
    b.push_back({unit3(3, 2), zero});                                  // xi32p
    b.push_back({zero, QMatrix(unit3(3, 3) * Rational(-2))});          // zeta3
    b.push_back({unit3(2, 2), zero});                                  // alpha2
    b.push_back({zero, unit3(1, 2) + unit3(2, 1)});                    // xi21
    b.push_back({unit3(2, 1), zero});                                  // xi21p
    b.push_back({zero, QMatrix(unit3(2, 2) * Rational(-2))});          // zeta2
    b.push_back({unit3(1, 1), zero});                                  // alpha1
    b.push_back({zero, QMatrix(unit3(1, 1) * Rational(-2))});          // zeta1
    return b;
  }();
  return basis;
}

NormalJAlgebra siegel3_algebra() { return siegel_algebra_from_matrices(true); }
NormalJAlgebra d5_algebra() { return siegel_algebra_from_matrices(false); }

NormalJAlgebra catalog_make(DomainKind kind, int n) {
  switch (kind) {
    case DomainKind::ball: return unit_ball_algebra(n);
    case DomainKind::lieball: return lie_ball_algebra(n);
    case DomainKind::siegel3:
      if (n != 3) throw std::invalid_argument("catalog_make: only siegel:3 is supported");
      return siegel3_algebra();
    case DomainKind::d5: return d5_algebra();
    case DomainKind::custom: break;
  }
  throw std::invalid_argument("catalog_make: unsupported kind");
}

bool parse_catalog_spec(const std::string& text, DomainKind& kind, int& n) {
  auto parse_sized = [&text, &n](const std::string& prefix) {
    if (text.rfind(prefix + ":", 0) != 0) return false;
    std::string tail = text.substr(prefix.size() + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) return false;
    n = std::stoi(tail);
    return true;
  };
  if (text == "d5") {
    kind = DomainKind::d5;
    n = 0;
    return true;
  }
  if (parse_sized("ball")) {
    kind = DomainKind::ball;
    return true;
  }
  if (parse_sized("lieball")) {
    kind = DomainKind::lieball;
    return true;
  }
  if (parse_sized("siegel")) {
    kind = DomainKind::siegel3;
    return true;
  }
  return false;
}

}  // namespace jalg
