#include "jalg/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace jalg {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, Constants constants)
    : labels_(std::move(labels)), constants_(std::move(constants)) {
  int d = dim();
  for (const auto& [key, value] : constants_) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= d || j >= d) throw std::invalid_argument("LieAlgebra: index out of range");
    if (i >= j) throw std::invalid_argument("LieAlgebra: constants must be stored for i < j");
    if (value.size() != d) throw std::invalid_argument("LieAlgebra: bracket coordinate size mismatch");
  }
  for (size_t a = 0; a < labels_.size(); ++a)
    for (size_t b = a + 1; b < labels_.size(); ++b)
      if (labels_[a] == labels_[b]) throw std::invalid_argument("LieAlgebra: duplicate basis label " + labels_[a]);
}

LieAlgebra LieAlgebra::unchecked(std::vector<std::string> labels, Constants constants) {
  // Zero entries are dropped so the table is canonical either way.
  Constants cleaned;
  for (auto& [key, value] : constants)
    if (!is_zero<Rational>(value)) cleaned.emplace(key, std::move(value));
  return LieAlgebra(std::move(labels), std::move(cleaned));
}

LieAlgebra LieAlgebra::checked(std::vector<std::string> labels, Constants constants) {
  LieAlgebra alg = unchecked(std::move(labels), std::move(constants));
  JacobiDefect defect = alg.jacobi_defect();
  if (!defect.zero) {
    std::ostringstream os;
    os << "LieAlgebra: Jacobi identity fails on basis triple (" << defect.i << ", " << defect.j << ", "
       << defect.k << ")";
    throw std::invalid_argument(os.str());
  }
  return alg;
}

int LieAlgebra::label_index(const std::string& name) const {
  for (size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == name) return static_cast<int>(k);
  return -1;
}

QVector LieAlgebra::basis_vector(int k) const {
  QVector v = QVector::Constant(dim(), Rational(0));
  v(k) = Rational(1);
  return v;
}

QVector LieAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return QVector::Constant(dim(), Rational(0));
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find({i, j});
  QVector v = it == constants_.end() ? QVector::Constant(dim(), Rational(0)) : it->second;
  return flip ? QVector(-v) : v;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: dimension mismatch");
  QVector out = QVector::Constant(dim(), Rational(0));
  for (const auto& [key, value] : constants_) {
    auto [i, j] = key;
    Rational coeff = x(i) * y(j) - x(j) * y(i);
    if (coeff.is_zero()) continue;
    out += value * coeff;
  }
  return out;
}

QMatrix LieAlgebra::adjoint(const QVector& v) const {
  QMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = bracket(v, basis_vector(j));
  return m;
}

JacobiDefect LieAlgebra::jacobi_defect() const {
  int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      QVector bij = basis_bracket(i, j);
      for (int k = j + 1; k < d; ++k) {
        QVector sum = bracket(bij, basis_vector(k));
        sum += bracket(basis_bracket(j, k), basis_vector(i));
        sum += bracket(basis_bracket(k, i), basis_vector(j));
        if (!is_zero<Rational>(sum)) return {false, i, j, k, sum};
      }
    }
  }
  return {};
}

LieAlgebra LieAlgebra::coordinate_restriction(const std::vector<int>& indices) const {
  std::vector<int> position(static_cast<size_t>(dim()), -1);
  std::vector<std::string> labels;
  for (size_t p = 0; p < indices.size(); ++p) {
    position[static_cast<size_t>(indices[p])] = static_cast<int>(p);
    labels.push_back(label(indices[p]));
  }
  Constants constants;
  for (size_t a = 0; a < indices.size(); ++a) {
    for (size_t b = a + 1; b < indices.size(); ++b) {
      QVector v = basis_bracket(indices[a], indices[b]);
      QVector sub = QVector::Constant(static_cast<Eigen::Index>(indices.size()), Rational(0));
      for (int k = 0; k < dim(); ++k) {
        if (v(k).is_zero()) continue;
        if (position[static_cast<size_t>(k)] < 0)
          throw std::invalid_argument("coordinate_restriction: subspace is not bracket-closed");
        sub(position[static_cast<size_t>(k)]) = v(k);
      }
      if (!is_zero<Rational>(sub)) constants.emplace(std::make_pair(static_cast<int>(a), static_cast<int>(b)), sub);
    }
  }
  return unchecked(std::move(labels), std::move(constants));
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient() != alg.dim()) throw std::invalid_argument("is_subalgebra: ambient mismatch");
  for (Eigen::Index a = 0; a < s.dim(); ++a)
    for (Eigen::Index b = a + 1; b < s.dim(); ++b)
      if (!s.contains(alg.bracket(s.basis_vector(a), s.basis_vector(b)))) return false;
  return true;
}

Subspace lie_generate(const LieAlgebra& alg, const Subspace& gens) {
  if (gens.ambient() != alg.dim()) throw std::invalid_argument("lie_generate: ambient mismatch");
  Subspace span = gens;
  for (;;) {
    std::vector<QVector> vectors;
    for (Eigen::Index a = 0; a < span.dim(); ++a) vectors.push_back(span.basis_vector(a));
    Eigen::Index before = span.dim();
    for (Eigen::Index a = 0; a < before; ++a)
      for (Eigen::Index b = a + 1; b < before; ++b)
        span = span.extend(alg.bracket(vectors[static_cast<size_t>(a)], vectors[static_cast<size_t>(b)]));
    if (span.dim() == before) return span;
  }
}

namespace {

// Stacks the conditions "reduce([y, s_a]) = 0" (or "[y, s_a] = 0") as rows of
// a matrix acting on y and returns the kernel.
Subspace bracket_condition_kernel(const LieAlgebra& alg, const Subspace& s, bool modulo_s) {
  int d = alg.dim();
  QMatrix stacked(static_cast<Eigen::Index>(s.dim()) * d, d);
  Eigen::Index row = 0;
  for (Eigen::Index a = 0; a < s.dim(); ++a) {
    QVector sa = s.basis_vector(a);
    for (int j = 0; j < d; ++j) {
      QVector col = alg.bracket(alg.basis_vector(j), sa);
      if (modulo_s) col = s.reduce(col);
      for (int r = 0; r < d; ++r) stacked(row + r, j) = col(r);
    }
    row += d;
  }
  return Subspace::span_of_rows(kernel(std::move(stacked)));
}

}  // namespace

Subspace normalizer(const LieAlgebra& alg, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw std::invalid_argument("normalizer: input is not a subalgebra");
  return bracket_condition_kernel(alg, s, /*modulo_s=*/true);
}

Subspace centralizer(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient() != alg.dim()) throw std::invalid_argument("centralizer: ambient mismatch");
  if (s.dim() == 0) return Subspace::full(alg.dim());
  return bracket_condition_kernel(alg, s, /*modulo_s=*/false);
}

Subspace derived_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  std::vector<QVector> brackets;
  for (Eigen::Index a = 0; a < s.dim(); ++a)
    for (Eigen::Index b = a + 1; b < s.dim(); ++b)
      brackets.push_back(alg.bracket(s.basis_vector(a), s.basis_vector(b)));
  return Subspace::span_of(brackets, alg.dim());
}

std::optional<int> nilpotency_class(const LieAlgebra& alg) {
  Subspace term = Subspace::full(alg.dim());
  int steps = 0;
  for (;;) {
    if (term.dim() == 0) return steps;
    std::vector<QVector> next;
    for (int i = 0; i < alg.dim(); ++i)
      for (Eigen::Index b = 0; b < term.dim(); ++b)
        next.push_back(alg.bracket(alg.basis_vector(i), term.basis_vector(b)));
    Subspace next_term = Subspace::span_of(next, alg.dim());
    if (next_term.dim() == term.dim()) return std::nullopt;  // stabilized above zero
    term = next_term;
    ++steps;
  }
}

}  // namespace jalg
