#ifndef JALG_LINALG_HPP
#define JALG_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "jalg/dense.hpp"

namespace jalg {

/// Reduced row-echelon form, computed in place over the exact entry field.
/// Pivots are the leftmost nonzero column of the topmost unreduced row; no
/// magnitude-based pivoting is wanted since arithmetic is exact. Returns the
/// pivot column of each pivot row, in order.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    m.row(row).swap(m.row(pivot_row));
    Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Reduced basis of the right kernel, one solution per matrix row of the
/// result. dim = cols - rank. The basis is canonical: it is the RREF of the
/// standard free-variable solutions.
template <typename Scalar>
DenseMatrix<Scalar> kernel(DenseMatrix<Scalar> m) {
  Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  Eigen::Index dim = n - static_cast<Eigen::Index>(pivots.size());
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Constant(dim, n, Scalar(0));
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(out, free_col) = Scalar(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis(out, pivots[pr]) = -m(static_cast<Eigen::Index>(pr), free_col);
    ++out;
  }
  rref_in_place(basis);
  return basis;
}

/// Determinant by exact Gaussian elimination.
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  Scalar det = Scalar(1);
  Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) return Scalar(0);
    if (pivot_row != col) {
      m.row(col).swap(m.row(pivot_row));
      det = -det;
    }
    det = det * m(col, col);
    Scalar inv = Scalar(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      Scalar f = m(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
    }
  }
  return det;
}

/// A linear subspace of a fixed coordinate space, held as the RREF of any
/// spanning set. Two spans of the same subspace produce identical objects.
template <typename Scalar>
class SubspaceOf {
public:
  SubspaceOf() = default;
  explicit SubspaceOf(Eigen::Index ambient) : basis_(0, ambient) {}

  /// Canonicalizes the given spanning rows.
  static SubspaceOf span_of_rows(DenseMatrix<Scalar> rows) {
    std::vector<Eigen::Index> pivots = rref_in_place(rows);
    SubspaceOf s;
    s.basis_ = rows.topRows(static_cast<Eigen::Index>(pivots.size()));
    return s;
  }

  static SubspaceOf span_of(const std::vector<DenseVector<Scalar>>& vectors, Eigen::Index ambient) {
    DenseMatrix<Scalar> rows(static_cast<Eigen::Index>(vectors.size()), ambient);
    for (size_t k = 0; k < vectors.size(); ++k) {
      if (vectors[k].size() != ambient) throw std::invalid_argument("Subspace: ambient dimension mismatch");
      rows.row(static_cast<Eigen::Index>(k)) = vectors[k].transpose();
    }
    return span_of_rows(std::move(rows));
  }

  static SubspaceOf zero(Eigen::Index ambient) { return SubspaceOf(ambient); }

  static SubspaceOf full(Eigen::Index ambient) {
    DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(ambient, ambient);
    return span_of_rows(id);
  }

  Eigen::Index dim() const { return basis_.rows(); }
  Eigen::Index ambient() const { return basis_.cols(); }
  const DenseMatrix<Scalar>& basis() const { return basis_; }
  DenseVector<Scalar> basis_vector(Eigen::Index k) const { return basis_.row(k).transpose(); }

  bool contains(const DenseVector<Scalar>& v) const { return is_zero<Scalar>(reduce(v)); }

  bool contains(const SubspaceOf& other) const {
    for (Eigen::Index r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  /// Remainder of v after eliminating this subspace's pivot coordinates;
  /// zero iff v lies in the subspace.
  DenseVector<Scalar> reduce(DenseVector<Scalar> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
      Eigen::Index p = pivot_col(r);
      if (v(p) == Scalar(0)) continue;
      Scalar f = v(p);
      for (Eigen::Index c = 0; c < v.size(); ++c) v(c) = v(c) - f * basis_(r, c);
    }
    return v;
  }

  SubspaceOf sum(const SubspaceOf& other) const {
    check_same_ambient(other);
    DenseMatrix<Scalar> rows(dim() + other.dim(), ambient());
    rows.topRows(dim()) = basis_;
    rows.bottomRows(other.dim()) = other.basis_;
    return span_of_rows(std::move(rows));
  }

  SubspaceOf extend(const DenseVector<Scalar>& v) const {
    DenseMatrix<Scalar> rows(dim() + 1, ambient());
    rows.topRows(dim()) = basis_;
    rows.row(dim()) = v.transpose();
    return span_of_rows(std::move(rows));
  }

  /// Intersection via the kernel of [A^T | -B^T]: a combination of rows of A
  /// equal to a combination of rows of B is an intersection vector.
  SubspaceOf intersect(const SubspaceOf& other) const {
    check_same_ambient(other);
    Eigen::Index ra = dim(), rb = other.dim();
    if (ra == 0 || rb == 0) return zero(ambient());
    DenseMatrix<Scalar> stacked(ambient(), ra + rb);
    stacked.leftCols(ra) = basis_.transpose();
    stacked.rightCols(rb) = -other.basis_.transpose();
    DenseMatrix<Scalar> combos = kernel(stacked);
    DenseMatrix<Scalar> rows(combos.rows(), ambient());
    for (Eigen::Index r = 0; r < combos.rows(); ++r)
      rows.row(r) = combos.row(r).head(ra) * basis_;
    return span_of_rows(std::move(rows));
  }

  /// Image under a linear map given by its matrix (columns act on coordinates).
  SubspaceOf image_under(const DenseMatrix<Scalar>& map) const {
    if (map.cols() != ambient()) throw std::invalid_argument("Subspace: map dimension mismatch");
    DenseMatrix<Scalar> rows = basis_ * map.transpose();
    return span_of_rows(std::move(rows));
  }

  friend bool operator==(const SubspaceOf& a, const SubspaceOf& b) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim()) return false;
    for (Eigen::Index r = 0; r < a.basis_.rows(); ++r)
      for (Eigen::Index c = 0; c < a.basis_.cols(); ++c)
        if (a.basis_(r, c) != b.basis_(r, c)) return false;
    return true;
  }
  friend bool operator!=(const SubspaceOf& a, const SubspaceOf& b) { return !(a == b); }

private:
  Eigen::Index pivot_col(Eigen::Index row) const {
    for (Eigen::Index c = 0; c < basis_.cols(); ++c)
      if (basis_(row, c) != Scalar(0)) return c;
    throw std::logic_error("Subspace: zero row in reduced basis");
  }

  void check_same_ambient(const SubspaceOf& other) const {
    if (ambient() != other.ambient()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  DenseMatrix<Scalar> basis_;  // RREF rows, each a basis vector
};

using Subspace = SubspaceOf<Rational>;
using GaussianSubspace = SubspaceOf<GaussianRational>;

}  // namespace jalg

#endif
