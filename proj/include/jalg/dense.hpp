#ifndef JALG_DENSE_HPP
#define JALG_DENSE_HPP

#include <Eigen/Dense>

#include "jalg/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<jalg::Rational> : GenericNumTraits<jalg::Rational> {
  typedef jalg::Rational Real;
  typedef jalg::Rational NonInteger;
  typedef jalg::Rational Nested;
  typedef jalg::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return jalg::Rational(0); }
  static inline Real dummy_precision() { return jalg::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<jalg::GaussianRational> : GenericNumTraits<jalg::GaussianRational> {
  typedef jalg::Rational Real;
  typedef jalg::GaussianRational NonInteger;
  typedef jalg::GaussianRational Nested;
  typedef jalg::GaussianRational Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 80,
    MulCost = 160
  };
  static inline Real epsilon() { return jalg::Rational(0); }
  static inline Real dummy_precision() { return jalg::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace jalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = DenseMatrix<Rational>;
using QVector = DenseVector<Rational>;
using GMatrix = DenseMatrix<GaussianRational>;
using GVector = DenseVector<GaussianRational>;

inline GMatrix to_gaussian(const QMatrix& m) {
  GMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c));
  return out;
}

inline GVector to_gaussian(const QVector& v) {
  GVector out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = GaussianRational(v(k));
  return out;
}

template <typename Scalar>
bool is_zero(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
bool is_zero(const DenseVector<Scalar>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v(k) != Scalar(0)) return false;
  return true;
}

}  // namespace jalg

#endif
