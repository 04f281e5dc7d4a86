#ifndef JALG_AFFINE_HPP
#define JALG_AFFINE_HPP

#include <stdexcept>

#include "jalg/dense.hpp"

namespace jalg {

/// Affine holomorphic vector field p -> linear*p + constant on C^N.
struct AffineField {
  GMatrix linear;
  GVector constant;

  AffineField() = default;
  AffineField(GMatrix lin, GVector c) : linear(std::move(lin)), constant(std::move(c)) {
    if (linear.rows() != linear.cols() || linear.rows() != constant.size())
      throw std::invalid_argument("AffineField: shape mismatch");
  }

  static AffineField zero(Eigen::Index n) {
    return AffineField(GMatrix::Constant(n, n, GaussianRational(0)),
                       GVector::Constant(n, GaussianRational(0)));
  }

  Eigen::Index dim() const { return constant.size(); }

  friend AffineField operator+(const AffineField& a, const AffineField& b) {
    a.check_dim(b.dim());
    return AffineField(a.linear + b.linear, a.constant + b.constant);
  }
  friend AffineField operator-(const AffineField& a, const AffineField& b) {
    a.check_dim(b.dim());
    return AffineField(a.linear - b.linear, a.constant - b.constant);
  }
  friend AffineField operator*(const GaussianRational& c, const AffineField& f) {
    return AffineField(f.linear * c, f.constant * c);
  }
  friend bool operator==(const AffineField& a, const AffineField& b) {
    return a.dim() == b.dim() && is_zero<GaussianRational>(GMatrix(a.linear - b.linear)) &&
           is_zero<GaussianRational>(GVector(a.constant - b.constant));
  }
  friend bool operator!=(const AffineField& a, const AffineField& b) { return !(a == b); }

  void check_dim(Eigen::Index n) const {
    if (dim() != n) throw std::invalid_argument("AffineField: dimension mismatch");
  }
};

/// Affine transformation p -> linear*p + translation.
struct AffineMap {
  GMatrix linear;
  GVector translation;

  AffineMap() = default;
  AffineMap(GMatrix lin, GVector t) : linear(std::move(lin)), translation(std::move(t)) {
    if (linear.rows() != linear.cols() || linear.rows() != translation.size())
      throw std::invalid_argument("AffineMap: shape mismatch");
  }

  static AffineMap identity(Eigen::Index n) {
    return AffineMap(GMatrix::Identity(n, n), GVector::Constant(n, GaussianRational(0)));
  }

  Eigen::Index dim() const { return translation.size(); }

  GVector apply(const GVector& p) const {
    if (p.size() != dim()) throw std::invalid_argument("AffineMap: dimension mismatch");
    return linear * p + translation;
  }

  /// Composition a.after(b) : p -> a(b(p)).
  AffineMap after(const AffineMap& b) const {
    if (dim() != b.dim()) throw std::invalid_argument("AffineMap: dimension mismatch");
    return AffineMap(linear * b.linear, linear * b.translation + translation);
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.dim() == b.dim() && is_zero<GaussianRational>(GMatrix(a.linear - b.linear)) &&
           is_zero<GaussianRational>(GVector(a.translation - b.translation));
  }
  friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }
};

inline GVector field_eval(const AffineField& f, const GVector& p) {
  if (p.size() != f.dim()) throw std::invalid_argument("field_eval: dimension mismatch");
  return f.linear * p + f.constant;
}

/// Vector-field bracket of affine fields. For f = Az+a, g = Bz+b the bracket
/// evaluates to (BA-AB)z + (Ba-Ab), matching the directional-derivative
/// definition [f,g] = (Dg)f - (Df)g.
inline AffineField field_bracket(const AffineField& f, const AffineField& g) {
  f.check_dim(g.dim());
  return AffineField(g.linear * f.linear - f.linear * g.linear,
                     g.linear * f.constant - f.linear * g.constant);
}

inline Eigen::Index nilpotency_index(const GMatrix& m) {
  // Smallest k with m^k = 0, or -1 if none up to the dimension bound.
  GMatrix power = GMatrix::Identity(m.rows(), m.cols());
  for (Eigen::Index k = 0; k <= m.rows(); ++k) {
    if (is_zero<GaussianRational>(power)) return k;
    power = GMatrix(power * m);
  }
  return -1;
}

/// Exact time-t flow of an affine field with nilpotent linear part L:
///   p -> exp(tL) p + (sum_k t^{k+1} L^k / (k+1)!) v.
/// Polynomial in t; flow(0) = id and flow(s) after flow(t) = flow(s+t).
inline AffineMap exp_nilpotent_affine(const AffineField& field, const GaussianRational& t) {
  Eigen::Index n = field.dim();
  Eigen::Index nil = nilpotency_index(field.linear);
  if (nil < 0) throw std::domain_error("exp_nilpotent_affine: linear part is not nilpotent");

  GMatrix exp_part = GMatrix::Constant(n, n, GaussianRational(0));
  GMatrix trans_part = GMatrix::Constant(n, n, GaussianRational(0));
  GMatrix power = GMatrix::Identity(n, n);  // L^k
  GaussianRational t_pow(1);                // t^k
  Rational factorial(1);                    // k!
  for (Eigen::Index k = 0; k < std::max<Eigen::Index>(nil, 1); ++k) {
    GaussianRational coeff = t_pow * GaussianRational(Rational(1) / factorial);
    exp_part += power * coeff;
    GaussianRational trans_coeff =
        t_pow * t * GaussianRational(Rational(1) / (factorial * Rational(static_cast<long>(k) + 1)));
    trans_part += power * trans_coeff;
    power = GMatrix(power * field.linear);
    t_pow *= t;
    factorial *= Rational(static_cast<long>(k) + 1);
  }
  return AffineMap(std::move(exp_part), GVector(trans_part * field.constant));
}

}  // namespace jalg

#endif
