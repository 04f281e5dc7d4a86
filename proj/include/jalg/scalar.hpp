#ifndef JALG_SCALAR_HPP
#define JALG_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace jalg {

/// Exact rational number backed by GMP. Always stored in canonical form
/// (reduced fraction, positive denominator), so equality is plain comparison.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on malformed
  /// input or zero denominator.
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Gaussian rational a + b*i with exact rational parts.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}
  GaussianRational(long n) : re_(n) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  /// Squared modulus |a+bi|^2, an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag_part = im_.str() + "i";
    if (re_.is_zero()) return imag_part;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag_part;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
  Rational re_, im_;
};

// ADL hooks used by Eigen's scalar layer.
inline Rational real(const Rational& r) { return r; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational conj(const Rational& r) { return r; }
inline Rational abs2(const Rational& r) { return r * r; }
inline Rational real(const GaussianRational& g) { return g.real(); }
inline Rational imag(const GaussianRational& g) { return g.imag(); }
inline GaussianRational conj(const GaussianRational& g) { return {g.real(), -g.imag()}; }
inline Rational abs2(const GaussianRational& g) { return g.norm(); }

}  // namespace jalg

#endif
