#ifndef JALG_POLY_HPP
#define JALG_POLY_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jalg/dense.hpp"

namespace jalg {

/// Sparse multivariate polynomial over the Gaussian rationals. Zero
/// coefficients are never stored; the monomial map is ordered, so printing
/// and equality are canonical.
class Poly {
public:
  using Monomial = std::vector<unsigned>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, GaussianRational c) {
    Poly p(nvars);
    p.add_term(Monomial(static_cast<size_t>(nvars), 0), std::move(c));
    return p;
  }

  static Poly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("Poly: variable index out of range");
    Poly p(nvars);
    Monomial m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(index)] = 1;
    p.add_term(std::move(m), GaussianRational(1));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  int degree() const {
    int deg = -1;
    for (const auto& [mono, coeff] : terms_) {
      int d = 0;
      for (unsigned e : mono) d += static_cast<int>(e);
      if (d > deg) deg = d;
    }
    return deg;  // -1 for the zero polynomial
  }

  void add_term(Monomial mono, GaussianRational coeff) {
    if (static_cast<int>(mono.size()) != nvars_) throw std::invalid_argument("Poly: monomial arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(std::move(mono), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GaussianRational coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out = a;
    for (const auto& [mono, coeff] : b.terms_) out.add_term(mono, coeff);
    return out;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out = a;
    for (const auto& [mono, coeff] : b.terms_) out.add_term(mono, -coeff);
    return out;
  }

  Poly operator-() const {
    Poly out(nvars_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma.size());
        for (size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(const GaussianRational& c, const Poly& p) {
    Poly out(p.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : p.terms_) out.terms_.emplace(mono, c * coeff);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  GaussianRational eval(const GVector& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly: evaluation arity mismatch");
    GaussianRational acc(0);
    for (const auto& [mono, coeff] : terms_) {
      GaussianRational term = coeff;
      for (size_t k = 0; k < mono.size(); ++k)
        for (unsigned e = 0; e < mono[k]; ++e) term *= point(static_cast<Eigen::Index>(k));
      acc += term;
    }
    return acc;
  }

  /// Substitutes args[k] for variable k. All args must share an arity, which
  /// becomes the arity of the result.
  Poly substitute(const std::vector<Poly>& args) const {
    if (static_cast<int>(args.size()) != nvars_) throw std::invalid_argument("Poly: substitution arity mismatch");
    int out_vars = args.empty() ? 0 : args.front().nvars();
    for (const Poly& a : args)
      if (a.nvars() != out_vars) throw std::invalid_argument("Poly: substitution argument arity mismatch");
    Poly acc(out_vars);
    for (const auto& [mono, coeff] : terms_) {
      Poly term = Poly::constant(out_vars, coeff);
      for (size_t k = 0; k < mono.size(); ++k)
        for (unsigned e = 0; e < mono[k]; ++e) term = term * args[k];
      acc = acc + term;
    }
    return acc;
  }

  std::string str(const std::vector<std::string>& var_names) const {
    if (static_cast<int>(var_names.size()) != nvars_) throw std::invalid_argument("Poly: name list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff.str() << ")";
      for (size_t k = 0; k < mono.size(); ++k) {
        if (mono[k] == 0) continue;
        os << "*" << var_names[k];
        if (mono[k] > 1) os << "^" << mono[k];
      }
    }
    return os.str();
  }

private:
  void check_arity(const Poly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  }

  int nvars_;
  std::map<Monomial, GaussianRational> terms_;
};

/// Polynomial self-map: one coordinate polynomial per target dimension, all
/// in the source variables.
struct PolyMap {
  int source_dim = 0;
  std::vector<Poly> coords;

  PolyMap() = default;
  PolyMap(int source, std::vector<Poly> comps) : source_dim(source), coords(std::move(comps)) {
    for (const Poly& p : coords)
      if (p.nvars() != source_dim) throw std::invalid_argument("PolyMap: coordinate arity mismatch");
  }

  int target_dim() const { return static_cast<int>(coords.size()); }

  static PolyMap identity(int dim) {
    std::vector<Poly> comps;
    comps.reserve(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) comps.push_back(Poly::variable(dim, k));
    return PolyMap(dim, std::move(comps));
  }

  GVector eval(const GVector& point) const {
    GVector out(target_dim());
    for (int k = 0; k < target_dim(); ++k) out(k) = coords[static_cast<size_t>(k)].eval(point);
    return out;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.source_dim == b.source_dim && a.coords == b.coords;
  }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }
};

/// Exact symbolic composition outer(inner(x)).
inline PolyMap poly_compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.source_dim != inner.target_dim())
    throw std::invalid_argument("poly_compose: dimension mismatch");
  std::vector<Poly> comps;
  comps.reserve(outer.coords.size());
  for (const Poly& p : outer.coords) comps.push_back(p.substitute(inner.coords));
  return PolyMap(inner.source_dim, std::move(comps));
}

// ---------------------------------------------------------------------------
// Univariate helpers (arity-1 Poly), used for Bezout identities.

inline int univariate_degree(const Poly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("univariate: arity != 1");
  return p.degree();
}

inline GaussianRational univariate_leading(const Poly& p) {
  int d = univariate_degree(p);
  if (d < 0) return GaussianRational(0);
  return p.coeff({static_cast<unsigned>(d)});
}

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> univariate_divmod(Poly a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("univariate_divmod: division by zero polynomial");
  Poly q(1);
  GaussianRational lead_b = univariate_leading(b);
  int deg_b = univariate_degree(b);
  while (!a.is_zero() && univariate_degree(a) >= deg_b) {
    int shift = univariate_degree(a) - deg_b;
    GaussianRational c = univariate_leading(a) / lead_b;
    Poly t(1);
    t.add_term({static_cast<unsigned>(shift)}, c);
    q = q + t;
    a = a - t * b;
  }
  return {q, a};
}

/// Extended Euclid: returns (g, s, t) with s*f + t*g0 = g, g monic when
/// nonzero. For coprime inputs (g == 1) the pair is the degree-minimal one:
/// deg s < deg g0, deg t < deg f.
inline std::tuple<Poly, Poly, Poly> univariate_extended_gcd(const Poly& f, const Poly& g0) {
  Poly r0 = f, r1 = g0;
  Poly s0 = Poly::constant(1, GaussianRational(1)), s1(1);
  Poly t0(1), t1 = Poly::constant(1, GaussianRational(1));
  while (!r1.is_zero()) {
    auto [q, r] = univariate_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    GaussianRational inv = GaussianRational(1) / univariate_leading(r0);
    r0 = inv * r0;
    s0 = inv * s0;
    t0 = inv * t0;
  }
  return {r0, s0, t0};
}

}  // namespace jalg

#endif
