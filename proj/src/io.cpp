#include "jalg/io.hpp"

#include <istream>
#include <sstream>

namespace jalg {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next nonempty line, tokenized on whitespace.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

[[noreturn]] void fail(const LineReader& reader, const std::string& message) {
  throw ParseError(reader.line_no, message);
}

// Parses "<coef>*<target> [+ <coef>*<target>...]" or "0" starting at
// tokens[from]. Targets are resolved by the callback (index or label).
template <typename Resolve>
QVector parse_combination(const LineReader& reader, const std::vector<std::string>& tokens, size_t from,
                          int dim, Resolve resolve) {
  QVector v = QVector::Constant(dim, Rational(0));
  if (from >= tokens.size()) fail(reader, "expected a linear combination");
  if (tokens.size() == from + 1 && tokens[from] == "0") return v;
  bool expect_term = true;
  for (size_t t = from; t < tokens.size(); ++t) {
    if (!expect_term) {
      if (tokens[t] != "+") fail(reader, "expected '+' between terms");
      expect_term = true;
      continue;
    }
    size_t star = tokens[t].find('*');
    if (star == std::string::npos) fail(reader, "expected <coef>*<target> in '" + tokens[t] + "'");
    Rational coef;
    try {
      coef = Rational::parse(tokens[t].substr(0, star));
    } catch (const std::exception& e) {
      fail(reader, e.what());
    }
    int idx = resolve(tokens[t].substr(star + 1));
    if (idx < 0 || idx >= dim) fail(reader, "unknown target in '" + tokens[t] + "'");
    v(idx) += coef;
    expect_term = false;
  }
  if (expect_term) fail(reader, "dangling '+'");
  return v;
}

std::string combination_string(const QVector& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    if (!first) os << " + ";
    os << v(k) << "*" << names[static_cast<size_t>(k)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int parse_index(const LineReader& reader, const std::string& tok, int dim) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(reader, "expected a basis index, got '" + tok + "'");
  int idx = std::stoi(tok);
  if (idx < 1 || idx > dim) fail(reader, "basis index " + tok + " out of range");
  return idx - 1;
}

}  // namespace

NormalJAlgebra parse_algebra(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;

  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "algebra") fail(reader, "expected 'algebra <name>'");
  std::string name = tok[1];

  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "dim") fail(reader, "expected 'dim <d>'");
  int dim = 0;
  try {
    dim = std::stoi(tok[1]);
  } catch (const std::exception&) {
    fail(reader, "bad dimension '" + tok[1] + "'");
  }
  if (dim <= 0) fail(reader, "dimension must be positive");

  if (!reader.next(tok) || tok.empty() || tok[0] != "basis") fail(reader, "expected 'basis <labels...>'");
  std::vector<std::string> labels(tok.begin() + 1, tok.end());
  if (static_cast<int>(labels.size()) != dim) fail(reader, "basis label count does not match dim");

  auto label_index = [&labels](const std::string& s) {
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == s) return static_cast<int>(k);
    return -1;
  };
  auto index_resolver = [&reader, dim](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return -1;
    int idx = std::stoi(s);
    (void)reader;
    return (idx >= 1 && idx <= dim) ? idx - 1 : -1;
  };

  LieAlgebra::Constants constants;
  QMatrix J = QMatrix::Constant(dim, dim, Rational(0));
  std::vector<bool> j_seen(static_cast<size_t>(dim), false);
  QVector lambda = QVector::Constant(dim, Rational(0));
  bool lambda_seen = false;
  std::vector<int> nilradical;
  bool nilradical_seen = false;
  bool ended = false;

  while (reader.next(tok)) {
    if (tok[0] == "end") {
      if (tok.size() != 1) fail(reader, "unexpected tokens after 'end'");
      ended = true;
      break;
    }
    if (tok[0] == "bracket") {
      if (tok.size() < 5 || tok[3] != "=") fail(reader, "expected 'bracket <i> <j> = ...'");
      int i = parse_index(reader, tok[1], dim);
      int j = parse_index(reader, tok[2], dim);
      if (i >= j) fail(reader, "bracket rows must satisfy i < j");
      if (constants.count({i, j})) fail(reader, "duplicate bracket line");
      QVector v = parse_combination(reader, tok, 4, dim, index_resolver);
      if (!is_zero<Rational>(v)) constants[{i, j}] = v;
      continue;
    }
    if (tok[0] == "J") {
      if (tok.size() < 4 || tok[2] != "=") fail(reader, "expected 'J <i> = ...'");
      int i = parse_index(reader, tok[1], dim);
      if (j_seen[static_cast<size_t>(i)]) fail(reader, "duplicate J line");
      j_seen[static_cast<size_t>(i)] = true;
      J.col(i) = parse_combination(reader, tok, 3, dim, index_resolver);
      continue;
    }
    if (tok[0] == "lambda") {
      if (tok.size() < 3 || tok[1] != "=") fail(reader, "expected 'lambda = ...'");
      if (lambda_seen) fail(reader, "duplicate lambda line");
      lambda_seen = true;
      lambda = parse_combination(reader, tok, 2, dim, index_resolver);
      continue;
    }
    if (tok[0] == "nilradical") {
      if (tok.size() < 2 || tok[1] != "=") fail(reader, "expected 'nilradical = <labels...>'");
      if (nilradical_seen) fail(reader, "duplicate nilradical line");
      nilradical_seen = true;
      for (size_t t = 2; t < tok.size(); ++t) {
        int idx = label_index(tok[t]);
        if (idx < 0) fail(reader, "unknown label '" + tok[t] + "' in nilradical");
        nilradical.push_back(idx);
      }
      continue;
    }
    fail(reader, "unknown directive '" + tok[0] + "'");
  }
  if (!ended) fail(reader, "missing 'end'");
  if (!lambda_seen) fail(reader, "missing lambda line");
  if (!nilradical_seen) fail(reader, "missing nilradical line");

  NormalJAlgebra a;
  a.alg = LieAlgebra::unchecked(labels, std::move(constants));
  a.J = std::move(J);
  a.lambda = std::move(lambda);
  a.nilradical_indices = std::move(nilradical);
  for (int k = 0; k < dim; ++k) {
    bool in_nil = false;
    for (int idx : a.nilradical_indices) in_nil = in_nil || idx == k;
    if (!in_nil) a.abelian_indices.push_back(k);
  }
  a.name = name;
  DomainKind kind;
  int n;
  a.kind = parse_catalog_spec(name, kind, n) ? kind : DomainKind::custom;
  return a;
}

std::string print_algebra(const NormalJAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << a.name << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const std::string& label : a.alg.labels()) os << " " << label;
  os << "\n";

  std::vector<std::string> index_names;
  for (int k = 1; k <= a.dim(); ++k) index_names.push_back(std::to_string(k));
  for (const auto& [key, value] : a.alg.constants())
    os << "bracket " << key.first + 1 << " " << key.second + 1 << " = " << combination_string(value, index_names)
       << "\n";
  for (int k = 0; k < a.dim(); ++k)
    os << "J " << k + 1 << " = " << combination_string(a.J.col(k), index_names) << "\n";
  os << "lambda = " << combination_string(a.lambda, index_names) << "\n";
  os << "nilradical =";
  for (int idx : a.nilradical_indices) os << " " << a.alg.label(idx);
  os << "\n";
  os << "end\n";
  return os.str();
}

Subspace parse_subspace(std::istream& in, const NormalJAlgebra& alg, std::string* name_out) {
  LineReader reader{in};
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 4 || tok[0] != "subspace" || tok[2] != "in")
    fail(reader, "expected 'subspace <name> in <algebra>'");
  if (tok[3] != alg.name)
    fail(reader, "subspace is declared in algebra '" + tok[3] + "' but '" + alg.name + "' was loaded");
  if (name_out) *name_out = tok[1];

  auto resolver = [&alg](const std::string& s) { return alg.alg.label_index(s); };
  std::vector<QVector> vectors;
  bool ended = false;
  while (reader.next(tok)) {
    if (tok[0] == "end") {
      ended = true;
      break;
    }
    if (tok[0] != "vector" || tok.size() < 3 || tok[1] != "=") fail(reader, "expected 'vector = ...'");
    QVector v = parse_combination(reader, tok, 2, alg.dim(), resolver);
    if (is_zero<Rational>(v)) fail(reader, "zero vector in subspace file");
    vectors.push_back(std::move(v));
  }
  if (!ended) fail(reader, "missing 'end'");
  return Subspace::span_of(vectors, alg.dim());
}

std::string print_subspace(const Subspace& s, const NormalJAlgebra& alg, const std::string& name) {
  std::ostringstream os;
  os << "subspace " << name << " in " << alg.name << "\n";
  for (Eigen::Index r = 0; r < s.dim(); ++r)
    os << "vector = " << combination_string(s.basis_vector(r), alg.alg.labels()) << "\n";
  os << "end\n";
  return os.str();
}

std::vector<NamedPoint> parse_points(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  std::vector<NamedPoint> points;
  while (reader.next(tok)) {
    if (tok.size() != 4 || tok[0] != "point" || tok[2] != "dim") fail(reader, "expected 'point <name> dim <N>'");
    NamedPoint p;
    p.name = tok[1];
    int dim = 0;
    try {
      dim = std::stoi(tok[3]);
    } catch (const std::exception&) {
      fail(reader, "bad point dimension '" + tok[3] + "'");
    }
    if (dim <= 0) fail(reader, "point dimension must be positive");
    p.coords = GVector::Constant(dim, GaussianRational(0));
    std::vector<bool> seen(static_cast<size_t>(dim), false);
    bool ended = false;
    while (reader.next(tok)) {
      if (tok[0] == "end") {
        ended = true;
        break;
      }
      if (tok.size() != 5 || tok[0] != "z" || tok[2] != "=") fail(reader, "expected 'z <k> = <re> <im>'");
      int k = parse_index(reader, tok[1], dim);
      if (seen[static_cast<size_t>(k)]) fail(reader, "duplicate coordinate z " + tok[1]);
      seen[static_cast<size_t>(k)] = true;
      try {
        p.coords(k) = GaussianRational(Rational::parse(tok[3]), Rational::parse(tok[4]));
      } catch (const std::exception& e) {
        fail(reader, e.what());
      }
    }
    if (!ended) fail(reader, "missing 'end'");
    for (int k = 0; k < dim; ++k)
      if (!seen[static_cast<size_t>(k)]) fail(reader, "missing coordinate z " + std::to_string(k + 1));
    points.push_back(std::move(p));
  }
  return points;
}

std::string print_point(const NamedPoint& p) {
  std::ostringstream os;
  os << "point " << p.name << " dim " << p.coords.size() << "\n";
  for (Eigen::Index k = 0; k < p.coords.size(); ++k)
    os << "z " << k + 1 << " = " << p.coords(k).real() << " " << p.coords(k).imag() << "\n";
  os << "end\n";
  return os.str();
}

}  // namespace jalg
