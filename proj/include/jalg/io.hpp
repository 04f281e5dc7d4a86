#ifndef JALG_IO_HPP
#define JALG_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "jalg/jalgebra.hpp"

namespace jalg {

/// Parse failure with a 1-based line number for diagnostics.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Algebra text format:
///   algebra <name>
///   dim <d>
///   basis <label...>
///   bracket <i> <j> = <coef>*<k> [+ <coef>*<k>...]   (1-based, i < j)
///   J <i> = <coef>*<k> [+ ...]
///   lambda = <coef>*<k> [+ ...]
///   nilradical = <label...>
///   end
/// Omitted bracket pairs are zero; rationals are written p/q or p. The
/// printed form of a parsed file is byte-identical to the canonical emission.
NormalJAlgebra parse_algebra(std::istream& in);
std::string print_algebra(const NormalJAlgebra& a);

/// Subspace text format:
///   subspace <name> in <algebra-name>
///   vector = <coef>*<label> [+ ...]
///   end
Subspace parse_subspace(std::istream& in, const NormalJAlgebra& alg, std::string* name_out = nullptr);
std::string print_subspace(const Subspace& s, const NormalJAlgebra& alg, const std::string& name);

struct NamedPoint {
  std::string name;
  GVector coords;
};

/// Point text format (one or more blocks):
///   point <name> dim <N>
///   z <k> = <re> <im>
///   end
std::vector<NamedPoint> parse_points(std::istream& in);
std::string print_point(const NamedPoint& p);

}  // namespace jalg

#endif
