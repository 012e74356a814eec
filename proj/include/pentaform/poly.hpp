#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pentaform/integer.hpp"

namespace pentaform {

/// Sparse multivariate polynomial with integer coefficients.
class Polynomial {
 public:
  /// variable name -> positive exponent
  using Monomial = std::map<std::string, int>;

  Polynomial() = default;
  static Polynomial constant(Int c);
  static Polynomial variable(const std::string& name);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial pow(int e) const;

  /// Replace each named variable by the given polynomial, simultaneously.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;

  int degree() const;
  std::vector<std::string> variables() const;
  const std::map<Monomial, Int>& terms() const { return terms_; }
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, Int c);
  std::map<Monomial, Int> terms_;
};

struct FunctionDef {
  std::vector<std::string> params;
  std::string body;
};

using Definitions = std::map<std::string, FunctionDef>;

/// Parses +, -, *, ^ (non-negative integer exponents), parentheses, integer
/// literals, variables and calls to defined functions. A number or closing
/// parenthesis directly followed by a factor multiplies implicitly.
Polynomial parse_polynomial(const std::string& text, const Definitions& defs = {});

/// lhs = rhs after applying affine substitutions (derived variable -> affine
/// expression in the base variables).
struct PolyIdentity {
  std::string label;
  std::string group;
  Definitions definitions;
  std::vector<std::pair<std::string, std::string>> substitutions;
  std::string lhs;
  std::string rhs;
};

/// Exact symbolic check. Throws InputError for malformed substitutions.
bool expand_identity(const PolyIdentity& id);

/// One variant per coefficient literal (exponents excluded), each literal
/// increased by one.
std::vector<PolyIdentity> coefficient_mutations(const PolyIdentity& id);

}  // namespace pentaform
