#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace hkl::poly {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: higher total degree wins, ties go
/// to the lexicographically larger exponent vector. This is the canonical
/// serialization order.
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

unsigned total_degree(const Exponents& e);

/// Multivariate polynomial with exact rational coefficients over an ordered,
/// named variable list. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents e, const Rational& c = 1);

  /// Parses `text` over the given variable list. Accepts + - * / ^ and
  /// parentheses; division only by nonzero constants.
  static MultiPoly parse(std::string_view text, std::vector<std::string> variables);
  /// Same, with the variable list taken from identifiers in order of first appearance.
  static MultiPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::size_t variable_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// True iff every term has degree `degree` in the selected variables.
  bool is_homogeneous_in(std::span<const std::size_t> vars, unsigned degree) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned exponent) const;

  /// Replaces `var` by `expr` (same variable list) and expands fully.
  MultiPoly substitute(std::string_view var, const MultiPoly& expr) const;
  MultiPoly derivative(std::string_view var) const;
  /// Sets one variable to a value; the variable list is unchanged.
  MultiPoly evaluate_at(std::string_view var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Coefficient of var^power, viewed as a polynomial in the remaining variables.
  MultiPoly coefficient_of(std::string_view var, unsigned power) const;
  /// Re-expresses the polynomial over a different variable list; every variable
  /// actually used must be present in `variables`.
  MultiPoly with_variables(std::vector<std::string> variables) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_same_variables(const MultiPoly& other, const char* op) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

enum class ArithOp { Add, Sub, Mul };
MultiPoly arith(const MultiPoly& p, const MultiPoly& q, ArithOp op);

/// Exact multivariate division in grlex order; nullopt when `d` does not divide `p`.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

/// Union of variable lists, keeping the order of `a` and appending new names from `b`.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// descending lexicographic order (x0^d first).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace hkl::poly
