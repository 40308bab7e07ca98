#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mslat {

/// x_1^{e_1} x_2^{e_2} ... with variables numbered from 1. Trailing zero
/// exponents are dropped, so equal monomials compare equal regardless of how
/// many variables they were written with.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  /// Exponent of x_{var}, var >= 1.
  unsigned exponent(std::size_t var) const;
  /// Exponents of x_1..x_vars, padded with zeros.
  std::vector<unsigned> exponents(std::size_t vars) const;
  const std::vector<unsigned>& raw() const { return exps_; }
  std::size_t variables() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial times(std::size_t var, unsigned power = 1) const;
  /// m / x_var; the exponent must be positive.
  Monomial divided(std::size_t var) const;
  Monomial operator*(const Monomial& other) const;

  /// "1", "x1", "x1^2x3".
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree first, then the lex order in which x_1^k comes first: at the
  /// first variable where they differ, the larger exponent is smaller.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

using MonomialSet = std::set<Monomial>;

/// Parses "1", "x1^2x3" and the shorthand "x", "y", "z", "w" for x1..x4.
/// Throws mslat::Error on anything else.
Monomial parse_monomial(std::string_view text);

/// One comma-separated exponent vector per line; blank lines and lines
/// starting with '#' are skipped.
MonomialSet parse_monomial_lines(std::string_view text);

/// All exponent vectors of the given degree over `vars` variables, in the
/// order of Monomial::operator<=> (x_1^degree first).
std::vector<Monomial> monomials_of_degree(std::size_t vars, unsigned degree);

}  // namespace mslat
