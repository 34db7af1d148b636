#ifndef RAMIFY_RATIONAL_POLY_HPP
#define RAMIFY_RATIONAL_POLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ramify
{

using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients low to high, no trailing
/// zeros (the zero polynomial has no coefficients).
class UPoly
{
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(Rational c);
  static UPoly monomial(Rational c, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(_c.size()) - 1; }
  bool is_zero() const { return _c.empty(); }
  bool is_constant() const { return _c.size() <= 1; }

  std::vector<Rational> const &coefficients() const { return _c; }
  Rational coefficient(std::size_t k) const { return k < _c.size() ? _c[k] : Rational(0); }
  Rational const &leading() const { return _c.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(Rational const &x) const;

  friend UPoly operator+(UPoly const &a, UPoly const &b);
  friend UPoly operator-(UPoly const &a, UPoly const &b);
  friend UPoly operator*(UPoly const &a, UPoly const &b);
  friend UPoly operator-(UPoly const &a);
  friend bool operator==(UPoly const &a, UPoly const &b) { return a._c == b._c; }

  std::string to_string(char var = 'x') const;

private:
  void normalize();
  std::vector<Rational> _c;
};

/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UPoly, UPoly> divmod(UPoly const &a, UPoly const &b);

/// Throws InvalidArgument unless b divides a.
UPoly exact_divide(UPoly const &a, UPoly const &b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly const &a, UPoly const &b);

/// a / gcd(a, a').
UPoly squarefree_part(UPoly const &a);

/// Determinant of a square matrix over Q[x] by fraction-free elimination.
UPoly determinant(std::vector<std::vector<UPoly>> matrix);

/// Sparse bivariate polynomial over Q. Terms are keyed by (x-power, y-power).
class PlanePolynomial
{
public:
  using Monomial = std::pair<unsigned, unsigned>;

  PlanePolynomial() = default;
  static PlanePolynomial constant(Rational c);
  static PlanePolynomial x();
  static PlanePolynomial y();

  std::map<Monomial, Rational> const &terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }

  unsigned x_degree() const;
  unsigned y_degree() const;
  unsigned total_degree() const;

  /// Coefficient of y^k as a polynomial in x, k = 0..y_degree().
  std::vector<UPoly> y_coefficients() const;

  PlanePolynomial derivative_x() const;
  PlanePolynomial derivative_y() const;

  /// p(x + lambda * y, y).
  PlanePolynomial sheared(Rational const &lambda) const;

  PlanePolynomial pow(unsigned exponent) const;

  friend PlanePolynomial operator+(PlanePolynomial const &a, PlanePolynomial const &b);
  friend PlanePolynomial operator-(PlanePolynomial const &a, PlanePolynomial const &b);
  friend PlanePolynomial operator*(PlanePolynomial const &a, PlanePolynomial const &b);
  friend PlanePolynomial operator-(PlanePolynomial const &a);
  friend bool operator==(PlanePolynomial const &a, PlanePolynomial const &b)
  { return a._terms == b._terms; }

  /// Canonical text, parseable by parse_poly: terms by descending y-power,
  /// then descending x-power.
  std::string to_string() const;

private:
  void add_term(Monomial m, Rational const &c);
  std::map<Monomial, Rational> _terms;
};

/// Resultant with respect to y, computed exactly.
UPoly resultant_y(PlanePolynomial const &p, PlanePolynomial const &q);

/// Parses a polynomial in x and y: integers, rationals via '/', + - * ^ and
/// parentheses. Throws ParseError with the offending position.
PlanePolynomial parse_plane_polynomial(std::string_view text);

/// parse_plane_polynomial plus the admission checks for projection input:
/// nonzero, y-degree >= 2, squarefree in y.
PlanePolynomial parse_poly(std::string_view text);

Rational parse_rational(std::string_view text);

} // namespace ramify

#endif // RAMIFY_RATIONAL_POLY_HPP
