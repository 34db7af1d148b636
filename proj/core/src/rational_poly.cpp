#include "ramify/rational_poly.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify
{

UPoly::UPoly(std::vector<Rational> coeffs) : _c(std::move(coeffs)) { normalize(); }

UPoly UPoly::constant(Rational c) { return UPoly(std::vector<Rational>{std::move(c)}); }

UPoly UPoly::monomial(Rational c, std::size_t power)
{
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = std::move(c);
  return UPoly(std::move(coeffs));
}

void UPoly::normalize()
{
  while (!_c.empty() && _c.back() == 0)
    _c.pop_back();
}

UPoly UPoly::derivative() const
{
  if (_c.size() <= 1)
    return {};
  std::vector<Rational> d(_c.size() - 1);
  for (std::size_t k = 1; k < _c.size(); ++k)
    d[k - 1] = _c[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
  if (is_zero())
    return {};
  std::vector<Rational> m(_c);
  for (auto &x : m)
    x /= _c.back();
  return UPoly(std::move(m));
}

Rational UPoly::evaluate(Rational const &x) const
{
  Rational acc = 0;
  for (auto it = _c.rbegin(); it != _c.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UPoly operator+(UPoly const &a, UPoly const &b)
{
  std::vector<Rational> c(std::max(a._c.size(), b._c.size()), Rational(0));
  for (std::size_t k = 0; k < a._c.size(); ++k)
    c[k] += a._c[k];
  for (std::size_t k = 0; k < b._c.size(); ++k)
    c[k] += b._c[k];
  return UPoly(std::move(c));
}

UPoly operator-(UPoly const &a) 
{
  std::vector<Rational> c(a._c);
  for (auto &x : c)
    x = -x;
  return UPoly(std::move(c));
}

UPoly operator-(UPoly const &a, UPoly const &b) { return a + (-b); }

UPoly operator*(UPoly const &a, UPoly const &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> c(a._c.size() + b._c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a._c.size(); ++i) {
    if (a._c[i] == 0)
      continue;
    for (std::size_t j = 0; j < b._c.size(); ++j)
      c[i + j] += a._c[i] * b._c[j];
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(char var) const
{
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t k = _c.size(); k-- > 0;) {
    if (_c[k] == 0)
      continue;
    Rational c = _c[k];
    bool negative = c < 0;
    if (negative)
      c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = c == 1 && k > 0;
    if (!unit)
      out += c.get_str();
    if (k > 0) {
      if (!unit)
        out += "*";
      out += var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(UPoly const &a, UPoly const &b)
{
  if (b.is_zero())
    throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  auto const &bc = b.coefficients();
  if (rem.size() < bc.size())
    return {UPoly(), a};
  std::vector<Rational> quot(rem.size() - bc.size() + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + bc.size() - 1] / bc.back();
    quot[k] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      rem[k + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_divide(UPoly const &a, UPoly const &b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw InvalidArgument("inexact polynomial division");
  return q;
}

UPoly gcd(UPoly const &a, UPoly const &b)
{
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(UPoly const &a)
{
  if (a.degree() <= 0)
    return a;
  return exact_divide(a, gcd(a, a.derivative())).monic();
}

UPoly determinant(std::vector<std::vector<UPoly>> m)
{
  std::size_t n = m.size();
  if (n == 0)
    return UPoly::constant(1);
  bool negate = false;
  UPoly previous = UPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      m[i][k] = UPoly();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

PlanePolynomial PlanePolynomial::constant(Rational c)
{
  PlanePolynomial p;
  p.add_term({0, 0}, c);
  return p;
}

PlanePolynomial PlanePolynomial::x()
{
  PlanePolynomial p;
  p.add_term({1, 0}, Rational(1));
  return p;
}

PlanePolynomial PlanePolynomial::y()
{
  PlanePolynomial p;
  p.add_term({0, 1}, Rational(1));
  return p;
}

void PlanePolynomial::add_term(Monomial m, Rational const &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = _terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      _terms.erase(it);
  }
}

unsigned PlanePolynomial::x_degree() const
{
  unsigned d = 0;
  for (auto const &[m, c] : _terms)
    d = std::max(d, m.first);
  return d;
}

unsigned PlanePolynomial::y_degree() const
{
  unsigned d = 0;
  for (auto const &[m, c] : _terms)
    d = std::max(d, m.second);
  return d;
}

unsigned PlanePolynomial::total_degree() const
{
  unsigned d = 0;
  for (auto const &[m, c] : _terms)
    d = std::max(d, m.first + m.second);
  return d;
}

std::vector<UPoly> PlanePolynomial::y_coefficients() const
{
  std::vector<std::vector<Rational>> dense(y_degree() + 1,
                                           std::vector<Rational>(x_degree() + 1, Rational(0)));
  for (auto const &[m, c] : _terms)
    dense[m.second][m.first] = c;
  std::vector<UPoly> result;
  for (auto &row : dense)
    result.emplace_back(std::move(row));
  return result;
}

PlanePolynomial PlanePolynomial::derivative_x() const
{
  PlanePolynomial d;
  for (auto const &[m, c] : _terms)
    if (m.first > 0)
      d.add_term({m.first - 1, m.second}, c * m.first);
  return d;
}

PlanePolynomial PlanePolynomial::derivative_y() const
{
  PlanePolynomial d;
  for (auto const &[m, c] : _terms)
    if (m.second > 0)
      d.add_term({m.first, m.second - 1}, c * m.second);
  return d;
}

PlanePolynomial PlanePolynomial::sheared(Rational const &lambda) const
{
  PlanePolynomial out;
  for (auto const &[m, c] : _terms) {
    // c (x + lambda y)^i y^j
    mpz_class binomial = 1;
    Rational lambda_power = 1;
    for (unsigned k = 0; k <= m.first; ++k) {
      out.add_term({m.first - k, m.second + k}, c * Rational(binomial) * lambda_power);
      binomial = binomial * (m.first - k) / (k + 1);
      lambda_power *= lambda;
    }
  }
  return out;
}

PlanePolynomial PlanePolynomial::pow(unsigned exponent) const
{
  PlanePolynomial result = constant(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1u)
      result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

PlanePolynomial operator+(PlanePolynomial const &a, PlanePolynomial const &b)
{
  PlanePolynomial out = a;
  for (auto const &[m, c] : b._terms)
    out.add_term(m, c);
  return out;
}

PlanePolynomial operator-(PlanePolynomial const &a)
{
  PlanePolynomial out;
  for (auto const &[m, c] : a._terms)
    out.add_term(m, -c);
  return out;
}

PlanePolynomial operator-(PlanePolynomial const &a, PlanePolynomial const &b) { return a + (-b); }

PlanePolynomial operator*(PlanePolynomial const &a, PlanePolynomial const &b)
{
  PlanePolynomial out;
  for (auto const &[ma, ca] : a._terms)
    for (auto const &[mb, cb] : b._terms)
      out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

std::string PlanePolynomial::to_string() const
{
  if (is_zero())
    return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(_terms.begin(), _terms.end());
  std::sort(ordered.begin(), ordered.end(), [](auto const &a, auto const &b) {
    if (a.first.second != b.first.second)
      return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (auto const &[m, coeff] : ordered) {
    Rational c = coeff;
    bool negative = c < 0;
    if (negative)
      c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::vector<std::string> factors;
    bool constant_term = m.first == 0 && m.second == 0;
    if (c != 1 || constant_term)
      factors.push_back(c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")");
    if (m.first > 0)
      factors.push_back(m.first == 1 ? "x" : "x^" + std::to_string(m.first));
    if (m.second > 0)
      factors.push_back(m.second == 1 ? "y" : "y^" + std::to_string(m.second));
    for (std::size_t k = 0; k < factors.size(); ++k)
      out += (k ? "*" : "") + factors[k];
  }
  return out;
}

UPoly resultant_y(PlanePolynomial const &p, PlanePolynomial const &q)
{
  auto a = p.y_coefficients();
  auto b = q.y_coefficients();
  if (p.is_zero() || q.is_zero())
    return {};
  std::size_t m = a.size() - 1, n = b.size() - 1;
  std::size_t size = m + n;
  if (size == 0)
    return UPoly::constant(1);
  std::vector<std::vector<UPoly>> sylvester(size, std::vector<UPoly>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k)
      sylvester[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k)
      sylvester[n + i][i + k] = b[n - k];
  return determinant(std::move(sylvester));
}

} // namespace ramify
