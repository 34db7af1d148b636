#include <cctype>

#include "ramify/errors.hpp"
#include "ramify/rational_poly.hpp"

namespace ramify
{

namespace
{

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary | '/' unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' integer)?
// atom   := integer | 'x' | 'y' | '(' expr ')'
class PolyParser
{
public:
  explicit PolyParser(std::string_view text) : _text(text) {}

  PlanePolynomial parse()
  {
    skip_ws();
    if (_pos == _text.size())
      throw ParseError("empty polynomial", _pos);
    PlanePolynomial p = expr();
    skip_ws();
    if (_pos != _text.size())
      throw ParseError(std::string("unexpected character '") + _text[_pos] + "'", _pos);
    return p;
  }

private:
  void skip_ws()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool accept(char ch)
  {
    skip_ws();
    if (_pos < _text.size() && _text[_pos] == ch) {
      ++_pos;
      return true;
    }
    return false;
  }

  PlanePolynomial expr()
  {
    PlanePolynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  PlanePolynomial term()
  {
    PlanePolynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = _pos;
        PlanePolynomial divisor = unary();
        auto const &terms = divisor.terms();
        if (terms.size() != 1 || terms.begin()->first != PlanePolynomial::Monomial{0, 0})
          throw ParseError("division only by nonzero constants", at);
        acc = acc * PlanePolynomial::constant(1 / terms.begin()->second);
      } else {
        return acc;
      }
    }
  }

  PlanePolynomial unary()
  {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  PlanePolynomial power()
  {
    PlanePolynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = _pos;
      mpz_class e = integer();
      if (e > 64)
        throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer()
  {
    std::size_t start = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      throw ParseError("expected an integer", start);
    return mpz_class(std::string(_text.substr(start, _pos - start)));
  }

  PlanePolynomial atom()
  {
    skip_ws();
    if (_pos == _text.size())
      throw ParseError("unexpected end of input", _pos);
    char ch = _text[_pos];
    if (std::isdigit(static_cast<unsigned char>(ch)))
      return PlanePolynomial::constant(Rational(integer()));
    if (ch == 'x') {
      ++_pos;
      return PlanePolynomial::x();
    }
    if (ch == 'y') {
      ++_pos;
      return PlanePolynomial::y();
    }
    if (ch == '(') {
      ++_pos;
      PlanePolynomial inner = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", _pos);
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", _pos);
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // anonymous namespace

PlanePolynomial parse_plane_polynomial(std::string_view text)
{
  return PolyParser(text).parse();
}

PlanePolynomial parse_poly(std::string_view text)
{
  PlanePolynomial p = parse_plane_polynomial(text);
  if (p.is_zero())
    throw ParseError("zero polynomial");
  if (p.y_degree() < 2)
    throw ParseError("y-degree " + std::to_string(p.y_degree()) + " < 2");
  if (resultant_y(p, p.derivative_y()).is_zero())
    throw ParseError("polynomial is not squarefree in y");
  return p;
}

Rational parse_rational(std::string_view text)
{
  PlanePolynomial p = parse_plane_polynomial(text);
  if (p.is_zero())
    return Rational(0);
  auto const &terms = p.terms();
  if (terms.size() != 1 || terms.begin()->first != PlanePolynomial::Monomial{0, 0})
    throw ParseError("expected a rational constant");
  return terms.begin()->second;
}

} // namespace ramify
