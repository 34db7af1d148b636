#include "ramify/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ramify/errors.hpp"

namespace ramify
{

Permutation::Permutation(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw InvalidArgument("image sequence is not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b)
{
  if (a >= degree || b >= degree || a == b)
    throw InvalidArgument("invalid transposition");
  Permutation t(degree);
  std::swap(t._images[a], t._images[b]);
  return t;
}

Permutation Permutation::cycle(std::size_t degree, std::span<Point const> points)
{
  Permutation c(degree);
  std::vector<bool> seen(degree, false);
  for (std::size_t k = 0; k < points.size(); ++k) {
    Point p = points[k];
    if (p >= degree || seen[p])
      throw InvalidArgument("invalid cycle");
    seen[p] = true;
    c._images[p] = points[(k + 1) % points.size()];
  }
  return c;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    inv[_images[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles(bool include_fixed) const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<Point> c;
    for (Point p = start; !seen[p]; p = _images[p]) {
      seen[p] = true;
      c.push_back(p);
    }
    if (c.size() > 1 || include_fixed)
      result.push_back(std::move(c));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> lengths;
  for (auto const &c : cycles())
    lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::ramification_contribution() const
{
  std::size_t total = 0;
  for (auto const &c : cycles())
    total += c.size() - 1;
  return total;
}

bool Permutation::is_transposition() const
{
  auto type = cycle_type();
  return type.size() == 1 && type[0] == 2;
}

bool Permutation::is_even() const
{ return ramification_contribution() % 2 == 0; }

Point Permutation::least_moved_point() const
{
  for (Point i = 0; i < degree(); ++i)
    if (_images[i] != i)
      return i;
  return static_cast<Point>(degree());
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (Point i = 0; i < a.degree(); ++i)
    images[i] = a(b(i));
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(Permutation const &g, Permutation const &u)
{
  if (g.degree() != u.degree())
    throw DegreeMismatch("conjugation across degrees");
  // u g u^-1 sends u(i) to u(g(i)).
  std::vector<Point> images(g.degree());
  for (Point i = 0; i < g.degree(); ++i)
    images[u(i)] = u(g(i));
  return Permutation::from_images(std::move(images));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

namespace
{

class CycleParser
{
public:
  CycleParser(std::string_view text, std::size_t degree)
  : _text(text), _degree(degree), _images(degree), _used(degree, false)
  {
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  Permutation parse()
  {
    skip_ws();
    if (_text.substr(_pos, 2) == "id") {
      _pos += 2;
      skip_ws();
      if (_pos != _text.size())
        throw ParseError("trailing characters after 'id'", _pos);
      return Permutation(_degree);
    }
    if (_pos == _text.size())
      throw ParseError("empty permutation", _pos);
    while (_pos < _text.size()) {
      parse_cycle();
      skip_ws();
    }
    return Permutation::from_images(std::move(_images));
  }

private:
  void skip_ws()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  void parse_cycle()
  {
    if (_text[_pos] != '(')
      throw ParseError("expected '('", _pos);
    ++_pos;
    std::vector<Point> points;
    for (;;) {
      skip_ws();
      if (_pos == _text.size())
        throw ParseError("unterminated cycle", _pos);
      if (_text[_pos] == ')') {
        if (points.empty())
          throw ParseError("empty cycle", _pos);
        ++_pos;
        break;
      }
      if (!points.empty() && !std::isspace(static_cast<unsigned char>(_text[_pos - 1])))
        throw ParseError("expected whitespace between points", _pos);
      points.push_back(parse_point());
    }
    for (std::size_t k = 0; k < points.size(); ++k)
      _images[points[k]] = points[(k + 1) % points.size()];
  }

  Point parse_point()
  {
    std::size_t start = _pos;
    if (!std::isdigit(static_cast<unsigned char>(_text[_pos])))
      throw ParseError("expected a point", _pos);
    std::uint64_t value = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(_text[_pos] - '0');
      if (value > _degree + 1)
        value = _degree + 1;
      ++_pos;
    }
    if (value < 1 || value > _degree)
      throw ParseError("point out of range 1.." + std::to_string(_degree), start);
    Point p = static_cast<Point>(value - 1);
    if (_used[p])
      throw ParseError("repeated point " + std::to_string(value), start);
    _used[p] = true;
    return p;
  }

  std::string_view _text;
  std::size_t _degree;
  std::size_t _pos = 0;
  std::vector<Point> _images;
  std::vector<bool> _used;
};

} // anonymous namespace

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  return CycleParser(text, degree).parse();
}

std::string to_cycle_string(Permutation const &p)
{
  auto cs = p.cycles();
  if (cs.empty())
    return "id";
  std::string out;
  for (auto const &c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0)
        out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::vector<Permutation> symmetric_group_elements(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t result = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(k), &result))
      throw CapExceeded("factorial overflows 64 bits");
  }
  return result;
}

} // namespace ramify

std::size_t std::hash<ramify::Permutation>::operator()(ramify::Permutation const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}
