#ifndef RAMIFY_PERMUTATION_HPP
#define RAMIFY_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramify
{

/// Points are 0-based inside the library; cycle strings are 1-based.
using Point = std::uint32_t;

/// A bijection of {0, ..., d-1}, stored as its image sequence.
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  static Permutation transposition(std::size_t degree, Point a, Point b);

  /// The cycle (points[0] points[1] ...), 0-based.
  static Permutation cycle(std::size_t degree, std::span<Point const> points);

  std::size_t degree() const { return _images.size(); }

  Point operator()(Point i) const { return _images[i]; }
  Point operator[](Point i) const { return _images[i]; }

  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// Disjoint cycles, each starting at its least point, sorted by that point.
  /// Fixed points appear as 1-cycles only when `include_fixed` is set.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;

  /// Lengths of the nontrivial cycles, descending.
  std::vector<std::size_t> cycle_type() const;

  /// Sum over cycles of (length - 1).
  std::size_t ramification_contribution() const;

  bool is_transposition() const;
  bool is_even() const;

  /// Least moved point, or degree() for the identity.
  Point least_moved_point() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &a, Permutation const &b)
  { return a._images <=> b._images; }

private:
  explicit Permutation(std::vector<Point> images) : _images(std::move(images)) {}

  std::vector<Point> _images;
};

/// (a o b)(i) = a(b(i)): the right factor acts first.
Permutation compose(Permutation const &a, Permutation const &b);

inline Permutation operator*(Permutation const &a, Permutation const &b)
{ return compose(a, b); }

/// u o g o u^-1
Permutation conjugate(Permutation const &g, Permutation const &u);

/// [a, b] = a o b o a^-1 o b^-1
Permutation commutator(Permutation const &a, Permutation const &b);

/// Parses `id` or a sequence of parenthesized cycles over 1..degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle notation: least point first, cycles sorted, fixed points
/// omitted, `id` for the identity.
std::string to_cycle_string(Permutation const &p);

/// All elements of S_d in lexicographic order of image sequences.
std::vector<Permutation> symmetric_group_elements(std::size_t degree);

std::uint64_t factorial(std::size_t n);

} // namespace ramify

template<>
struct std::hash<ramify::Permutation>
{
  std::size_t operator()(ramify::Permutation const &p) const noexcept;
};

#endif // RAMIFY_PERMUTATION_HPP
