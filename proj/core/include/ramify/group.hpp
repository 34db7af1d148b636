#ifndef RAMIFY_GROUP_HPP
#define RAMIFY_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramify/permutation.hpp"

namespace ramify
{

/// Blocks sorted internally, ordered by least element.
using Partition = std::vector<std::vector<Point>>;

/// Ordered pairs (i, j) of points are encoded as i * degree + j.
using PairIndex = std::uint32_t;

enum class Transitivity
{
  intransitive,
  transitive,
  two_transitive
};

char const *to_string(Transitivity t);

/// Base and strong generating set built by deterministic Schreier-Sims.
/// New base points are always the least point moved by the element that
/// forced the extension.
class StabilizerChain
{
public:
  struct Level
  {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    /// transversal[x] maps base_point to x; empty when x is outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse_transversal;
  };

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::span<Permutation const> generators);

  std::size_t degree() const { return _degree; }
  std::vector<Level> const &levels() const { return _levels; }
  std::vector<Point> base() const;

  /// Throws CapExceeded when the order does not fit in 64 bits.
  std::uint64_t order() const;

  bool contains(Permutation const &g) const;

  /// Sifts `g` starting at `from_level`; returns the residue and the level
  /// at which sifting stopped (levels().size() on complete sift).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level = 0) const;

private:
  void rebuild_level(std::size_t i);
  void schreier_sims();

  std::size_t _degree = 0;
  std::vector<Permutation> _strong_generators;
  std::vector<Level> _levels;
};

/// A finitely generated subgroup of S_d. Immutable after construction.
class GeneratedGroup
{
public:
  /// Identity generators are dropped; an empty set yields the trivial group.
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  StabilizerChain const &chain() const { return _chain; }

  std::uint64_t order() const { return _order; }
  bool contains(Permutation const &g) const { return _chain.contains(g); }
  bool is_trivial() const { return _order == 1; }

  Partition const &orbits() const { return _orbits; }
  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const { return _orbits.size() <= 1; }

  /// Breadth-first transversal from `root`: result[x] maps root to x.
  std::vector<std::optional<Permutation>> transversal(Point root) const;

  /// Enumerates the group. Throws CapExceeded when order() > cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;

private:
  std::size_t _degree;
  std::vector<Permutation> _generators;
  StabilizerChain _chain;
  std::uint64_t _order;
  Partition _orbits;
};

/// Orbits of the group generated by `generators` acting on {0..n-1} via
/// `act(generator_index, point)`.
Partition orbit_partition(std::size_t n, std::size_t generator_count,
                          std::function<std::uint32_t(std::size_t, std::uint32_t)> const &act);

Partition orbits(GeneratedGroup const &g);

/// Orbits on ordered pairs under the diagonal action.
Partition pair_orbits(GeneratedGroup const &g);

/// Stab_G(p) generated by Schreier generators.
GeneratedGroup point_stabilizer(GeneratedGroup const &g, Point p);

/// Smallest normal subgroup of `g` containing `sub`. Throws
/// InvalidArgument when an element of `sub` is outside `g`.
GeneratedGroup normal_closure(std::span<Permutation const> sub, GeneratedGroup const &g);

GeneratedGroup join(GeneratedGroup const &a, GeneratedGroup const &b);

Transitivity transitivity(GeneratedGroup const &g);

} // namespace ramify

#endif // RAMIFY_GROUP_HPP
