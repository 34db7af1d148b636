#ifndef RAMIFY_TESTS_ORACLES_HPP
#define RAMIFY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/permutation.hpp"

namespace oracle
{

using ramify::Permutation;
using ramify::Point;

/// All elements of <gens> by breadth-first closure under right
/// multiplication.
inline std::set<std::vector<Point>> closure(std::size_t degree, std::vector<Permutation> const &gens)
{
  std::set<std::vector<Point>> seen;
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::deque<std::vector<Point>> queue{id};
  seen.insert(id);
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      std::vector<Point> y(degree);
      for (Point i = 0; i < degree; ++i)
        y[i] = x[g(i)];
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return seen;
}

inline std::vector<Permutation> closure_elements(std::size_t degree,
                                                 std::vector<Permutation> const &gens)
{
  std::vector<Permutation> out;
  for (auto const &images : closure(degree, gens))
    out.push_back(Permutation::from_images(images));
  return out;
}

/// Orbits on ordered pairs by flood fill over the generators.
inline std::size_t pair_orbit_count(std::size_t degree, std::vector<Permutation> const &gens)
{
  std::vector<bool> seen(degree * degree, false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < degree * degree; ++start) {
    if (seen[start])
      continue;
    ++count;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      for (auto const &g : gens) {
        std::size_t q = g(static_cast<Point>(p / degree)) * degree + g(static_cast<Point>(p % degree));
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
      }
    }
  }
  return count;
}

/// Naive two-transitivity: every ordered pair of distinct points is reached
/// from (0, 1) by some group element.
inline bool two_transitive(std::size_t degree, std::vector<Permutation> const &gens)
{
  if (degree < 2)
    return false;
  std::set<std::pair<Point, Point>> reached;
  for (auto const &g : closure_elements(degree, gens))
    reached.insert({g(0), g(1)});
  return reached.size() == degree * (degree - 1);
}

/// Genus by Riemann-Hurwitz, computed from cycle lengths directly.
inline long genus(ramify::BranchedCover const &c)
{
  long d = static_cast<long>(c.degree);
  long sum = 0;
  for (auto const &cyc : c.branch_cycles) {
    std::vector<bool> seen(c.degree, false);
    long cycles = 0;
    for (Point i = 0; i < c.degree; ++i) {
      if (seen[i])
        continue;
      ++cycles;
      for (Point j = i; !seen[j]; j = cyc(j))
        seen[j] = true;
    }
    sum += d - cycles;
  }
  long twice = d * (2 * static_cast<long>(c.base_genus) - 2) + sum;
  return (twice + 2) / 2;
}

inline Permutation random_permutation(std::mt19937_64 &rng, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

} // namespace oracle

#endif // RAMIFY_TESTS_ORACLES_HPP
