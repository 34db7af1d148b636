#include "ramify/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "ramify/errors.hpp"

namespace ramify
{

char const *to_string(Transitivity t)
{
  switch (t) {
    case Transitivity::intransitive:
      return "intransitive";
    case Transitivity::transitive:
      return "transitive";
    case Transitivity::two_transitive:
      return "two_transitive";
  }
  return "?";
}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<Permutation const> generators)
: _degree(degree)
{
  std::unordered_set<Permutation> seen;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity() && seen.insert(g).second)
      _strong_generators.push_back(g);
  }
  if (!_strong_generators.empty())
    schreier_sims();
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> b;
  for (auto const &level : _levels)
    b.push_back(level.base_point);
  return b;
}

void StabilizerChain::rebuild_level(std::size_t i)
{
  Level &level = _levels[i];
  level.generators.clear();
  for (auto const &s : _strong_generators) {
    bool fixes_prefix = true;
    for (std::size_t l = 0; l < i && fixes_prefix; ++l) {
      Point b = _levels[l].base_point;
      fixes_prefix = s(b) == b;
    }
    if (fixes_prefix)
      level.generators.push_back(s);
  }

  level.orbit.assign(1, level.base_point);
  level.transversal.assign(_degree, std::nullopt);
  level.inverse_transversal.assign(_degree, std::nullopt);
  level.transversal[level.base_point] = Permutation(_degree);
  level.inverse_transversal[level.base_point] = Permutation(_degree);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (auto const &s : level.generators) {
      Point y = s(x);
      if (level.transversal[y])
        continue;
      Permutation u = compose(s, *level.transversal[x]);
      level.inverse_transversal[y] = u.inverse();
      level.transversal[y] = std::move(u);
      level.orbit.push_back(y);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from_level) const
{
  for (std::size_t l = from_level; l < _levels.size(); ++l) {
    Point x = g(_levels[l].base_point);
    auto const &inv = _levels[l].inverse_transversal[x];
    if (!inv)
      return {std::move(g), l};
    g = compose(*inv, g);
  }
  return {std::move(g), _levels.size()};
}

void StabilizerChain::schreier_sims()
{
  // Extend the base until no strong generator fixes all of it.
  for (auto const &s : _strong_generators) {
    bool fixes_base = true;
    for (auto const &level : _levels)
      fixes_base = fixes_base && s(level.base_point) == level.base_point;
    if (fixes_base) {
      _levels.push_back(Level{s.least_moved_point(), {}, {}, {}, {}});
    }
  }
  for (std::size_t l = 0; l < _levels.size(); ++l)
    rebuild_level(l);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level const &level = _levels[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; !extended && k < level.orbit.size(); ++k) {
      Point x = level.orbit[k];
      for (std::size_t gi = 0; !extended && gi < level.generators.size(); ++gi) {
        Permutation const &s = level.generators[gi];
        Permutation h = compose(*level.inverse_transversal[s(x)],
                                compose(s, *level.transversal[x]));
        if (h.is_identity())
          continue;
        auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity())
          continue;
        if (j == _levels.size())
          _levels.push_back(Level{residue.least_moved_point(), {}, {}, {}, {}});
        _strong_generators.push_back(std::move(residue));
        for (std::size_t l = 0; l <= j; ++l)
          rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
      }
    }
    if (!extended)
      --i;
  }
}

std::uint64_t StabilizerChain::order() const
{
  std::uint64_t result = 1;
  for (auto const &level : _levels) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(level.orbit.size()), &result))
      throw CapExceeded("group order overflows 64 bits");
  }
  return result;
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    return false;
  auto [residue, level] = strip(g);
  return level == _levels.size() && residue.is_identity();
}

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators)
: _degree(degree)
{
  std::unordered_set<Permutation> seen;
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity() && seen.insert(g).second)
      _generators.push_back(std::move(g));
  }
  _chain = StabilizerChain(degree, _generators);
  _order = _chain.order();
  _orbits = orbit_partition(degree, _generators.size(),
                            [this](std::size_t k, std::uint32_t p) { return _generators[k](p); });
}

std::vector<Point> GeneratedGroup::orbit(Point p) const
{
  for (auto const &block : _orbits)
    if (std::binary_search(block.begin(), block.end(), p))
      return block;
  throw InvalidArgument("point outside the domain");
}

std::vector<std::optional<Permutation>> GeneratedGroup::transversal(Point root) const
{
  std::vector<std::optional<Permutation>> t(_degree);
  t[root] = Permutation(_degree);
  std::deque<Point> queue{root};
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (auto const &s : _generators) {
      Point y = s(x);
      if (!t[y]) {
        t[y] = compose(s, *t[x]);
        queue.push_back(y);
      }
    }
  }
  return t;
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t cap) const
{
  if (_order > cap)
    throw CapExceeded("group order " + std::to_string(_order) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Permutation> result{Permutation(_degree)};
  auto const &levels = _chain.levels();
  // Every element is u_0 o u_1 o ... o u_{L-1} with u_l from level l.
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * levels[l].orbit.size());
    for (Point x : levels[l].orbit)
      for (auto const &tail : result)
        next.push_back(compose(*levels[l].transversal[x], tail));
    result = std::move(next);
  }
  return result;
}

Partition orbit_partition(std::size_t n, std::size_t generator_count,
                          std::function<std::uint32_t(std::size_t, std::uint32_t)> const &act)
{
  Partition result;
  std::vector<bool> seen(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<Point> block{start};
    seen[start] = true;
    for (std::size_t k = 0; k < block.size(); ++k) {
      for (std::size_t gi = 0; gi < generator_count; ++gi) {
        std::uint32_t y = act(gi, block[k]);
        if (!seen[y]) {
          seen[y] = true;
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    result.push_back(std::move(block));
  }
  return result;
}

Partition orbits(GeneratedGroup const &g) { return g.orbits(); }

Partition pair_orbits(GeneratedGroup const &g)
{
  auto const d = static_cast<std::uint32_t>(g.degree());
  auto const &gens = g.generators();
  return orbit_partition(static_cast<std::size_t>(d) * d, gens.size(),
                         [&](std::size_t k, std::uint32_t pair) {
                           return gens[k](pair / d) * d + gens[k](pair % d);
                         });
}

GeneratedGroup point_stabilizer(GeneratedGroup const &g, Point p)
{
  if (p >= g.degree())
    throw InvalidArgument("stabilized point out of range");
  auto t = g.transversal(p);
  std::set<Permutation> schreier;
  for (Point x = 0; x < g.degree(); ++x) {
    if (!t[x])
      continue;
    for (auto const &s : g.generators()) {
      Permutation h = compose(t[s(x)]->inverse(), compose(s, *t[x]));
      if (!h.is_identity())
        schreier.insert(std::move(h));
    }
  }
  return GeneratedGroup(g.degree(), {schreier.begin(), schreier.end()});
}

GeneratedGroup normal_closure(std::span<Permutation const> sub, GeneratedGroup const &g)
{
  std::vector<Permutation> gens;
  for (auto const &x : sub) {
    if (!g.contains(x))
      throw InvalidArgument("element " + to_cycle_string(x) + " is not in the group");
    if (!x.is_identity())
      gens.push_back(x);
  }
  GeneratedGroup closure(g.degree(), gens);
  std::deque<Permutation> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Permutation n = std::move(queue.front());
    queue.pop_front();
    for (auto const &s : g.generators()) {
      Permutation c = conjugate(n, s);
      if (closure.contains(c))
        continue;
      gens.push_back(c);
      closure = GeneratedGroup(g.degree(), gens);
      queue.push_back(std::move(c));
    }
  }
  return closure;
}

GeneratedGroup join(GeneratedGroup const &a, GeneratedGroup const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("join of groups of different degree");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return GeneratedGroup(a.degree(), std::move(gens));
}

Transitivity transitivity(GeneratedGroup const &g)
{
  if (!g.is_transitive())
    return Transitivity::intransitive;
  if (g.degree() < 2)
    return Transitivity::transitive;
  return pair_orbits(g).size() == 2 ? Transitivity::two_transitive : Transitivity::transitive;
}

} // namespace ramify
