#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramify/errors.hpp"
#include "ramify/group.hpp"

using namespace ramify;

namespace
{

Permutation P(char const *text, std::size_t d) { return parse_cycles(text, d); }

GeneratedGroup d4() { return GeneratedGroup(4, {P("(1 2 3 4)", 4), P("(1 3)", 4)}); }

} // namespace

TEST(Group, DihedralOrderMatchesClosure)
{
  EXPECT_EQ(d4().order(), 8u);
  EXPECT_EQ(oracle::closure(4, d4().generators()).size(), 8u);
}

TEST(Group, DihedralPairOrbits)
{
  Partition orbits = pair_orbits(d4());
  ASSERT_EQ(orbits.size(), 3u);
  std::vector<std::size_t> sizes;
  for (auto const &o : orbits)
    sizes.push_back(o.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{4, 8, 4}));
  EXPECT_EQ(orbits[0].front(), 0u); // diagonal first
  EXPECT_EQ(transitivity(d4()), Transitivity::transitive);
}

TEST(Group, DihedralStabilizer)
{
  GeneratedGroup stab = point_stabilizer(d4(), 0);
  EXPECT_EQ(stab.order(), 2u);
  EXPECT_TRUE(stab.contains(P("(2 4)", 4)));
}

TEST(Group, NormalClosureInDihedral)
{
  Permutation x = P("(1 2)(3 4)", 4);
  GeneratedGroup n = normal_closure(std::span<Permutation const>(&x, 1), d4());
  std::vector<Permutation> conjugates;
  for (auto const &g : oracle::closure_elements(4, d4().generators()))
    conjugates.push_back(conjugate(x, g));
  EXPECT_EQ(n.order(), oracle::closure(4, conjugates).size());
  EXPECT_TRUE(n.order() == 2 || n.order() == 4);
  Permutation outside = P("(1 2)", 4);
  EXPECT_THROW(normal_closure(std::span<Permutation const>(&outside, 1), d4()), InvalidArgument);
}

TEST(Group, SymmetricGroups)
{
  for (std::size_t d = 2; d <= 8; ++d) {
    std::vector<Point> cyc(d);
    std::iota(cyc.begin(), cyc.end(), 0);
    GeneratedGroup s(d, {Permutation::transposition(d, 0, 1), Permutation::cycle(d, cyc)});
    EXPECT_EQ(s.order(), factorial(d));
    EXPECT_EQ(transitivity(s), Transitivity::two_transitive);
  }
}

TEST(Group, TrivialAndIdentityGenerators)
{
  GeneratedGroup g(3, {Permutation(3)});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.orbits().size(), 3u);
  EXPECT_EQ(transitivity(GeneratedGroup(1, {})), Transitivity::transitive);
}

TEST(Group, RandomGroupsAgainstNaiveClosure)
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + rng() % 7;
    std::size_t k = rng() % 4;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      auto p = oracle::random_permutation(rng, d);
      if (rng() % 2) // sparse generators give proper subgroups more often
        p = p.pow(static_cast<long long>(1 + rng() % 3));
      gens.push_back(p);
    }
    GeneratedGroup g(d, gens);
    auto elements = oracle::closure_elements(d, gens);
    ASSERT_EQ(g.order(), elements.size());
    for (auto const &e : elements)
      EXPECT_TRUE(g.contains(e));
    auto other = oracle::random_permutation(rng, d);
    bool in = std::find(elements.begin(), elements.end(), other) != elements.end();
    EXPECT_EQ(g.contains(other), in);

    EXPECT_EQ(pair_orbits(g).size(), oracle::pair_orbit_count(d, gens));
    bool two = transitivity(g) == Transitivity::two_transitive;
    EXPECT_EQ(two, oracle::two_transitive(d, gens));
    if (d >= 2) {
      EXPECT_EQ(pair_orbits(g).size() == 2, oracle::two_transitive(d, gens));
    }

    std::size_t stab = 0;
    for (auto const &e : elements)
      stab += e(0) == 0;
    EXPECT_EQ(point_stabilizer(g, 0).order(), stab);

    auto listed = g.elements(10080);
    EXPECT_EQ(listed.size(), elements.size());

    auto t = g.transversal(0);
    for (Point x : g.orbit(0)) {
      ASSERT_TRUE(t[x].has_value());
      EXPECT_EQ((*t[x])(0), x);
    }
  }
}

TEST(Group, ElementsCap)
{
  std::vector<Point> cyc{0, 1, 2, 3, 4, 5, 6};
  GeneratedGroup s7(7, {Permutation::transposition(7, 0, 1), Permutation::cycle(7, cyc)});
  EXPECT_THROW(s7.elements(100), CapExceeded);
}
