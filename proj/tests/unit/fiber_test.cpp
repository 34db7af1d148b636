#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramify/errors.hpp"
#include "ramify/fiber.hpp"
#include "ramify/gen.hpp"

using namespace ramify;

namespace
{

BranchedCover cover(std::size_t d, std::vector<char const *> cycles, std::size_t g = 0,
                    std::vector<std::pair<char const *, char const *>> handles = {})
{
  BranchedCover c;
  c.degree = d;
  c.base_genus = g;
  for (auto [a, b] : handles)
    c.handles.emplace_back(parse_cycles(a, d), parse_cycles(b, d));
  for (auto const *t : cycles)
    c.branch_cycles.push_back(parse_cycles(t, d));
  return c;
}

BranchedCover dihedral() { return cover(4, {"(1 2 3 4)", "(1 3)", "(1 4)(2 3)"}); }
BranchedCover triple() { return cover(3, {"(1 2)", "(2 3)", "(1 3 2)"}); }
BranchedCover morse_s3() { return cover(3, {"(1 2)", "(1 2)", "(2 3)", "(2 3)"}); }
BranchedCover klein() { return cover(4, {"(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"}); }

} // namespace

TEST(Fiber, DihedralOrbitals)
{
  auto o = orbital_decomposition(dihedral());
  ASSERT_EQ(o.orbitals.size(), 3u);
  EXPECT_TRUE(o.orbitals[0].is_diagonal);
  EXPECT_EQ(o.orbitals[0].size, 4u);
  std::multiset<std::size_t> sizes{o.orbitals[1].size, o.orbitals[2].size};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{4, 8}));
  EXPECT_EQ(o.orbital_of(0, 2), o.orbital_of(1, 3)); // opposite
  EXPECT_EQ(o.orbital_of(0, 1), o.orbital_of(3, 0)); // adjacent
}

TEST(Fiber, FourCycleSchemePointHasFourBranches)
{
  auto c = dihedral();
  auto points = scheme_points(c);
  bool found = false;
  for (auto const &p : points)
    if (p.branch_index == 0 && p.cycle.size() == 4 && p.second_cycle.size() == 4) {
      found = true;
      ASSERT_EQ(p.branches.size(), 4u);
      for (auto const &b : p.branches)
        EXPECT_EQ(b.size, 4u);
    }
  EXPECT_TRUE(found);
}

TEST(Fiber, DihedralDualGraphIsTriangle)
{
  Graph g = dual_graph(dihedral());
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(genuinely_ramified(dihedral()).genuinely_ramified);
  auto off = offdiag_closure_connected(dihedral());
  EXPECT_TRUE(off.connected);
  EXPECT_FALSE(off.vacuous);
  EXPECT_EQ(galois_closure_order(dihedral()), 8u);
}

TEST(Fiber, EtaleCoverIsNotGenuinelyRamified)
{
  auto c = cover(2, {}, 1, {{"(1 2)", "id"}});
  auto gr = genuinely_ramified(c);
  EXPECT_FALSE(gr.genuinely_ramified);
  EXPECT_EQ(gr.etale_subcover_degree, 2u);
  EXPECT_FALSE(is_connected(dual_graph(c)).connected);
}

TEST(Fiber, DegreeOneIsVacuous)
{
  BranchedCover c;
  auto off = offdiag_closure_connected(c);
  EXPECT_TRUE(off.vacuous);
  auto sd = certify_sd(c);
  ASSERT_TRUE(std::holds_alternative<SdRefusal>(sd));
  EXPECT_EQ(std::get<SdRefusal>(sd).reason, SdRefusalReason::degree_below_two);
}

TEST(Fiber, CertifySd)
{
  auto sd = certify_sd(morse_s3());
  ASSERT_TRUE(std::holds_alternative<SdCertificate>(sd));
  EXPECT_EQ(std::get<SdCertificate>(sd).group_order, 6u);

  auto refused = certify_sd(dihedral());
  ASSERT_TRUE(std::holds_alternative<SdRefusal>(refused));
  EXPECT_EQ(std::get<SdRefusal>(refused).reason, SdRefusalReason::not_morse);

  // Morse double cover of a torus with trivial handles
  auto c = cover(2, {"(1 2)", "(1 2)"}, 1, {{"id", "id"}});
  auto r = certify_sd(c);
  ASSERT_TRUE(std::holds_alternative<SdCertificate>(r));
}

TEST(Fiber, ComponentCoverOfTriple)
{
  auto c = triple();
  auto o = orbital_decomposition(c);
  ASSERT_EQ(o.orbitals.size(), 2u);
  ASSERT_EQ(o.orbitals[1].size, 6u);
  auto comp = component_cover(c, o.orbitals[1]);
  EXPECT_EQ(comp.degree, 6u);
  EXPECT_EQ(total_space_genus(comp), 0u);
}

TEST(Fiber, OppositeComponentOfDihedral)
{
  auto c = dihedral();
  auto o = orbital_decomposition(c);
  for (auto const &orb : o.orbitals)
    if (!orb.is_diagonal && orb.size == 4) {
      auto comp = component_cover(c, orb);
      EXPECT_TRUE(validate(comp).ok());
      EXPECT_EQ(comp.degree, 4u);
    }
}

TEST(Fiber, DerivedCoverOfTriple)
{
  auto q = derived_cover_q1(triple());
  EXPECT_EQ(q.degree, 2u);
  EXPECT_EQ(q.branch_point_count(), 2u);
  ASSERT_TRUE(q.total_space_genus.has_value());
  EXPECT_EQ(*q.total_space_genus, 0u);
  EXPECT_TRUE(q.irreducible);
  // over the first branch point (c = (1 2)) the unramified point {3} is
  // transported by (1 3) and gives inertia (2 3)
  bool found = false;
  for (auto const &li : q.local_inertia)
    if (li.branch_index == 0 && li.cycle == std::vector<Point>{2}) {
      EXPECT_EQ(to_cycle_string(li.element), "(2 3)");
      EXPECT_EQ(li.transport(2), 0u);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Fiber, CayleyOracleOnRegularKleinCover)
{
  auto c = klein();
  ASSERT_TRUE(is_galois(c));
  auto oracle = cayley_quotient_oracle(c);
  ASSERT_TRUE(oracle.computed);
  EXPECT_EQ(oracle.group_order, 4u);
  EXPECT_EQ(oracle.relation, GraphRelation::equal);
  EXPECT_TRUE(same_labeled_graph(oracle.quotient, dual_graph(c)));
}

TEST(Fiber, CayleyOracleOnDihedralIsConsistent)
{
  auto oracle = cayley_quotient_oracle(dihedral());
  ASSERT_TRUE(oracle.computed);
  EXPECT_TRUE(oracle.quotient_connectivity.connected);
  EXPECT_TRUE(oracle.consistent);
}

TEST(Fiber, CayleyOracleRespectsCap)
{
  CorpusSpec spec;
  spec.degree = {7, 7};
  spec.branch_points = {12, 12};
  spec.morse_only = true;
  auto c = random_cover(spec, 1);
  auto oracle = cayley_quotient_oracle(c, 100);
  EXPECT_FALSE(oracle.computed);
  EXPECT_FALSE(oracle.skipped_reason.empty());
}

TEST(Fiber, RandomCoversSatisfyFiberInvariants)
{
  std::mt19937_64 rng(77);
  int gr_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    CorpusSpec spec;
    spec.degree = {2, 5};
    spec.genus = {0, 1};
    spec.branch_points = {0, 5};
    BranchedCover c;
    try {
      c = random_cover(spec, rng());
    } catch (Infeasible const &) {
      continue;
    }
    auto o = orbital_decomposition(c);
    EXPECT_EQ(o.orbitals.size(), oracle::pair_orbit_count(c.degree, c.generators()));
    std::size_t total = 0;
    for (auto const &orb : o.orbitals)
      total += orb.size;
    EXPECT_EQ(total, c.degree * c.degree);

    auto gr = genuinely_ramified(c);
    EXPECT_EQ(gr.genuinely_ramified, is_connected(dual_graph(c)).connected);
    EXPECT_EQ(gr.genuinely_ramified, gr.etale_subcover_degree == 1);
    if (gr.genuinely_ramified) {
      ++gr_count;
      EXPECT_TRUE(offdiag_closure_connected(c).connected);
    }
    auto q = derived_cover_q1(c);
    EXPECT_EQ(q.degree, c.degree - 1);
    EXPECT_EQ(q.irreducible, o.orbitals.size() == 2);
    if (q.irreducible) {
      ASSERT_TRUE(q.total_space_genus.has_value());
      EXPECT_EQ(*q.total_space_genus, total_space_genus(component_cover(c, o.orbitals[1])));
    }
    // every scheme point's branches partition kappa x kappa'
    for (auto const &p : scheme_points(c, o)) {
      std::size_t n = 0;
      for (auto const &b : p.branches)
        n += b.size;
      EXPECT_EQ(n, p.cycle.size() * p.second_cycle.size());
    }
  }
  EXPECT_GT(gr_count, 50);
}
