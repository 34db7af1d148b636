#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramify/cover_io.hpp"
#include "ramify/errors.hpp"
#include "ramify/fiber.hpp"
#include "ramify/gen.hpp"
#include "ramify/gen_io.hpp"

using namespace ramify;

namespace
{

CorpusSpec box(std::size_t d, std::size_t g, std::size_t r)
{
  CorpusSpec s;
  s.degree = {d, d};
  s.genus = {g, g};
  s.branch_points = {r, r};
  return s;
}

/// Independent count over the full product space of non-identity r-tuples.
std::size_t brute_force_count(std::size_t d, std::size_t r)
{
  std::vector<Permutation> nontrivial;
  std::vector<Point> images(d);
  std::iota(images.begin(), images.end(), 0);
  while (std::next_permutation(images.begin(), images.end()))
    nontrivial.push_back(Permutation::from_images(images));
  if (r == 0)
    return d == 1 ? 1 : 0;
  if (nontrivial.empty())
    return 0;
  std::size_t count = 0;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<Permutation> gens;
    Permutation product(d);
    for (auto i : idx) {
      gens.push_back(nontrivial[i]);
      product = compose(product, nontrivial[i]);
    }
    if (product.is_identity()) {
      std::set<Point> orbit;
      for (auto const &e : oracle::closure_elements(d, gens))
        orbit.insert(e(0));
      count += orbit.size() == d;
    }
    std::size_t k = r;
    while (k > 0 && ++idx[k - 1] == nontrivial.size())
      idx[--k] = 0;
    if (k == 0)
      return count;
  }
}

} // namespace

TEST(Gen, EnumerationMatchesBruteForce)
{
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t r = 0; r <= 4; ++r)
      EXPECT_EQ(enumerate_covers(box(d, 0, r)).size(), brute_force_count(d, r))
          << "d=" << d << " r=" << r;
}

TEST(Gen, SmallExamples)
{
  auto s = box(2, 0, 2);
  s.dedup = true;
  auto a = enumerate_covers(s);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(to_cycle_string(a[0].branch_cycles[0]), "(1 2)");

  s = box(3, 0, 2);
  s.dedup = true;
  auto b = enumerate_covers(s);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].branch_cycles[0].cycle_type(), (std::vector<std::size_t>{3}));

  auto etale = enumerate_covers(box(2, 1, 0));
  EXPECT_EQ(etale.size(), 3u);
  for (auto const &c : etale)
    EXPECT_FALSE(genuinely_ramified(c).genuinely_ramified);
}

TEST(Gen, EveryEnumeratedCoverValidates)
{
  CorpusSpec s;
  s.degree = {1, 4};
  s.branch_points = {0, 3};
  std::size_t n = 0;
  enumerate_covers(s, [&](BranchedCover const &c) {
    ++n;
    EXPECT_TRUE(validate(c).ok());
  });
  EXPECT_GT(n, 100u);
}

TEST(Gen, DeterministicOrder)
{
  CorpusSpec s;
  s.degree = {2, 3};
  s.genus = {0, 1};
  s.branch_points = {0, 2};
  EXPECT_EQ(to_cover_lines(enumerate_covers(s)), to_cover_lines(enumerate_covers(s)));
}

TEST(Gen, Caps)
{
  EXPECT_THROW(enumerate_covers(box(6, 0, 2)), CapExceeded);
  EXPECT_THROW(enumerate_covers(box(4, 1, 0)), CapExceeded);
  EXPECT_THROW(enumerate_covers(box(3, 2, 0)), CapExceeded);
  EXPECT_THROW(enumerate_covers(box(5, 0, 6)), CapExceeded);
}

TEST(Gen, CanonicalForm)
{
  std::mt19937_64 rng(8);
  CorpusSpec s;
  s.degree = {3, 5};
  s.genus = {0, 1};
  s.branch_points = {2, 4};
  for (int trial = 0; trial < 100; ++trial) {
    BranchedCover c;
    try {
      c = random_cover(s, rng());
    } catch (Infeasible const &) {
      continue;
    }
    auto canon = canonical_form(c);
    EXPECT_EQ(canonical_form(canon), canon);
    auto sigma = oracle::random_permutation(rng, c.degree);
    EXPECT_EQ(canonical_form(relabel(c, sigma)), canon);
    EXPECT_EQ(canonical_key(relabel(c, sigma)), canonical_key(c));
  }
}

TEST(Gen, RandomMorseCovers)
{
  auto s = box(4, 0, 6);
  s.morse_only = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto c = random_cover(s, seed);
    EXPECT_TRUE(validate(c).ok());
    EXPECT_TRUE(is_morse(c));
  }
  EXPECT_EQ(random_cover(s, 42), random_cover(s, 42));
}

TEST(Gen, OddMorseCountIsInfeasible)
{
  auto s = box(4, 0, 5);
  s.morse_only = true;
  try {
    random_cover(s, 1);
    FAIL();
  } catch (Infeasible const &e) {
    EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos);
  }
}

TEST(Gen, RejectionBudget)
{
  auto s = box(5, 0, 2);
  s.morse_only = true; // two transpositions never act transitively on 5 points
  EXPECT_THROW(random_cover(s, 3), Infeasible);
}

TEST(Gen, RandomModeNeedsSeed)
{
  CorpusSpec s;
  s.samples = 3;
  EXPECT_THROW(s.check(), InvalidArgument);
  s.seed = 5;
  auto a = random_covers(s);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a, random_covers(s));
}

TEST(Gen, ParseRange)
{
  EXPECT_EQ(parse_range("3").lo, 3u);
  EXPECT_EQ(parse_range("2..5").hi, 5u);
  EXPECT_THROW(parse_range("5..2"), ParseError);
  EXPECT_THROW(parse_range("a"), ParseError);
}

TEST(Gen, VerifySmallCorpora)
{
  CorpusSpec s;
  s.degree = {1, 3};
  s.branch_points = {0, 4};
  auto r1 = verify_corpus(s, 1);
  auto r4 = verify_corpus(s, 4);
  EXPECT_TRUE(r1.ok());
  EXPECT_EQ(to_verification_text(r1), to_verification_text(r4));
  EXPECT_EQ(r1.count(Check::theorem_main).vacuous, 1u);

  CorpusSpec t;
  t.degree = {1, 3};
  t.genus = {1, 1};
  t.branch_points = {0, 2};
  auto r = verify_corpus(t, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_LT(r.genuinely_ramified, r.covers); // etale covers present
}

TEST(Gen, VerificationReportsViolations)
{
  // A hand-made tuple that is not a cover is reported, not thrown.
  BranchedCover bogus;
  bogus.degree = 2;
  bogus.branch_cycles = {parse_cycles("(1 2)", 2)};
  auto r = verify_cover(bogus);
  EXPECT_FALSE(r.ok());
  auto text = to_verification_text(r);
  EXPECT_NE(text.find("\"violations\""), std::string::npos);
}

TEST(GenIo, CoverLinesRoundTrip)
{
  auto covers = enumerate_covers(box(3, 0, 3));
  EXPECT_EQ(parse_cover_lines(to_cover_lines(covers)), covers);
}
