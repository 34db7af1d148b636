#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramify/errors.hpp"
#include "ramify/permutation.hpp"

using namespace ramify;

namespace
{

Permutation P(char const *text, std::size_t d) { return parse_cycles(text, d); }

} // namespace

TEST(Permutation, ComposesRightFactorFirst)
{
  // (1 2) o (2 3): 3 -> 2 -> 1
  Permutation p = compose(P("(1 2)", 3), P("(2 3)", 3));
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(to_cycle_string(p), "(1 2 3)");
}

TEST(Permutation, ParsePrintRoundTrip)
{
  EXPECT_EQ(to_cycle_string(P("(2 3 1)", 4)), "(1 2 3)");
  EXPECT_EQ(to_cycle_string(P("(3 4)(1 2)", 4)), "(1 2)(3 4)");
  EXPECT_EQ(to_cycle_string(P("id", 5)), "id");
  EXPECT_THROW(P("", 2), ParseError);
  EXPECT_TRUE(P("(1)", 3).is_identity());
}

TEST(Permutation, ParseErrorsCarryPositions)
{
  auto position_of = [](char const *text, std::size_t d) -> std::size_t {
    try {
      parse_cycles(text, d);
    } catch (ParseError const &e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("(1 2 1)", 3), 5u);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("()", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 x)", 3), ParseError);
}

TEST(Permutation, RejectsNonBijections)
{
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation::from_images({0, 3}), InvalidArgument);
}

TEST(Permutation, DegreeMismatchThrows)
{
  EXPECT_THROW(compose(Permutation(2), Permutation(3)), DegreeMismatch);
}

TEST(Permutation, CycleTypeAndContribution)
{
  Permutation p = P("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(p.ramification_contribution(), 3u);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_FALSE(p.is_even());
  EXPECT_TRUE(P("(2 5)", 6).is_transposition());
  EXPECT_FALSE(p.is_transposition());
  EXPECT_EQ(p.least_moved_point(), 0u);
}

TEST(Permutation, RandomAlgebraicLaws)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t d = 1 + rng() % 9;
    auto a = oracle::random_permutation(rng, d);
    auto b = oracle::random_permutation(rng, d);
    auto c = oracle::random_permutation(rng, d);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_TRUE(compose(a, a.inverse()).is_identity());
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(parse_cycles(to_cycle_string(a), d), a);
    EXPECT_EQ(conjugate(a, b), compose(compose(b, a), b.inverse()));
    EXPECT_EQ(commutator(a, b), compose(compose(a, b), compose(a.inverse(), b.inverse())));
    // order is the least positive power giving the identity
    std::uint64_t k = 1;
    for (Permutation x = a; !x.is_identity(); x = compose(x, a))
      ++k;
    EXPECT_EQ(a.order(), k);
  }
}

TEST(Permutation, SymmetricGroupElementsAndFactorial)
{
  auto s4 = symmetric_group_elements(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_TRUE(s4.front().is_identity());
  EXPECT_EQ(factorial(7), 5040u);
  EXPECT_THROW(factorial(30), CapExceeded);
}
