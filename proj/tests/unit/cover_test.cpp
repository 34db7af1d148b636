#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ramify/cover.hpp"
#include "ramify/cover_io.hpp"
#include "ramify/errors.hpp"

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

bool has(ValidationResult const &v, ViolationKind k)
{
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](Violation const &x) { return x.kind == k; });
}

std::string slurp(std::string const &name)
{
  std::ifstream f(std::string(RAMIFY_TEST_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

} // namespace

TEST(Cover, DihedralExampleValidates)
{
  auto c = cover(4, {"(1 2 3 4)", "(1 3)", "(1 4)(2 3)"});
  EXPECT_TRUE(c.relation_product().is_identity());
  auto v = validate(c);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.report->monodromy_order, 8u);
  EXPECT_EQ(v.report->total_space_genus, 0u);
  EXPECT_FALSE(v.report->is_galois);
  EXPECT_FALSE(v.report->is_morse);
}

TEST(Cover, TripleGenus)
{
  auto c = cover(3, {"(1 2)", "(2 3)", "(1 3 2)"});
  ASSERT_TRUE(validate(c).ok());
  EXPECT_EQ(total_space_genus(c), 0u);
  EXPECT_EQ(monodromy_group(c).order(), 6u);
}

TEST(Cover, CollectsAllViolations)
{
  auto bad = cover(3, {"(1 2)", "id"});
  auto v = validate(bad);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has(v, ViolationKind::identity_branch_cycle));
  EXPECT_TRUE(has(v, ViolationKind::intransitive));

  auto rel = cover(3, {"(1 2)", "(2 3)"});
  EXPECT_TRUE(has(validate(rel), ViolationKind::relation_fails));

  auto handles = cover(2, {}, 1);
  EXPECT_TRUE(has(validate(handles), ViolationKind::handle_count));

  BranchedCover labels = cover(2, {"(1 2)", "(1 2)"});
  labels.labels = std::vector<std::string>{"a"};
  EXPECT_TRUE(has(validate(labels), ViolationKind::label_count));
  EXPECT_THROW(require_valid(labels), InvalidArgument);
}

TEST(Cover, EtaleDoubleCoverOfTorus)
{
  auto c = cover(2, {}, 1, {{"(1 2)", "id"}});
  auto v = validate(c);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.report->total_space_genus, 1u);
}

TEST(Cover, RandomValidCoversMatchGenusOracle)
{
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    std::size_t d = 2 + rng() % 5;
    BranchedCover c;
    c.degree = d;
    std::size_t r = 2 + rng() % 4;
    for (std::size_t k = 0; k + 1 < r; ++k)
      c.branch_cycles.push_back(oracle::random_permutation(rng, d));
    c.branch_cycles.push_back(c.relation_product().inverse());
    auto v = validate(c);
    if (!v.ok())
      continue;
    ++checked;
    EXPECT_EQ(static_cast<long>(v.report->total_space_genus), oracle::genus(c));
    EXPECT_EQ(v.report->monodromy_order, oracle::closure(d, c.generators()).size());
    // relabeling preserves every invariant
    auto sigma = oracle::random_permutation(rng, d);
    auto w = validate(relabel(c, sigma));
    ASSERT_TRUE(w.ok());
    EXPECT_EQ(w.report->total_space_genus, v.report->total_space_genus);
    EXPECT_EQ(w.report->monodromy_order, v.report->monodromy_order);
  }
  EXPECT_GE(checked, 100);
}

TEST(CoverIo, RoundTrip)
{
  auto c = cover(3, {"(1 2)", "(2 3)", "(1 3 2)"}, 1, {{"(1 2 3)", "(1 3)"}});
  c.labels = std::vector<std::string>{"p", "q", "r"};
  EXPECT_EQ(parse_cover(to_cover_text(c)), c);
  EXPECT_EQ(parse_cover(to_cover_text_pretty(c)), c);
}

TEST(CoverIo, DataFiles)
{
  auto t = parse_cover(slurp("trefoil.cover"));
  EXPECT_EQ(t.degree, 3u);
  EXPECT_TRUE(validate(t).ok());
  auto d = parse_cover(slurp("d4.cover"));
  EXPECT_EQ(monodromy_group(d).order(), 8u);
}

TEST(CoverIo, StrictParsing)
{
  EXPECT_THROW(parse_cover("{"), ParseError);
  EXPECT_THROW(parse_cover("[]"), ParseError);
  EXPECT_THROW(parse_cover(R"j({"degree": 2, "base_genus": 0, "handles": [], "branch_cycles": [], "x": 1})j"),
               ParseError);
  EXPECT_THROW(parse_cover(R"j({"degree": 2, "base_genus": 0, "handles": [], "branch_cycles": ["(1 3)"]})j"),
               ParseError);
  EXPECT_THROW(parse_cover(R"j({"base_genus": 0, "handles": [], "branch_cycles": []})j"), ParseError);
}
