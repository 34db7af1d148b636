#include <gtest/gtest.h>

#include <random>

#include "ramify/errors.hpp"
#include "ramify/graph.hpp"

using namespace ramify;

namespace
{

Graph path(std::size_t n)
{
  Graph g;
  for (std::size_t i = 0; i < n; ++i)
    g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

} // namespace

TEST(Graph, BasicsAndDot)
{
  Graph g({"b", "a"});
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_FALSE(g.add_edge(0, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_vertex("a"), InvalidArgument);
  EXPECT_EQ(to_dot(g), "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}

TEST(Graph, Connectivity)
{
  EXPECT_TRUE(is_connected(Graph()).vacuous);
  Graph g = path(4);
  EXPECT_TRUE(is_connected(g).connected);
  Graph h = delete_vertex(g, "v1");
  auto c = is_connected(h);
  EXPECT_FALSE(c.connected);
  EXPECT_EQ(c.components, 2u);
  EXPECT_THROW(delete_vertex(g, "zz"), InvalidArgument);
}

TEST(Graph, DiameterEndpointOfPathIsAnEnd)
{
  Graph g = path(5);
  EXPECT_EQ(g.label(diameter_endpoint(g)), "v0");
  auto d = distances(g, 0);
  EXPECT_EQ(d[4], 4);
}

TEST(Graph, DiameterEndpointRejectsDisconnected)
{
  Graph g({"a", "b"});
  EXPECT_THROW(diameter_endpoint(g), InvalidArgument);
}

TEST(Graph, RandomClaimProperty)
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 2 + rng() % 9;
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
      g.add_vertex(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i)
      g.add_edge(i, rng() % i);
    for (std::size_t k = rng() % (n + 1); k > 0; --k)
      g.add_edge(rng() % n, rng() % n);
    Vertex v = diameter_endpoint(g);
    auto dv = distances(g, v);
    long ecc = *std::max_element(dv.begin(), dv.end());
    for (Vertex u = 0; u < n; ++u) {
      auto du = distances(g, u);
      EXPECT_LE(*std::max_element(du.begin(), du.end()), ecc);
    }
    EXPECT_TRUE(is_connected(delete_vertex(g, v)).connected);
  }
}

TEST(Graph, QuotientByPartition)
{
  Graph g = path(4); // v0 - v1 - v2 - v3
  Graph q = quotient_by_partition(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(q.vertex_count(), 2u);
  EXPECT_EQ(q.edge_count(), 1u);
  EXPECT_EQ(q.label(0), "v0");
  EXPECT_THROW(quotient_by_partition(g, {{0, 1}, {1, 2, 3}}), InvalidArgument);
  EXPECT_THROW(quotient_by_partition(g, {{0, 1}}), InvalidArgument);
  Graph same = quotient_by_partition(g, {{0}, {1}, {2}, {3}});
  EXPECT_TRUE(same_labeled_graph(same, g));
}
