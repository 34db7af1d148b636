#ifndef RAMIFY_GRAPH_HPP
#define RAMIFY_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ramify
{

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with uniquely labeled vertices.
class Graph
{
public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);

  /// Throws InvalidArgument on a duplicate label.
  Vertex add_vertex(std::string label);

  /// Loops and repeated edges are ignored; returns whether an edge was added.
  bool add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return _labels.size(); }
  std::size_t edge_count() const { return _edge_count; }
  bool empty() const { return _labels.empty(); }

  std::string const &label(Vertex v) const { return _labels.at(v); }
  std::vector<std::string> const &labels() const { return _labels; }
  std::optional<Vertex> find(std::string_view label) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Vertex> const &neighbors(Vertex v) const { return _adjacency.at(v); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

private:
  std::vector<std::string> _labels;
  std::vector<std::vector<Vertex>> _adjacency;
  std::unordered_map<std::string, Vertex> _index;
  std::size_t _edge_count = 0;
};

struct Connectivity
{
  bool connected;
  /// Set for the empty graph, which counts as connected by convention.
  bool vacuous;
  std::size_t components;

  explicit operator bool() const { return connected; }
};

Connectivity is_connected(Graph const &g);

/// Connected components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<Vertex>> components(Graph const &g);

/// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<long> distances(Graph const &g, Vertex source);

/// Removes `v` and its incident edges; remaining vertices keep their
/// relative order. Throws InvalidArgument for an unknown vertex.
Graph delete_vertex(Graph const &g, Vertex v);
Graph delete_vertex(Graph const &g, std::string_view label);

/// An endpoint of a pair realizing the diameter: the least-labeled vertex
/// having some vertex at maximum distance. Requires a connected graph with
/// at least two vertices.
Vertex diameter_endpoint(Graph const &g);

/// One vertex per part, an edge between distinct parts whenever some edge
/// crosses them. Parts must cover every vertex exactly once. Part labels
/// default to the label of the least vertex of the part.
Graph quotient_by_partition(Graph const &g, std::vector<std::vector<Vertex>> const &parts,
                            std::optional<std::vector<std::string>> part_labels = std::nullopt);

/// Deterministic DOT rendering: vertices sorted by label, edges sorted
/// lexicographically by their (smaller, larger) label pair.
std::string to_dot(Graph const &g);

/// Same vertex labels and same edge set between equally labeled vertices.
bool same_labeled_graph(Graph const &a, Graph const &b);

} // namespace ramify

#endif // RAMIFY_GRAPH_HPP
