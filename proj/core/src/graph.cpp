#include "ramify/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ramify/errors.hpp"

namespace ramify
{

Graph::Graph(std::vector<std::string> labels)
{
  for (auto &l : labels)
    add_vertex(std::move(l));
}

Vertex Graph::add_vertex(std::string label)
{
  if (!_index.emplace(label, _labels.size()).second)
    throw InvalidArgument("duplicate vertex label '" + label + "'");
  _labels.push_back(std::move(label));
  _adjacency.emplace_back();
  return _labels.size() - 1;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
  if (u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("edge endpoint out of range");
  if (u == v || has_edge(u, v))
    return false;
  _adjacency[u].push_back(v);
  _adjacency[v].push_back(u);
  ++_edge_count;
  return true;
}

std::optional<Vertex> Graph::find(std::string_view label) const
{
  auto it = _index.find(std::string(label));
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
  auto const &adj = _adjacency.at(u);
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> result;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : _adjacency[u])
      if (u < v)
        result.emplace_back(u, v);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<long> distances(Graph const &g, Vertex source)
{
  std::vector<long> dist(g.vertex_count(), -1);
  dist.at(source) = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> components(Graph const &g)
{
  std::vector<std::vector<Vertex>> result;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Vertex w : g.neighbors(comp[k]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

Connectivity is_connected(Graph const &g)
{
  if (g.empty())
    return {true, true, 0};
  auto n = components(g).size();
  return {n == 1, false, n};
}

Graph delete_vertex(Graph const &g, Vertex v)
{
  if (v >= g.vertex_count())
    throw InvalidArgument("unknown vertex " + std::to_string(v));
  Graph out;
  std::vector<Vertex> remap(g.vertex_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u != v)
      remap[u] = out.add_vertex(g.label(u));
  for (auto [a, b] : g.edges())
    if (a != v && b != v)
      out.add_edge(remap[a], remap[b]);
  return out;
}

Graph delete_vertex(Graph const &g, std::string_view label)
{
  auto v = g.find(label);
  if (!v)
    throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
  return delete_vertex(g, *v);
}

Vertex diameter_endpoint(Graph const &g)
{
  if (g.vertex_count() < 2)
    throw InvalidArgument("diameter endpoint needs at least two vertices");
  long diameter = -1;
  std::vector<long> eccentricity(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = distances(g, v);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end())
      throw InvalidArgument("diameter endpoint of a disconnected graph");
    eccentricity[v] = *std::max_element(dist.begin(), dist.end());
    diameter = std::max(diameter, eccentricity[v]);
  }
  std::optional<Vertex> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (eccentricity[v] == diameter && (!best || g.label(v) < g.label(*best)))
      best = v;
  return *best;
}

Graph quotient_by_partition(Graph const &g, std::vector<std::vector<Vertex>> const &parts,
                            std::optional<std::vector<std::string>> part_labels)
{
  if (part_labels && part_labels->size() != parts.size())
    throw InvalidArgument("part label count differs from part count");
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(g.vertex_count(), unassigned);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty())
      throw InvalidArgument("empty part in partition");
    for (Vertex v : parts[p]) {
      if (v >= g.vertex_count())
        throw InvalidArgument("partition mentions unknown vertex");
      if (part_of[v] != unassigned)
        throw InvalidArgument("partition parts overlap");
      part_of[v] = p;
    }
  }
  if (std::find(part_of.begin(), part_of.end(), unassigned) != part_of.end())
    throw InvalidArgument("partition does not cover every vertex");

  Graph out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (part_labels) {
      out.add_vertex((*part_labels)[p]);
    } else {
      out.add_vertex(g.label(*std::min_element(parts[p].begin(), parts[p].end())));
    }
  }
  for (auto [a, b] : g.edges())
    out.add_edge(part_of[a], part_of[b]);
  return out;
}

namespace
{

std::string quoted(std::string const &s)
{
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out + "\"";
}

} // anonymous namespace

std::string to_dot(Graph const &g)
{
  std::vector<std::string> labels = g.labels();
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : g.edges()) {
    auto la = g.label(a), lb = g.label(b);
    if (lb < la)
      std::swap(la, lb);
    edges.emplace_back(la, lb);
  }
  std::sort(edges.begin(), edges.end());

  std::string out = "graph G {\n";
  for (auto const &l : labels)
    out += "  " + quoted(l) + ";\n";
  for (auto const &[a, b] : edges)
    out += "  " + quoted(a) + " -- " + quoted(b) + ";\n";
  out += "}\n";
  return out;
}

bool same_labeled_graph(Graph const &a, Graph const &b)
{
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::set<std::pair<std::string, std::string>> ea, eb;
  for (auto [u, v] : a.edges())
    ea.emplace(std::min(a.label(u), a.label(v)), std::max(a.label(u), a.label(v)));
  for (auto [u, v] : b.edges())
    eb.emplace(std::min(b.label(u), b.label(v)), std::max(b.label(u), b.label(v)));
  std::set<std::string> la(a.labels().begin(), a.labels().end());
  std::set<std::string> lb(b.labels().begin(), b.labels().end());
  return la == lb && ea == eb;
}

} // namespace ramify
