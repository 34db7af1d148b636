#include "ramify/fiber.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ramify/errors.hpp"

namespace ramify
{

char const *to_string(SdRefusalReason reason)
{
  switch (reason) {
    case SdRefusalReason::degree_below_two:
      return "degree_below_two";
    case SdRefusalReason::not_morse:
      return "not_morse";
    case SdRefusalReason::not_genuinely_ramified:
      return "not_genuinely_ramified";
  }
  return "?";
}

char const *to_string(GraphRelation relation)
{
  switch (relation) {
    case GraphRelation::equal:
      return "equal";
    case GraphRelation::quotient_proper_subgraph:
      return "quotient_proper_subgraph";
    case GraphRelation::dual_proper_subgraph:
      return "dual_proper_subgraph";
    case GraphRelation::incomparable:
      return "incomparable";
  }
  return "?";
}

std::size_t DerivedCover::branch_point_count() const
{
  return static_cast<std::size_t>(std::count_if(local_inertia.begin(), local_inertia.end(),
                                                [](LocalInertia const &l) {
                                                  return !l.element.is_identity();
                                                }));
}

OrbitalDecomposition orbital_decomposition(BranchedCover const &c)
{
  require_valid(c);
  GeneratedGroup g = monodromy_group(c);
  Partition blocks = pair_orbits(g);

  OrbitalDecomposition result;
  result.degree = c.degree;
  result.orbital_of_pair.assign(c.degree * c.degree, 0);
  auto const d = static_cast<PairIndex>(c.degree);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    PairIndex least = blocks[k].front();
    Orbital o{k, least / d, least % d, blocks[k].size(), least / d == least % d, {}};
    o.pairs.assign(blocks[k].begin(), blocks[k].end());
    for (PairIndex p : o.pairs)
      result.orbital_of_pair[p] = k;
    result.orbitals.push_back(std::move(o));
  }
  return result;
}

std::vector<Orbital> orbitals(BranchedCover const &c)
{
  return orbital_decomposition(c).orbitals;
}

std::vector<SchemePoint> scheme_points(BranchedCover const &c, OrbitalDecomposition const &o)
{
  std::vector<SchemePoint> result;
  auto const d = static_cast<PairIndex>(c.degree);
  for (std::size_t j = 0; j < c.branch_cycles.size(); ++j) {
    Permutation const &cj = c.branch_cycles[j];
    auto cycles = cj.cycles(true);
    for (auto const &kappa : cycles) {
      for (auto const &kappa2 : cycles) {
        SchemePoint point{j, kappa, kappa2, {}};
        std::size_t e = kappa.size(), e2 = kappa2.size();
        std::vector<bool> seen(e * e2, false);
        for (std::size_t s0 = 0; s0 < e; ++s0) {
          for (std::size_t t0 = 0; t0 < e2; ++t0) {
            if (seen[s0 * e2 + t0])
              continue;
            PairIndex least = std::numeric_limits<PairIndex>::max();
            std::size_t size = 0;
            for (std::size_t s = s0, t = t0; !seen[s * e2 + t]; s = (s + 1) % e, t = (t + 1) % e2) {
              seen[s * e2 + t] = true;
              least = std::min(least, kappa[s] * d + kappa2[t]);
              ++size;
            }
            point.branches.push_back({o.orbital_of_pair[least], size, least / d, least % d});
          }
        }
        result.push_back(std::move(point));
      }
    }
  }
  return result;
}

std::vector<SchemePoint> scheme_points(BranchedCover const &c)
{
  return scheme_points(c, orbital_decomposition(c));
}

namespace
{

std::string orbital_label(std::size_t id) { return "o" + std::to_string(id); }

} // anonymous namespace

Graph dual_graph(OrbitalDecomposition const &o, std::vector<SchemePoint> const &points)
{
  Graph g;
  for (auto const &orb : o.orbitals)
    g.add_vertex(orbital_label(orb.id));
  for (auto const &point : points) {
    std::set<std::size_t> meeting;
    for (auto const &b : point.branches)
      meeting.insert(b.orbital);
    for (auto a = meeting.begin(); a != meeting.end(); ++a)
      for (auto b = std::next(a); b != meeting.end(); ++b)
        g.add_edge(*a, *b);
  }
  return g;
}

Graph dual_graph(BranchedCover const &c)
{
  auto o = orbital_decomposition(c);
  return dual_graph(o, scheme_points(c, o));
}

GenuineRamification genuinely_ramified(BranchedCover const &c)
{
  require_valid(c);
  GeneratedGroup g = monodromy_group(c);
  GeneratedGroup h = point_stabilizer(g, 0);
  GeneratedGroup n = normal_closure(c.branch_cycles, g);
  GeneratedGroup hn = join(h, n);

  GenuineRamification result;
  result.monodromy_order = g.order();
  result.stabilizer_order = h.order();
  result.inertia_closure_order = n.order();
  result.product_order = hn.order();
  result.genuinely_ramified = hn.order() == g.order();
  result.etale_subcover_degree = g.order() / hn.order();
  return result;
}

OffDiagonalConnectivity offdiag_closure_connected(Graph const &dual)
{
  if (dual.vertex_count() <= 1)
    return {true, true, 0};
  auto diag = dual.find("o0");
  if (!diag)
    throw InvalidArgument("dual graph has no diagonal vertex");
  Connectivity conn = is_connected(delete_vertex(dual, *diag));
  return {conn.connected, false, conn.components};
}

OffDiagonalConnectivity offdiag_closure_connected(BranchedCover const &c)
{
  return offdiag_closure_connected(dual_graph(c));
}

std::uint64_t galois_closure_order(BranchedCover const &c)
{
  require_valid(c);
  return monodromy_group(c).order();
}

SdOutcome certify_sd(BranchedCover const &c)
{
  require_valid(c);
  if (c.degree < 2)
    return SdRefusal{SdRefusalReason::degree_below_two, "degree " + std::to_string(c.degree) + " < 2"};
  if (!is_morse(c))
    return SdRefusal{SdRefusalReason::not_morse, "not Morse: some branch cycle is not a transposition"};
  GenuineRamification gr = genuinely_ramified(c);
  if (!gr.genuinely_ramified)
    return SdRefusal{SdRefusalReason::not_genuinely_ramified,
                     "not genuinely ramified: etale subcover of degree " +
                         std::to_string(gr.etale_subcover_degree)};

  SdCertificate cert{c.degree, 0, {}};
  cert.steps.push_back("hypothesis: every branch cycle is a transposition (Morse)");
  cert.steps.push_back("hypothesis: HN = G with |G| = " + std::to_string(gr.monodromy_order) +
                       " (genuinely ramified)");

  auto decomposition = orbital_decomposition(c);
  auto dual = dual_graph(decomposition, scheme_points(c, decomposition));
  auto offdiag = offdiag_closure_connected(dual);
  if (!offdiag.connected)
    throw TheoremViolation("off-diagonal closure disconnected for a genuinely ramified cover: " +
                           std::to_string(offdiag.components) + " components");
  cert.steps.push_back("off-diagonal closure connected in the dual graph");

  std::size_t count = decomposition.orbitals.size();
  if (count != 2)
    throw TheoremViolation("Morse genuinely ramified cover has " + std::to_string(count) +
                           " orbitals, expected 2");
  cert.steps.push_back("exactly 2 orbitals: off-diagonal part irreducible, G two-transitive");
  if (transitivity(monodromy_group(c)) != Transitivity::two_transitive)
    throw TheoremViolation("orbital count 2 but group not two-transitive");

  auto transposition = std::find_if(c.branch_cycles.begin(), c.branch_cycles.end(),
                                    [](Permutation const &p) { return p.is_transposition(); });
  if (transposition == c.branch_cycles.end())
    throw TheoremViolation("no transposition among branch cycles");
  cert.steps.push_back("G contains the transposition " + to_cycle_string(*transposition));

  std::uint64_t expected = factorial(c.degree);
  if (gr.monodromy_order != expected)
    throw TheoremViolation("Galois closure order " + std::to_string(gr.monodromy_order) +
                           " differs from " + std::to_string(c.degree) + "! = " +
                           std::to_string(expected));
  cert.group_order = gr.monodromy_order;
  cert.steps.push_back("|G| = " + std::to_string(expected) + " = " + std::to_string(c.degree) +
                       "!, so G = S_" + std::to_string(c.degree));
  return cert;
}

BranchedCover component_cover(BranchedCover const &c, Orbital const &orbital)
{
  auto const d = static_cast<PairIndex>(c.degree);
  std::unordered_map<PairIndex, Point> position;
  for (std::size_t k = 0; k < orbital.pairs.size(); ++k)
    position.emplace(orbital.pairs[k], static_cast<Point>(k));

  auto induced = [&](Permutation const &g) {
    std::vector<Point> images(orbital.pairs.size());
    for (std::size_t k = 0; k < orbital.pairs.size(); ++k) {
      PairIndex p = orbital.pairs[k];
      auto it = position.find(g(p / d) * d + g(p % d));
      if (it == position.end())
        throw InvalidArgument("orbital is not invariant under the monodromy group");
      images[k] = it->second;
    }
    return Permutation::from_images(std::move(images));
  };

  BranchedCover out;
  out.degree = orbital.pairs.size();
  out.base_genus = c.base_genus;
  for (auto const &[a, b] : c.handles)
    out.handles.emplace_back(induced(a), induced(b));
  for (auto const &cycle : c.branch_cycles)
    out.branch_cycles.push_back(induced(cycle));
  out.labels = c.labels;

  auto check = validate(out);
  if (!check.ok())
    throw ModelInconsistency("induced component cover is invalid: " + check.violations.front().message);
  return out;
}

DerivedCover derived_cover_q1(BranchedCover const &c)
{
  require_valid(c);
  if (c.degree < 2)
    throw InvalidArgument("derived cover needs degree >= 2");
  GeneratedGroup g = monodromy_group(c);
  auto transversal = g.transversal(0);
  GeneratedGroup h = point_stabilizer(g, 0);

  std::vector<LocalInertia> inertia;
  std::vector<Permutation> nontrivial;
  std::size_t ramification = 0;
  bool morse = true;
  for (std::size_t j = 0; j < c.branch_cycles.size(); ++j) {
    Permutation const &cj = c.branch_cycles[j];
    for (auto const &kappa : cj.cycles(true)) {
      Permutation u = transversal[kappa.front()]->inverse();
      Permutation element = conjugate(cj.pow(static_cast<long long>(kappa.size())), u);
      if (element(0) != 0)
        throw ModelInconsistency("local inertia element moves the distinguished point");
      if (!element.is_identity()) {
        nontrivial.push_back(element);
        ramification += element.ramification_contribution();
        morse = morse && element.is_transposition();
      }
      inertia.push_back({j, kappa, std::move(u), std::move(element)});
    }
  }

  // Action of H on {1, ..., d-1}.
  bool irreducible = true;
  for (auto const &block : h.orbits())
    if (block.front() != 0 && block.size() != c.degree - 1)
      irreducible = false;

  GeneratedGroup inertia_closure = normal_closure(nontrivial, h);
  std::uint64_t product_order = h.order();
  if (c.degree >= 3) {
    GeneratedGroup stab = point_stabilizer(h, 1);
    product_order = join(stab, inertia_closure).order();
  }

  std::size_t base_genus_y = total_space_genus(c);
  std::optional<std::size_t> genus;
  if (irreducible) {
    long long twice = static_cast<long long>(c.degree - 1) *
                          (2 * static_cast<long long>(base_genus_y) - 2) +
                      static_cast<long long>(ramification);
    if (twice < -2 || twice % 2 != 0)
      throw ModelInconsistency("Riemann-Hurwitz over Y gives 2g-2 = " + std::to_string(twice));
    genus = static_cast<std::size_t>((twice + 2) / 2);
  }

  return DerivedCover{c.degree,
                      c.degree - 1,
                      base_genus_y,
                      std::move(h),
                      std::move(inertia),
                      irreducible,
                      morse,
                      product_order == h.order(),
                      h.order() / product_order,
                      genus};
}

CayleyOracle cayley_quotient_oracle(BranchedCover const &c, std::uint64_t cap)
{
  require_valid(c);
  GeneratedGroup g = monodromy_group(c);
  CayleyOracle result;
  result.group_order = g.order();
  if (g.order() > cap) {
    result.skipped_reason = "group order " + std::to_string(g.order()) + " exceeds cap " +
                            std::to_string(cap);
    return result;
  }

  auto elements = g.elements(cap);
  std::unordered_map<Permutation, Vertex> vertex_of;
  for (auto const &e : elements) {
    vertex_of.emplace(e, result.galois_graph.add_vertex(to_cycle_string(e)));
  }

  std::unordered_set<Permutation> inertia;
  for (auto const &cj : c.branch_cycles) {
    auto order = static_cast<long long>(cj.order());
    for (long long k = 1; k < order; ++k) {
      Permutation power = cj.pow(k);
      for (auto const &gamma : elements)
        inertia.insert(conjugate(power, gamma));
    }
  }
  std::vector<Permutation> sorted_inertia(inertia.begin(), inertia.end());
  std::sort(sorted_inertia.begin(), sorted_inertia.end());
  for (auto const &gamma : elements)
    for (auto const &x : sorted_inertia)
      result.galois_graph.add_edge(vertex_of.at(gamma), vertex_of.at(compose(x, gamma)));

  auto decomposition = orbital_decomposition(c);
  std::vector<std::vector<Vertex>> parts(decomposition.orbitals.size());
  for (auto const &gamma : elements)
    parts[decomposition.orbital_of(0, gamma(0))].push_back(vertex_of.at(gamma));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < parts.size(); ++k)
    labels.push_back(orbital_label(k));
  result.quotient = quotient_by_partition(result.galois_graph, parts, labels);
  result.quotient_connectivity = is_connected(result.quotient);
  result.computed = true;

  Graph dual = dual_graph(decomposition, scheme_points(c, decomposition));
  auto quotient_edges = result.quotient.edges();
  std::set<Edge> eq(quotient_edges.begin(), quotient_edges.end());
  auto dual_edges = dual.edges();
  std::set<Edge> ed(dual_edges.begin(), dual_edges.end());
  bool q_in_d = std::includes(ed.begin(), ed.end(), eq.begin(), eq.end());
  bool d_in_q = std::includes(eq.begin(), eq.end(), ed.begin(), ed.end());
  if (q_in_d && d_in_q)
    result.relation = GraphRelation::equal;
  else if (q_in_d)
    result.relation = GraphRelation::quotient_proper_subgraph;
  else if (d_in_q)
    result.relation = GraphRelation::dual_proper_subgraph;
  else
    result.relation = GraphRelation::incomparable;
  result.consistent = !result.quotient_connectivity.connected || is_connected(dual).connected;
  return result;
}

FiberReport analyze_fiber(BranchedCover const &c)
{
  require_valid(c);
  auto decomposition = orbital_decomposition(c);
  auto points = scheme_points(c, decomposition);
  Graph dual = dual_graph(decomposition, points);
  Connectivity fiber = is_connected(dual);
  auto offdiag = offdiag_closure_connected(dual);
  GeneratedGroup g = monodromy_group(c);
  bool irreducible = c.degree >= 2 && decomposition.orbitals.size() == 2;

  return FiberReport{c.degree,
                     std::move(decomposition),
                     std::move(points),
                     std::move(dual),
                     fiber,
                     offdiag,
                     irreducible,
                     transitivity(g),
                     genuinely_ramified(c),
                     g.order(),
                     certify_sd(c)};
}

} // namespace ramify
