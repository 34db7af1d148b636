#ifndef RAMIFY_FIBER_HPP
#define RAMIFY_FIBER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/graph.hpp"
#include "ramify/group.hpp"

namespace ramify
{

/// Orbit of the monodromy group on ordered pairs of fiber points: one
/// irreducible component of Y x_X Y.
struct Orbital
{
  std::size_t id;
  Point first;  ///< least pair of the orbit, 0-based
  Point second;
  std::size_t size;
  bool is_diagonal;
  std::vector<PairIndex> pairs; ///< sorted, encoded i * degree + j
};

struct OrbitalDecomposition
{
  std::size_t degree = 0;
  std::vector<Orbital> orbitals; ///< ordered by least pair; id 0 is the diagonal
  std::vector<std::size_t> orbital_of_pair;

  std::size_t orbital_of(Point i, Point j) const { return orbital_of_pair[i * degree + j]; }
};

/// A <c_j>-orbit on kappa x kappa': one local branch of Y x_X Y through the
/// point (kappa, kappa') over the j-th branch point.
struct LocalBranch
{
  std::size_t orbital;
  std::size_t size;
  Point first; ///< least pair of the branch, 0-based
  Point second;
};

struct SchemePoint
{
  std::size_t branch_index;
  std::vector<Point> cycle;        ///< kappa, in cycle order from its least point
  std::vector<Point> second_cycle; ///< kappa'
  std::vector<LocalBranch> branches;
};

struct GenuineRamification
{
  bool genuinely_ramified;
  /// [G : HN], the degree of the largest etale subcover of the Galois closure
  /// through which f factors.
  std::uint64_t etale_subcover_degree;
  std::uint64_t monodromy_order;
  std::uint64_t stabilizer_order;
  std::uint64_t inertia_closure_order;
  std::uint64_t product_order;
};

struct OffDiagonalConnectivity
{
  bool connected;
  /// d = 1: Y' is empty and the verdict is vacuous.
  bool vacuous;
  std::size_t components;
};

struct SdCertificate
{
  std::size_t degree;
  std::uint64_t group_order;
  std::vector<std::string> steps;
};

enum class SdRefusalReason
{
  degree_below_two,
  not_morse,
  not_genuinely_ramified
};

char const *to_string(SdRefusalReason reason);

struct SdRefusal
{
  SdRefusalReason reason;
  std::string message;
};

using SdOutcome = std::variant<SdCertificate, SdRefusal>;

struct LocalInertia
{
  std::size_t branch_index;
  std::vector<Point> cycle; ///< the point of Y over the branch point
  Permutation transport;    ///< u with u(cycle[0]) = 0
  Permutation element;      ///< u o c^e o u^-1, fixes 0
};

/// The restriction q'_1 : Y' -> Y of the first projection, as the action of
/// Stab_G(0) on the remaining d - 1 fiber points.
struct DerivedCover
{
  std::size_t base_degree;
  std::size_t degree;
  std::size_t base_space_genus;
  GeneratedGroup group; ///< permutations of degree base_degree fixing 0
  std::vector<LocalInertia> local_inertia;
  bool irreducible;
  bool morse;
  bool genuinely_ramified;
  std::uint64_t etale_subcover_degree;
  /// Riemann-Hurwitz over Y; empty when Y' is reducible.
  std::optional<std::size_t> total_space_genus;

  std::size_t branch_point_count() const;
};

enum class GraphRelation
{
  equal,
  quotient_proper_subgraph,
  dual_proper_subgraph,
  incomparable
};

char const *to_string(GraphRelation relation);

struct CayleyOracle
{
  bool computed = false;
  std::string skipped_reason;
  std::uint64_t group_order = 0;
  Graph galois_graph;
  Graph quotient;
  Connectivity quotient_connectivity{true, true, 0};
  GraphRelation relation = GraphRelation::equal;
  /// quotient connected implies dual graph connected
  bool consistent = true;
};

struct FiberReport
{
  std::size_t degree;
  OrbitalDecomposition decomposition;
  std::vector<SchemePoint> scheme_points;
  Graph dual_graph;
  Connectivity fiber_connectivity;
  OffDiagonalConnectivity offdiag;
  bool offdiag_irreducible;
  Transitivity transitivity;
  GenuineRamification ramification;
  std::uint64_t galois_closure_order;
  SdOutcome sd;
};

constexpr std::uint64_t default_oracle_cap = 10080;

OrbitalDecomposition orbital_decomposition(BranchedCover const &c);
std::vector<Orbital> orbitals(BranchedCover const &c);

std::vector<SchemePoint> scheme_points(BranchedCover const &c, OrbitalDecomposition const &o);
std::vector<SchemePoint> scheme_points(BranchedCover const &c);

/// Vertex k is labeled "o<k>" and stands for orbital k; o0 is the diagonal.
Graph dual_graph(OrbitalDecomposition const &o, std::vector<SchemePoint> const &points);
Graph dual_graph(BranchedCover const &c);

/// Decided group-theoretically: H = Stab_G(0), N = normal closure of the
/// branch cycles, genuinely ramified iff HN = G.
GenuineRamification genuinely_ramified(BranchedCover const &c);

/// Dual graph minus the diagonal vertex.
OffDiagonalConnectivity offdiag_closure_connected(Graph const &dual);
OffDiagonalConnectivity offdiag_closure_connected(BranchedCover const &c);

std::uint64_t galois_closure_order(BranchedCover const &c);

/// Certificate that the Galois closure has group S_d, or the hypothesis that
/// fails. Throws TheoremViolation if the hypotheses hold but a check fails.
SdOutcome certify_sd(BranchedCover const &c);

/// The cover of X given by the monodromy acting on the pairs of `orbital`,
/// relabeled 1..|orbital| in increasing pair order.
BranchedCover component_cover(BranchedCover const &c, Orbital const &orbital);

DerivedCover derived_cover_q1(BranchedCover const &c);

/// Galois-level graph on the elements of G, edge g ~ h iff g o h^-1 is a
/// nontrivial element of a conjugate of some <c_j>, then its quotient under
/// g -> orbital of (0, g(0)). Skipped when |G| > cap.
CayleyOracle cayley_quotient_oracle(BranchedCover const &c, std::uint64_t cap = default_oracle_cap);

FiberReport analyze_fiber(BranchedCover const &c);

} // namespace ramify

#endif // RAMIFY_FIBER_HPP
