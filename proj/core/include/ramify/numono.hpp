#ifndef RAMIFY_NUMONO_HPP
#define RAMIFY_NUMONO_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/fiber.hpp"
#include "ramify/group.hpp"
#include "ramify/permutation.hpp"
#include "ramify/rational_poly.hpp"

namespace ramify
{

enum class Precision
{
  double_precision, ///< 53-bit mantissa
  quad_precision    ///< 113-bit mantissa
};

char const *to_string(Precision p);

struct TrackingConfig
{
  Precision precision = Precision::double_precision;
  /// Convergence tolerance of the fiber root solver.
  double tolerance = 1e-10;
  /// A step is accepted only if every root moves less than
  /// (minimum pairwise root distance) / safety_factor.
  double safety_factor = 3.0;
  int max_refinement_depth = 40;
  /// Direction of the base point as seen from the centroid of the critical
  /// values; 0 puts it to the right.
  double base_angle = 0.0;
  /// Worker threads for loop tracking; 0 means hardware concurrency.
  unsigned threads = 0;
};

struct CriticalValue
{
  std::complex<double> value;
  /// |R(x0)| relative to sum |r_k| |x0|^k.
  double residual;
  double loop_radius;
  bool leading_coefficient_vanishes;
  /// Pairs of (numerically) coincident fiber roots at this value.
  std::size_t coincident_root_pairs;
};

struct GenericityReport
{
  bool smooth_affine = false;
  bool simple_discriminant_roots = false;
  bool one_double_root_per_fiber = false;
  bool leading_coefficient_constant = false;
  std::vector<std::string> notes;
};

/// Critical x-values of the projection (x, y) -> x.
struct CriticalValues
{
  UPoly resultant; ///< Res_y(p, dp/dy), exact
  std::vector<CriticalValue> values;
  GenericityReport genericity;
};

struct MonodromyResult
{
  PlanePolynomial polynomial;
  std::size_t degree;
  std::complex<double> base_point;
  std::vector<std::complex<double>> base_fiber;
  /// In loop order.
  std::vector<CriticalValue> critical_values;
  /// c_1..c_r, one per critical value, in loop order (may include identities).
  std::vector<Permutation> branch_cycles;
  Permutation infinity_cycle;
  GenericityReport genericity;
  Precision precision_used;
  std::size_t retries;
  /// Nontrivial finite cycles in loop order, then c_inf when nontrivial.
  BranchedCover cover;
};

struct ProjectionCertificate
{
  bool finite_cycles_morse;
  bool infinity_trivial;
  bool infinity_transposition;
  bool full_morse;
  std::uint64_t group_order;
  bool symmetric_group;
  Transitivity transitivity;
  std::size_t total_space_genus;
  SdOutcome sd;
};

/// Roots of Res_y(p, dp/dy). Throws SingularCurve when p has an affine
/// singular point and NonGenericProjection when the resultant has a
/// repeated root.
CriticalValues critical_values(PlanePolynomial const &p, TrackingConfig const &cfg = {});

/// Tracks the fiber along a loop around every critical value and around all
/// of them, and assembles the branch-cycle tuple over the projective line.
/// Retries once at quad precision if the product relation fails.
MonodromyResult track_monodromy(PlanePolynomial const &p, TrackingConfig const &cfg = {});

ProjectionCertificate certify_projection(MonodromyResult const &result);
ProjectionCertificate certify_projection(PlanePolynomial const &p, TrackingConfig const &cfg = {});

/// Complex roots of a polynomial with complex coefficients (low to high).
std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> const &coeffs,
                                                   double tolerance = 1e-14);

} // namespace ramify

#endif // RAMIFY_NUMONO_HPP
