#ifndef RAMIFY_COVER_HPP
#define RAMIFY_COVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/permutation.hpp"

namespace ramify
{

/// Combinatorial model of a finite cover f : Y -> X of a genus-g base.
///
/// The surface relation is
///   [a_1,b_1] o ... o [a_g,b_g] o c_1 o ... o c_r = id
/// with [a,b] = a o b o a^-1 o b^-1. Cycle lengths of c_j are the
/// ramification indices over the j-th branch point (tame model).
struct BranchedCover
{
  std::size_t degree = 1;
  std::size_t base_genus = 0;
  std::vector<std::pair<Permutation, Permutation>> handles;
  std::vector<Permutation> branch_cycles;
  std::optional<std::vector<std::string>> labels;

  /// All handle generators followed by the branch cycles.
  std::vector<Permutation> generators() const;

  /// Left-hand side of the surface relation.
  Permutation relation_product() const;

  friend bool operator==(BranchedCover const &, BranchedCover const &) = default;
};

enum class ViolationKind
{
  degree_mismatch,
  handle_count,
  relation_fails,
  intransitive,
  identity_branch_cycle,
  label_count,
  genus_inconsistent
};

char const *to_string(ViolationKind kind);

struct Violation
{
  ViolationKind kind;
  std::string message;
};

struct CoverReport
{
  bool valid = false;
  std::size_t degree = 0;
  std::size_t base_genus = 0;
  std::size_t branch_point_count = 0;
  std::size_t total_space_genus = 0;
  std::uint64_t monodromy_order = 0;
  bool is_morse = false;
  bool is_galois = false;
  bool is_connected = false;
};

struct ValidationResult
{
  std::vector<Violation> violations;
  std::optional<CoverReport> report;

  bool ok() const { return violations.empty(); }
};

/// Checks every invariant and reports all violations found.
ValidationResult validate(BranchedCover const &c);

/// Throws InvalidArgument listing the violations unless `c` is valid.
void require_valid(BranchedCover const &c);

/// Group generated by all handles and branch cycles.
GeneratedGroup monodromy_group(BranchedCover const &c);

/// Riemann-Hurwitz genus of Y. Throws ModelInconsistency when the count is
/// negative or odd.
std::size_t total_space_genus(BranchedCover const &c);

/// Every branch cycle is a single transposition.
bool is_morse(BranchedCover const &c);

/// Monodromy acts regularly: |G| = d.
bool is_galois(BranchedCover const &c);

/// Conjugates every generator by `sigma` (relabels the fiber).
BranchedCover relabel(BranchedCover const &c, Permutation const &sigma);

} // namespace ramify

#endif // RAMIFY_COVER_HPP
