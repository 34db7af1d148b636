#ifndef RAMIFY_GEN_HPP
#define RAMIFY_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramify/cover.hpp"

namespace ramify
{

/// Inclusive range of small non-negative integers.
struct Range
{
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool contains(std::size_t v) const { return lo <= v && v <= hi; }
};

/// Parses "a" or "a..b".
Range parse_range(std::string const &text);

struct CorpusSpec
{
  Range degree{1, 4};
  Range genus{0, 0};
  Range branch_points{0, 4};
  bool morse_only = false;
  bool dedup = false;
  /// Random mode when samples > 0; the seed is then mandatory.
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;

  bool random_mode() const { return samples > 0; }

  /// Throws InvalidArgument on empty ranges or a missing seed.
  void check() const;
};

/// Free tuples enumerated per (d, g, r) are capped at this many.
constexpr std::uint64_t enumeration_cap = 50'000'000;

/// Rejection budget of random_cover.
constexpr std::size_t rejection_budget = 100'000;

using CoverSink = std::function<void(BranchedCover const &)>;

/// Streams every valid cover in the spec's parameter box, in a deterministic
/// order: by degree, genus and branch count, then lexicographically in the
/// free generators. The last branch cycle is forced by the surface relation.
/// Throws CapExceeded outside d <= 5 (g = 0), d <= 3 (g = 1), d <= 2 (g >= 2).
void enumerate_covers(CorpusSpec const &spec, CoverSink const &sink);
std::vector<BranchedCover> enumerate_covers(CorpusSpec const &spec);

/// Least concatenated image sequence over all simultaneous relabelings.
std::vector<Point> canonical_key(BranchedCover const &c);
BranchedCover canonical_form(BranchedCover const &c);

/// One random valid cover; deterministic in (spec, seed). Throws Infeasible
/// when the parameters admit no cover or the rejection budget runs out.
BranchedCover random_cover(CorpusSpec const &spec, std::uint64_t seed);

/// spec.samples random covers from spec.seed (sample k uses a seed derived
/// from the pair (seed, k)).
std::vector<BranchedCover> random_covers(CorpusSpec const &spec);

enum class Check
{
  equivalence,     ///< HN = G iff the dual graph is connected
  theorem_main,    ///< genuinely ramified implies connected off-diagonal closure
  two_transitive,  ///< two orbitals iff two-transitive
  sd_cover,        ///< Morse and genuinely ramified implies Galois-closure order d!
  derived_cover,   ///< q'_1 invariants for d >= 3 Morse genuinely ramified covers
  cayley_oracle    ///< Cayley quotient equals the dual graph for Galois covers
};

inline constexpr std::size_t check_count = 6;

char const *to_string(Check check);

struct CheckCount
{
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
};

struct CorpusViolation
{
  Check check;
  std::string message;
  BranchedCover cover;
};

struct VerificationReport
{
  std::size_t covers = 0;
  std::size_t genuinely_ramified = 0;
  std::size_t morse = 0;
  std::size_t galois = 0;
  CheckCount counts[check_count];
  /// Sorted by check, then by cover text.
  std::vector<CorpusViolation> violations;

  bool ok() const { return violations.empty(); }
  CheckCount const &count(Check c) const { return counts[static_cast<std::size_t>(c)]; }
};

/// Checks one cover; the result has covers = 1.
VerificationReport verify_cover(BranchedCover const &c,
                                std::uint64_t oracle_cap = 10080);

/// Verifies a list of covers on `jobs` worker threads (0: hardware
/// concurrency). The report does not depend on `jobs`.
VerificationReport verify_covers(std::vector<BranchedCover> const &covers, unsigned jobs = 0,
                                 std::uint64_t oracle_cap = 10080);

/// Random corpus in random mode, exhaustive corpus otherwise.
VerificationReport verify_corpus(CorpusSpec const &spec, unsigned jobs = 0);

void merge(VerificationReport &into, VerificationReport const &from);

} // namespace ramify

#endif // RAMIFY_GEN_HPP
