#ifndef RAMIFY_FIBER_IO_HPP
#define RAMIFY_FIBER_IO_HPP

#include <string>

#include "ramify/cover.hpp"
#include "ramify/fiber.hpp"

namespace ramify
{

inline constexpr char const *fiber_report_schema = "ramify.fiber-report/1";
inline constexpr char const *derived_cover_schema = "ramify.derived-cover/1";

/// Structured analysis document: the cover report and the fiber report.
std::string to_analysis_text(CoverReport const &cover, FiberReport const &fiber);

std::string to_fiber_report_text(FiberReport const &r);
std::string to_derived_cover_text(DerivedCover const &d);
std::string to_sd_outcome_text(SdOutcome const &outcome);
std::string to_oracle_text(CayleyOracle const &oracle);

} // namespace ramify

#endif // RAMIFY_FIBER_IO_HPP
