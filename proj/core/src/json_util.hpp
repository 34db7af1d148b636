#ifndef RAMIFY_SRC_JSON_UTIL_HPP
#define RAMIFY_SRC_JSON_UTIL_HPP

#include <json.hpp>

#include "ramify/cover.hpp"

namespace ramify::detail
{

using Json = nlohmann::ordered_json;

Json cover_to_json(BranchedCover const &c);
BranchedCover cover_from_json(Json const &doc);
Json report_to_json(CoverReport const &r);

/// Fixed-format decimal rendering so structured output is byte-stable.
std::string format_real(double value, int significant = 12);

} // namespace ramify::detail

#endif // RAMIFY_SRC_JSON_UTIL_HPP
