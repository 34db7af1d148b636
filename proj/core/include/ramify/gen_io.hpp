#ifndef RAMIFY_GEN_IO_HPP
#define RAMIFY_GEN_IO_HPP

#include <string>
#include <vector>

#include "ramify/gen.hpp"

namespace ramify
{

inline constexpr char const *verification_schema = "ramify.verification/1";

/// Per-check counts and the offending covers in cover-file format.
std::string to_verification_text(VerificationReport const &r);

/// One compact cover document per line.
std::string to_cover_lines(std::vector<BranchedCover> const &covers);

/// Inverse of to_cover_lines; blank lines are ignored.
std::vector<BranchedCover> parse_cover_lines(std::string_view text);

} // namespace ramify

#endif // RAMIFY_GEN_IO_HPP
