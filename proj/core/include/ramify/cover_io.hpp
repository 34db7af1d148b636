#ifndef RAMIFY_COVER_IO_HPP
#define RAMIFY_COVER_IO_HPP

#include <string>
#include <string_view>

#include "ramify/cover.hpp"

namespace ramify
{

/// Reads a cover document:
///
///   {"degree": 3, "base_genus": 0, "handles": [],
///    "branch_cycles": ["(1 2)", "(2 3)", "(1 3 2)"], "labels": [...]}
///
/// Unknown fields, wrong types and bad cycle strings raise ParseError.
/// Cover validity is not checked here.
BranchedCover parse_cover(std::string_view text);

/// Canonical single-line JSON form; parse_cover inverts it.
std::string to_cover_text(BranchedCover const &c);

/// Same document, indented for humans.
std::string to_cover_text_pretty(BranchedCover const &c);

std::string to_report_text(CoverReport const &r);

} // namespace ramify

#endif // RAMIFY_COVER_IO_HPP
