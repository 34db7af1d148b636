#ifndef RAMIFY_NUMONO_IO_HPP
#define RAMIFY_NUMONO_IO_HPP

#include <string>

#include "ramify/numono.hpp"

namespace ramify
{

inline constexpr char const *monodromy_schema = "ramify.monodromy/1";
inline constexpr char const *projection_certificate_schema = "ramify.projection-certificate/1";

/// Structured monodromy result; the "cover" member is a cover document.
std::string to_monodromy_text(MonodromyResult const &result);
std::string to_projection_certificate_text(ProjectionCertificate const &cert);
/// Both of the above in one document.
std::string to_curve_text(MonodromyResult const &result, ProjectionCertificate const &cert);

} // namespace ramify

#endif // RAMIFY_NUMONO_IO_HPP
