#include "ramify/gen_io.hpp"

#include "ramify/cover_io.hpp"
#include "ramify/errors.hpp"

#include "json_util.hpp"

namespace ramify
{

std::string to_verification_text(VerificationReport const &r)
{
  using detail::Json;
  Json doc;
  doc["schema"] = verification_schema;
  doc["covers"] = r.covers;
  doc["genuinely_ramified"] = r.genuinely_ramified;
  doc["morse"] = r.morse;
  doc["galois"] = r.galois;
  Json checks = Json::object();
  for (std::size_t k = 0; k < check_count; ++k) {
    auto const &c = r.counts[k];
    Json j;
    j["checked"] = c.checked;
    j["passed"] = c.passed;
    j["failed"] = c.checked - c.passed;
    j["vacuous"] = c.vacuous;
    j["skipped"] = c.skipped;
    checks[to_string(static_cast<Check>(k))] = j;
  }
  doc["checks"] = checks;
  doc["violations"] = Json::array();
  for (auto const &v : r.violations) {
    Json j;
    j["check"] = to_string(v.check);
    j["message"] = v.message;
    j["cover"] = detail::cover_to_json(v.cover);
    doc["violations"].push_back(j);
  }
  doc["ok"] = r.ok();
  return doc.dump(2);
}

std::string to_cover_lines(std::vector<BranchedCover> const &covers)
{
  std::string out;
  for (auto const &c : covers) {
    out += to_cover_text(c);
    out += '\n';
  }
  return out;
}

std::vector<BranchedCover> parse_cover_lines(std::string_view text)
{
  std::vector<BranchedCover> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos)
      out.push_back(parse_cover(line));
    start = end + 1;
  }
  return out;
}

} // namespace ramify
