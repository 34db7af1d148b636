#include "ramify/cover_io.hpp"

#include <cstdio>
#include <set>

#include "json_util.hpp"
#include "ramify/errors.hpp"

namespace ramify
{

namespace detail
{

Json cover_to_json(BranchedCover const &c)
{
  Json doc;
  doc["degree"] = c.degree;
  doc["base_genus"] = c.base_genus;
  doc["handles"] = Json::array();
  for (auto const &[a, b] : c.handles)
    doc["handles"].push_back(Json::array({to_cycle_string(a), to_cycle_string(b)}));
  doc["branch_cycles"] = Json::array();
  for (auto const &cycle : c.branch_cycles)
    doc["branch_cycles"].push_back(to_cycle_string(cycle));
  if (c.labels)
    doc["labels"] = *c.labels;
  return doc;
}

namespace
{

std::size_t read_count(Json const &doc, char const *field)
{
  if (!doc.contains(field))
    throw ParseError(std::string("missing field '") + field + "'");
  auto const &v = doc.at(field);
  if (!v.is_number_unsigned())
    throw ParseError(std::string("field '") + field + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Permutation read_perm(Json const &v, std::size_t degree, std::string const &where)
{
  if (!v.is_string())
    throw ParseError(where + " must be a cycle string");
  try {
    return parse_cycles(v.get<std::string>(), degree);
  } catch (ParseError const &e) {
    throw ParseError(where + ": " + e.what());
  }
}

} // anonymous namespace

BranchedCover cover_from_json(Json const &doc)
{
  if (!doc.is_object())
    throw ParseError("cover document must be an object");
  static std::set<std::string> const known{"degree", "base_genus", "handles", "branch_cycles",
                                           "labels"};
  for (auto const &item : doc.items())
    if (!known.count(item.key()))
      throw ParseError("unknown field '" + item.key() + "'");

  BranchedCover c;
  c.degree = read_count(doc, "degree");
  if (c.degree == 0)
    throw ParseError("degree must be positive");
  c.base_genus = read_count(doc, "base_genus");

  if (!doc.contains("handles") || !doc.at("handles").is_array())
    throw ParseError("field 'handles' must be an array");
  std::size_t h = 0;
  for (auto const &pair : doc.at("handles")) {
    ++h;
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("handle " + std::to_string(h) + " must be a 2-element array");
    c.handles.emplace_back(read_perm(pair[0], c.degree, "handle " + std::to_string(h)),
                           read_perm(pair[1], c.degree, "handle " + std::to_string(h)));
  }

  if (!doc.contains("branch_cycles") || !doc.at("branch_cycles").is_array())
    throw ParseError("field 'branch_cycles' must be an array");
  std::size_t j = 0;
  for (auto const &v : doc.at("branch_cycles"))
    c.branch_cycles.push_back(read_perm(v, c.degree, "branch cycle " + std::to_string(++j)));

  if (doc.contains("labels")) {
    auto const &labels = doc.at("labels");
    if (!labels.is_array())
      throw ParseError("field 'labels' must be an array of strings");
    std::vector<std::string> out;
    for (auto const &l : labels) {
      if (!l.is_string())
        throw ParseError("field 'labels' must be an array of strings");
      out.push_back(l.get<std::string>());
    }
    c.labels = std::move(out);
  }
  return c;
}

Json report_to_json(CoverReport const &r)
{
  Json doc;
  doc["valid"] = r.valid;
  doc["degree"] = r.degree;
  doc["base_genus"] = r.base_genus;
  doc["branch_points"] = r.branch_point_count;
  doc["total_space_genus"] = r.total_space_genus;
  doc["monodromy_order"] = r.monodromy_order;
  doc["is_morse"] = r.is_morse;
  doc["is_galois"] = r.is_galois;
  doc["is_connected"] = r.is_connected;
  return doc;
}

std::string format_real(double value, int significant)
{
  if (value == 0.0)
    value = 0.0; // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, value);
  return buf;
}

} // namespace detail

BranchedCover parse_cover(std::string_view text)
{
  detail::Json doc;
  try {
    doc = detail::Json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    throw ParseError(std::string("malformed cover document: ") + e.what(), e.byte);
  }
  return detail::cover_from_json(doc);
}

std::string to_cover_text(BranchedCover const &c) { return detail::cover_to_json(c).dump(); }

std::string to_cover_text_pretty(BranchedCover const &c)
{ return detail::cover_to_json(c).dump(2); }

std::string to_report_text(CoverReport const &r) { return detail::report_to_json(r).dump(2); }

} // namespace ramify
