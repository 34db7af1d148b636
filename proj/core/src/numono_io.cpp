#include "ramify/numono_io.hpp"

#include "ramify/fiber_io.hpp"

#include "json_util.hpp"

namespace ramify
{

namespace
{

using detail::format_real;
using detail::Json;

Json complex_json(std::complex<double> z)
{
  return Json::array({format_real(z.real()), format_real(z.imag())});
}

Json monodromy_json(MonodromyResult const &r)
{
  Json doc;
  doc["schema"] = monodromy_schema;
  doc["polynomial"] = r.polynomial.to_string();
  doc["degree"] = r.degree;
  doc["precision"] = to_string(r.precision_used);
  doc["retries"] = r.retries;
  doc["base_point"] = complex_json(r.base_point);
  doc["base_fiber"] = Json::array();
  for (auto const &z : r.base_fiber)
    doc["base_fiber"].push_back(complex_json(z));
  doc["critical_values"] = Json::array();
  for (std::size_t k = 0; k < r.critical_values.size(); ++k) {
    auto const &v = r.critical_values[k];
    Json j;
    j["value"] = complex_json(v.value);
    j["residual"] = format_real(v.residual, 3);
    j["loop_radius"] = format_real(v.loop_radius);
    j["leading_coefficient_vanishes"] = v.leading_coefficient_vanishes;
    j["coincident_root_pairs"] = v.coincident_root_pairs;
    j["branch_cycle"] = to_cycle_string(r.branch_cycles[k]);
    doc["critical_values"].push_back(j);
  }
  doc["infinity_cycle"] = to_cycle_string(r.infinity_cycle);
  Json gen;
  gen["smooth_affine"] = r.genericity.smooth_affine;
  gen["simple_discriminant_roots"] = r.genericity.simple_discriminant_roots;
  gen["one_double_root_per_fiber"] = r.genericity.one_double_root_per_fiber;
  gen["leading_coefficient_constant"] = r.genericity.leading_coefficient_constant;
  gen["notes"] = r.genericity.notes;
  doc["genericity"] = gen;
  doc["cover"] = detail::cover_to_json(r.cover);
  return doc;
}

Json certificate_json(ProjectionCertificate const &c)
{
  Json doc;
  doc["schema"] = projection_certificate_schema;
  doc["finite_cycles_morse"] = c.finite_cycles_morse;
  doc["infinity_trivial"] = c.infinity_trivial;
  doc["infinity_transposition"] = c.infinity_transposition;
  doc["full_morse"] = c.full_morse;
  doc["group_order"] = c.group_order;
  doc["symmetric_group"] = c.symmetric_group;
  doc["transitivity"] = to_string(c.transitivity);
  doc["total_space_genus"] = c.total_space_genus;
  doc["sd_certificate"] = Json::parse(to_sd_outcome_text(c.sd));
  return doc;
}

} // anonymous namespace

std::string to_monodromy_text(MonodromyResult const &result)
{
  return monodromy_json(result).dump(2);
}

std::string to_projection_certificate_text(ProjectionCertificate const &cert)
{
  return certificate_json(cert).dump(2);
}

std::string to_curve_text(MonodromyResult const &result, ProjectionCertificate const &cert)
{
  Json doc;
  doc["monodromy"] = monodromy_json(result);
  doc["certificate"] = certificate_json(cert);
  return doc.dump(2);
}

} // namespace ramify
