#include "ramify/fiber_io.hpp"

#include "json_util.hpp"

namespace ramify
{

namespace
{

using detail::Json;

Json cycle_json(std::vector<Point> const &cycle)
{
  Json a = Json::array();
  for (Point p : cycle)
    a.push_back(p + 1);
  return a;
}

Json pair_json(Point first, Point second) { return Json::array({first + 1, second + 1}); }

Json sd_json(SdOutcome const &outcome)
{
  Json doc;
  if (auto const *cert = std::get_if<SdCertificate>(&outcome)) {
    doc["status"] = "certified";
    doc["degree"] = cert->degree;
    doc["group_order"] = cert->group_order;
    doc["steps"] = cert->steps;
  } else {
    auto const &refusal = std::get<SdRefusal>(outcome);
    doc["status"] = "refused";
    doc["reason"] = to_string(refusal.reason);
    doc["message"] = refusal.message;
  }
  return doc;
}

Json graph_json(Graph const &g)
{
  Json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = Json::array();
  for (auto [a, b] : g.edges())
    doc["edges"].push_back(Json::array({g.label(a), g.label(b)}));
  return doc;
}

Json fiber_json(FiberReport const &r)
{
  Json doc;
  doc["schema"] = fiber_report_schema;
  doc["degree"] = r.degree;
  doc["orbitals"] = Json::array();
  for (auto const &o : r.decomposition.orbitals) {
    Json j;
    j["id"] = o.id;
    j["representative"] = pair_json(o.first, o.second);
    j["size"] = o.size;
    j["is_diagonal"] = o.is_diagonal;
    doc["orbitals"].push_back(j);
  }
  doc["scheme_points"] = Json::array();
  for (auto const &p : r.scheme_points) {
    Json j;
    j["branch_index"] = p.branch_index + 1;
    j["cycle"] = cycle_json(p.cycle);
    j["second_cycle"] = cycle_json(p.second_cycle);
    j["branches"] = Json::array();
    for (auto const &b : p.branches) {
      Json bj;
      bj["orbital"] = b.orbital;
      bj["size"] = b.size;
      bj["representative"] = pair_json(b.first, b.second);
      j["branches"].push_back(bj);
    }
    doc["scheme_points"].push_back(j);
  }
  doc["dual_graph"] = graph_json(r.dual_graph);
  doc["fiber_connected"] = r.fiber_connectivity.connected;
  doc["offdiag_closure_connected"] = r.offdiag.connected;
  doc["offdiag_vacuous"] = r.offdiag.vacuous;
  doc["offdiag_irreducible"] = r.offdiag_irreducible;
  doc["transitivity"] = to_string(r.transitivity);
  doc["genuinely_ramified"] = r.ramification.genuinely_ramified;
  doc["etale_subcover_degree"] = r.ramification.etale_subcover_degree;
  doc["stabilizer_order"] = r.ramification.stabilizer_order;
  doc["inertia_closure_order"] = r.ramification.inertia_closure_order;
  doc["galois_closure_order"] = r.galois_closure_order;
  doc["sd_certificate"] = sd_json(r.sd);
  return doc;
}

} // anonymous namespace

std::string to_analysis_text(CoverReport const &cover, FiberReport const &fiber)
{
  Json doc;
  doc["cover"] = detail::report_to_json(cover);
  doc["fiber"] = fiber_json(fiber);
  return doc.dump(2);
}

std::string to_fiber_report_text(FiberReport const &r) { return fiber_json(r).dump(2); }

std::string to_derived_cover_text(DerivedCover const &d)
{
  Json doc;
  doc["schema"] = derived_cover_schema;
  doc["base_degree"] = d.base_degree;
  doc["degree"] = d.degree;
  doc["base_space_genus"] = d.base_space_genus;
  doc["group_order"] = d.group.order();
  doc["group_generators"] = Json::array();
  for (auto const &g : d.group.generators())
    doc["group_generators"].push_back(to_cycle_string(g));
  doc["local_inertia"] = Json::array();
  for (auto const &l : d.local_inertia) {
    Json j;
    j["branch_index"] = l.branch_index + 1;
    j["cycle"] = cycle_json(l.cycle);
    j["transport"] = to_cycle_string(l.transport);
    j["element"] = to_cycle_string(l.element);
    doc["local_inertia"].push_back(j);
  }
  doc["branch_points"] = d.branch_point_count();
  doc["irreducible"] = d.irreducible;
  doc["morse"] = d.morse;
  doc["genuinely_ramified"] = d.genuinely_ramified;
  doc["etale_subcover_degree"] = d.etale_subcover_degree;
  if (d.total_space_genus)
    doc["total_space_genus"] = *d.total_space_genus;
  else
    doc["total_space_genus"] = nullptr;
  return doc.dump(2);
}

std::string to_sd_outcome_text(SdOutcome const &outcome) { return sd_json(outcome).dump(2); }

std::string to_oracle_text(CayleyOracle const &oracle)
{
  Json doc;
  doc["computed"] = oracle.computed;
  doc["group_order"] = oracle.group_order;
  if (!oracle.computed) {
    doc["skipped_reason"] = oracle.skipped_reason;
    return doc.dump(2);
  }
  doc["galois_graph_vertices"] = oracle.galois_graph.vertex_count();
  doc["galois_graph_edges"] = oracle.galois_graph.edge_count();
  doc["quotient"] = graph_json(oracle.quotient);
  doc["quotient_connected"] = oracle.quotient_connectivity.connected;
  doc["relation_to_dual_graph"] = to_string(oracle.relation);
  doc["consistent"] = oracle.consistent;
  return doc.dump(2);
}

} // namespace ramify
