#include "ffc/report.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

namespace ffc {

namespace {

nlohmann::json extdim_json(const ExtendedDim& d) {
  if (d.is_finite()) return d.value();
  return d.to_string();
}

nlohmann::json term_rows_json(const DimReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.per_degree) {
    rows.push_back({{"n", row.degree},
                    {"rank", row.expected_rank},
                    {"generators", row.generator_count},
                    {"gb_size", row.gb_size},
                    {"term", extdim_json(row.term)}});
  }
  return rows;
}

}  // namespace

FullReport analyze_complex(const FiniteFreeComplex& c, const std::string& name,
                           bool with_homology) {
  const auto start = std::chrono::steady_clock::now();
  FullReport rep;
  rep.complex_name = name;
  rep.ring_description = c.ring()->to_string();
  rep.dim = dim_via_fitting(c);
  rep.dim_dual = dim_dual_via_fitting(c);
  rep.bh_codim = bh_codimension(c);
  rep.acyclicity = is_acyclic(c);
  if (with_homology) {
    rep.homology = dim_via_homology(c);
    rep.bounds = check_bounds(c, rep.homology->table);
  }
  rep.timings_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

nlohmann::json report_to_json(const FullReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["ring"] = rep.ring_description;
  j["complex_name"] = rep.complex_name;
  j["dim"] = extdim_json(rep.dim.result);
  j["dim_dual"] = extdim_json(rep.dim_dual.result);
  j["bh_codim"] = extdim_json(rep.bh_codim);
  j["per_degree_terms"] = {{"mainthm", term_rows_json(rep.dim)},
                           {"codim1", term_rows_json(rep.dim_dual)}};
  if (rep.homology) {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& [n, entry] : rep.homology->table.per_degree) {
      h.push_back({{"n", n},
                   {"generators", entry.presentation.generator_count},
                   {"relations", entry.presentation.relations.source_rank()},
                   {"dim", extdim_json(entry.dimension)}});
    }
    j["homology"] = {{"dim", extdim_json(rep.homology->dim)},
                     {"inf_h", extdim_json(rep.homology->table.inf_h)},
                     {"sup_h", extdim_json(rep.homology->table.sup_h)},
                     {"per_degree", std::move(h)}};
  }
  if (rep.bounds) {
    j["bounds"] = {{"exact", rep.bounds->exact},
                   {"homogeneous", rep.bounds->homogeneous},
                   {"upper", extdim_json(rep.bounds->upper)},
                   {"lower", extdim_json(rep.bounds->lower)},
                   {"upper_holds", rep.bounds->upper_holds},
                   {"lower_holds", rep.bounds->lower_holds}};
  }
  j["acyclic"] = rep.acyclicity.acyclic;
  j["timings_ms"] = rep.timings_ms;
  return j;
}

}  // namespace ffc
