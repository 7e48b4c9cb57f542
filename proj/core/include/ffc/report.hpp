#ifndef FFC_REPORT_HPP
#define FFC_REPORT_HPP

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "ffc/dimform.hpp"
#include "ffc/document.hpp"

namespace ffc {

inline constexpr int kReportSchemaVersion = 1;

/// Everything the `report` command emits for one complex.
struct FullReport {
  std::string complex_name;
  std::string ring_description;
  DimReport dim;
  DimReport dim_dual;
  ExtendedDim bh_codim = ExtendedDim::minus_infinity();
  std::optional<HomologyDimension> homology;
  std::optional<BoundReport> bounds;
  AcyclicityReport acyclicity;
  long long timings_ms = 0;
};

/// Runs all analyses. `with_homology` additionally runs the
/// homology-side computation and the bound checks.
FullReport analyze_complex(const FiniteFreeComplex& c,
                           const std::string& name, bool with_homology);

/// JSON form with the stable schema: keys ring, complex_name,
/// schema_version, dim, dim_dual, bh_codim, per_degree_terms, homology,
/// bounds, acyclic, timings_ms. Extended values serialize as "-inf" /
/// "inf" strings, finite ones as integers.
nlohmann::json report_to_json(const FullReport& rep);

}  // namespace ffc

#endif
