#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdfl/laplacian.hpp"

namespace pdfl {

/// What produced a report: library version, the full run configuration, and
/// coarse phase timings.
struct Provenance {
  std::string version;
  nlohmann::json config = nlohmann::json::object();
  std::map<std::string, double> timings_ms;
};

struct Report {
  std::vector<SpectraRecord> records;
  Provenance provenance;
};

/// CSV with header dim,a,b,betti,lambda_min_nonzero,n_eigenvalues; one row
/// per record in order; infinite filtration values print as "inf"; an absent
/// lambda leaves the field empty.  Doubles are shortest-round-trip.
std::string emit_csv(const Report& report);

/// JSON document with the full eigenvalue lists and the provenance block.
/// Infinite a/b are encoded as the string "inf".  Lossless:
/// parse_report_json(emit_json(r)).records == r.records.
std::string emit_json(const Report& report);
Report parse_report_json(std::string_view text);

/// Standalone SVG, one panel per dimension: Betti number (step) and smallest
/// positive eigenvalue (line) against the filtration parameter a.  Markers
/// carry machine-readable data-* attributes for downstream checks.
std::string emit_plot(const Report& report);

}  // namespace pdfl
