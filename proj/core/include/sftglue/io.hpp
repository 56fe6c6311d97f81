#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sftglue/graph_analysis.hpp"
#include "sftglue/hyperspace.hpp"
#include "sftglue/sft_graph.hpp"
#include "sftglue/stable_unstable.hpp"
#include "sftglue/symbolic_point.hpp"
#include "sftglue/tracing.hpp"

namespace sftglue::io {

using json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with the 1-based line
/// and column of the offending byte.
json parse_json(std::string_view text);

/// {"states": n, "matrix": [[0,1,...], ...]}
json to_json(const SftGraph& g);
SftGraph graph_from_json(const json& j);

/// {"left_period": "12", "core": "121", "right_period": "1", "anchor": 0}
/// Words use 1-based labels (see format_word).
json to_json(const SymbolicPoint& x);
SymbolicPoint point_from_json(const json& j);

/// Orbit sequence: [{"point": <point literal>, "m": 3}, ...]
json to_json(const OrbitSequence& c);
OrbitSequence orbit_sequence_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const SpaceClass& c);
SpaceClass space_class_from_json(const json& j);

json to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const json& j);

json to_json(const EntropyEstimate& e);

/// {"z": <point>, "gaps": [t_j], "resolution": N, "verified": bool}
struct TraceCertificate {
  SymbolicPoint z;
  GapSchedule gap;
  int resolution = 1;
  bool verified = false;

  friend bool operator==(const TraceCertificate&,
                         const TraceCertificate&) = default;
};
json to_json(const TraceCertificate& c);
TraceCertificate trace_certificate_from_json(const json& j);

json to_json(const CantorApproximation& c);
json to_json(const StableCensus& c);

/// Per M, per gap: {"uncovered_time": i, "uncovered_element": <point>, ...}
/// or {"tracing_set": [...], "gap": t}.
json to_json(const HyperRefutation& r);
HyperRefutation hyper_refutation_from_json(const json& j);

}  // namespace sftglue::io
