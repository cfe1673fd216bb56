#pragma once

// JSON views of the public result types.  Documents emitted by the CLI all
// carry schema_version and a kind discriminator; layouts are described
// under schema/ in the repository root.

#include <string>

#include <json.hpp>

#include "gwbez/geometry.hpp"
#include "gwbez/gw.hpp"
#include "gwbez/local_degree.hpp"
#include "gwbez/verify.hpp"

namespace gwbez {

nlohmann::json gw_to_json(const GWElement& x);
nlohmann::json invariants_to_json(const InvariantVector& iv);
nlohmann::json degree_to_json(const LocalDegreeResult& r);
nlohmann::json point_to_json(const PointSummary& p);
nlohmann::json orientability_to_json(const OrientabilityReport& r);
nlohmann::json report_to_json(const VerificationReport& rep);
nlohmann::json tally_to_json(const CrossingTally& t);
nlohmann::json fq_to_json(const FqReport& r);
nlohmann::json qconditions_to_json(const QConditions& q);
nlohmann::json lineconic_to_json(const LineConicReport& r);

/// Stamps a payload with schema_version and its kind.
nlohmann::json with_schema(const std::string& kind, nlohmann::json payload);

}  // namespace gwbez
