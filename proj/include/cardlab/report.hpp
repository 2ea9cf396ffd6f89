#pragma once

#include <string>

#include <json.hpp>

#include "cardlab/principles.hpp"

namespace cardlab {

using Json = nlohmann::ordered_json;

/// null for no witness; otherwise an object with a "type" field.
Json witness_to_json(const Witness& w);
/// {pair, verdicts{principle: {verdict, witness}}, conflict, tag, density}
Json report_to_json(const ConflictReport& r);

/// One-line human rendering, e.g. `bijection (0,0) (1,1) (2,4) (3,9)`.
std::string witness_to_text(const Witness& w);
/// Aligned-column text report.
std::string report_to_text(const ConflictReport& r);

}  // namespace cardlab
