#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "airtime/scenario.hpp"

namespace airtime {

/// Parses a JSON scenario document. Unknown keys, wrong types and missing
/// required fields raise SchemaError; a parsed scenario is also validated.
///
/// {
///   "preset": "table1",            optional; other keys then override it
///   "nodes": [{"id": 1, "join_s": 0, "leave_s": 10, "data_mb": 10,
///              "upload_mbps": 11, "alpha": 1}],
///   "broadcast_mbps": 11, "t_slot_ms": 20,
///   "loss": {"lo": 0, "hi": 0.1}, "pcd_error": {"mean": 0, "stddev": 1},
///   "seed": 7, "go_alpha_factor": 2, "links": [[1, 2], [1, 3]]
/// }
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario_file(const std::string& path);

/// Built-in scenarios: "table1" (six static nodes, 10 s contact, no
/// randomness) and "dynamic4" (four nodes joining and leaving over 20 s).
Scenario preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace airtime
