#include "airtime/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "airtime/errors.hpp"

namespace airtime {

namespace {

using nlohmann::json;

void only_keys(const json& object, std::string_view where, std::set<std::string> allowed) {
  if (!object.is_object()) throw SchemaError(fmt::format("{}: expected an object", where));
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      throw SchemaError(fmt::format("{}: unknown key '{}'", where, item.key()));
    }
  }
}

double number(const json& object, const std::string& key, std::string_view where) {
  const json& v = object.at(key);
  if (!v.is_number()) throw SchemaError(fmt::format("{}.{}: expected a number", where, key));
  return v.get<double>();
}

std::uint64_t unsigned_integer(const json& v, std::string_view where) {
  if (!v.is_number_unsigned()) {
    throw SchemaError(fmt::format("{}: expected a non-negative integer", where));
  }
  return v.get<std::uint64_t>();
}

NodeId node_ref(const json& v, std::string_view where) {
  const std::uint64_t id = unsigned_integer(v, where);
  if (id > 0xffffffffULL) throw SchemaError(fmt::format("{}: id out of range", where));
  return node_id(static_cast<std::uint32_t>(id));
}

ScenarioNode parse_node(const json& j, std::size_t index) {
  const std::string where = fmt::format("nodes[{}]", index);
  only_keys(j, where,
            {"id", "join_s", "leave_s", "data_mb", "data_mb_per_peer", "upload_mbps", "alpha"});
  for (const char* key : {"id", "join_s", "leave_s"}) {
    if (!j.contains(key)) throw SchemaError(fmt::format("{}: missing '{}'", where, key));
  }
  ScenarioNode n;
  n.id = node_ref(j.at("id"), where + ".id");
  n.join_s = number(j, "join_s", where);
  n.leave_s = number(j, "leave_s", where);
  if (j.contains("data_mb")) n.data_mb = number(j, "data_mb", where);
  if (j.contains("data_mb_per_peer")) n.data_mb_per_peer = number(j, "data_mb_per_peer", where);
  if (n.data_mb.has_value() == n.data_mb_per_peer.has_value()) {
    throw SchemaError(fmt::format("{}: give exactly one of data_mb and data_mb_per_peer", where));
  }
  if (j.contains("upload_mbps")) n.upload_mbps = number(j, "upload_mbps", where);
  if (j.contains("alpha")) n.alpha = number(j, "alpha", where);
  return n;
}

Scenario from_json(const json& doc) {
  only_keys(doc, "scenario",
            {"preset", "nodes", "broadcast_mbps", "t_slot_ms", "loss", "pcd_error", "seed",
             "go_alpha_factor", "links"});
  Scenario s;
  if (doc.contains("preset")) {
    if (!doc.at("preset").is_string()) throw SchemaError("preset: expected a string");
    try {
      s = preset(doc.at("preset").get<std::string>());
    } catch (const InvalidInput& e) {
      throw SchemaError(e.what());
    }
  } else if (!doc.contains("nodes")) {
    throw SchemaError("scenario: missing 'nodes'");
  }
  if (doc.contains("nodes")) {
    const json& nodes = doc.at("nodes");
    if (!nodes.is_array() || nodes.empty()) throw SchemaError("nodes: expected a non-empty array");
    s.nodes.clear();
    for (std::size_t i = 0; i < nodes.size(); ++i) s.nodes.push_back(parse_node(nodes[i], i));
  }
  if (doc.contains("broadcast_mbps")) s.broadcast_mbps = number(doc, "broadcast_mbps", "scenario");
  if (doc.contains("t_slot_ms")) s.t_slot_s = number(doc, "t_slot_ms", "scenario") / 1000.0;
  if (doc.contains("go_alpha_factor")) {
    s.go_alpha_factor = number(doc, "go_alpha_factor", "scenario");
  }
  if (doc.contains("seed")) s.seed = unsigned_integer(doc.at("seed"), "seed");
  if (doc.contains("loss")) {
    const json& loss = doc.at("loss");
    if (loss.is_null()) {
      s.loss.reset();
    } else {
      only_keys(loss, "loss", {"lo", "hi"});
      if (!loss.contains("lo") || !loss.contains("hi")) throw SchemaError("loss: needs lo and hi");
      s.loss = LossModel{number(loss, "lo", "loss"), number(loss, "hi", "loss")};
    }
  }
  if (doc.contains("pcd_error")) {
    const json& err = doc.at("pcd_error");
    if (err.is_null()) {
      s.pcd_error.reset();
    } else {
      only_keys(err, "pcd_error", {"mean", "stddev"});
      if (!err.contains("stddev")) throw SchemaError("pcd_error: missing 'stddev'");
      PcdErrorModel model;
      model.stddev = number(err, "stddev", "pcd_error");
      if (err.contains("mean")) model.mean = number(err, "mean", "pcd_error");
      s.pcd_error = model;
    }
  }
  if (doc.contains("links")) {
    const json& links = doc.at("links");
    if (links.is_null()) {
      s.links.reset();
    } else {
      if (!links.is_array()) throw SchemaError("links: expected an array of [a, b] pairs");
      std::vector<std::pair<NodeId, NodeId>> edges;
      for (std::size_t i = 0; i < links.size(); ++i) {
        const std::string where = fmt::format("links[{}]", i);
        if (!links[i].is_array() || links[i].size() != 2) {
          throw SchemaError(fmt::format("{}: expected [a, b]", where));
        }
        edges.emplace_back(node_ref(links[i][0], where), node_ref(links[i][1], where));
      }
      s.links = std::move(edges);
    }
  }
  try {
    s.validate();
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(fmt::format("not valid JSON: {}", e.what()));
  }
  return from_json(doc);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(fmt::format("cannot open scenario file '{}'", path));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

Scenario preset(std::string_view name) {
  Scenario s;
  if (name == "table1") {
    const double loads[] = {10, 20, 40, 40, 60, 80};
    for (std::uint32_t i = 0; i < 6; ++i) {
      ScenarioNode n;
      n.id = node_id(i + 1);
      n.join_s = 0.0;
      n.leave_s = 10.0;
      n.data_mb = loads[i];
      s.nodes.push_back(n);
    }
    // n4 reaches everybody; n5 and n6 carry more data but do not.
    std::vector<std::pair<NodeId, NodeId>> links;
    for (std::uint32_t i = 1; i <= 6; ++i) {
      if (i != 4) links.emplace_back(node_id(4), node_id(i));
    }
    links.emplace_back(node_id(1), node_id(2));
    links.emplace_back(node_id(3), node_id(5));
    links.emplace_back(node_id(5), node_id(6));
    s.links = std::move(links);
    s.t_slot_s = 0.020;
    return s;
  }
  if (name == "dynamic4") {
    const double join[] = {0, 0, 4, 12};
    const double leave[] = {8, 16, 20, 20};
    const double per_peer[] = {25, 20, 15, 10};
    for (std::uint32_t i = 0; i < 4; ++i) {
      ScenarioNode n;
      n.id = node_id(i + 1);
      n.join_s = join[i];
      n.leave_s = leave[i];
      n.data_mb_per_peer = per_peer[i];
      s.nodes.push_back(n);
    }
    s.t_slot_s = 0.100;
    s.loss = LossModel{0.0, 0.1};
    return s;
  }
  throw InvalidInput(fmt::format("unknown preset '{}' (expected table1 or dynamic4)", name));
}

std::vector<std::string> preset_names() { return {"table1", "dynamic4"}; }

}  // namespace airtime
