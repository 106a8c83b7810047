#pragma once

// Structured documents for the CLI. Every document carries the schema tag;
// keys are emitted in a fixed order so output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "spincover/homology.hpp"
#include "spincover/orbits.hpp"
#include "spincover/report.hpp"

namespace spincover {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "spincover/1";

inline Json document(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline Json to_json(const GF2Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).to_string());
  return rows;
}

inline Json to_json(const std::vector<GF2Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

inline Json to_json(const OrbitReport& report) {
  Json orbits = Json::array();
  for (const auto& o : report.orbits) {
    Json e;
    e["label"] = o.label;
    e["size"] = o.size();
    e["members"] = to_json(o.members);
    orbits.push_back(e);
  }
  return orbits;
}

inline Json to_json(const CheckReport& rep) {
  Json j;
  j["name"] = rep.name;
  j["passed"] = rep.passed;
  j["cases"] = rep.cases;
  if (!rep.passed) j["failure"] = rep.failure;
  Json facts = Json::object();
  for (const auto& [k, v] : rep.facts) facts[k] = v;
  j["facts"] = facts;
  return j;
}

inline Json to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["epsilon"] = p.epsilon;
  j["relator"] = p.main_relator();
  j["text"] = p.text();
  j["embedding"] = p.embedding_text();
  return j;
}

}  // namespace spincover
