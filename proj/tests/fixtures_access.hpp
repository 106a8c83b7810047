#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spincover/gf2.hpp"

#ifndef SPINCOVER_FIXTURE_PATH
#error "SPINCOVER_FIXTURE_PATH must point at fixtures/fixtures.json"
#endif

namespace testing_fixtures {

using FJson = nlohmann::ordered_json;

inline const FJson& all() {
  static const FJson doc = [] {
    std::ifstream in(SPINCOVER_FIXTURE_PATH);
    if (!in) throw std::runtime_error("cannot open " SPINCOVER_FIXTURE_PATH);
    return FJson::parse(in);
  }();
  return doc;
}

inline const FJson& get(const std::string& name) {
  for (const auto& f : all()) {
    if (f["name"] == name) return f;
  }
  throw std::out_of_range("no fixture named " + name);
}

inline const FJson& expected(const std::string& name) { return get(name)["expected"]; }
inline const FJson& input(const std::string& name) { return get(name)["input"]; }

inline spincover::GF2Mat matrix(const FJson& rows) {
  std::string text;
  for (const auto& r : rows) text += r.get<std::string>() + "\n";
  return spincover::GF2Mat::parse(text);
}

}  // namespace testing_fixtures
