#pragma once

// IdentityReport <-> JSON with a fixed field order:
//   {id, ranges, cases, pass, counterexamples[], vacuous}

#include <string>

#include <json.hpp>

#include "deficit/identities.hpp"

namespace deficit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const IdentityReport& r) {
  ordered_json j;
  j["id"] = r.id;
  ordered_json ranges = ordered_json::object();
  for (const auto& [name, span] : r.ranges) ranges[name] = span;
  j["ranges"] = ranges;
  j["cases"] = r.cases;
  j["pass"] = r.pass;
  ordered_json ces = ordered_json::array();
  for (const auto& ce : r.counterexamples) {
    ordered_json c;
    ordered_json params = ordered_json::object();
    for (const auto& [name, span] : r.ranges) {
      if (name == "n") params["n"] = ce.params.n;
      if (name == "k") params["k"] = ce.params.k;
      if (name == "m") params["m"] = ce.params.m;
    }
    c["params"] = params;
    c["sides"] = ce.sides;
    c["boundary"] = ce.boundary;
    ces.push_back(std::move(c));
  }
  j["counterexamples"] = ces;
  j["vacuous"] = r.vacuous;
  return j;
}

inline IdentityReport report_from_json(const ordered_json& j) {
  IdentityReport r;
  r.id = j.at("id").get<std::string>();
  for (const auto& [name, span] : j.at("ranges").items()) r.ranges.emplace_back(name, span.get<std::string>());
  r.cases = j.at("cases").get<std::uint64_t>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& c : j.at("counterexamples")) {
    Counterexample ce;
    const auto& params = c.at("params");
    if (params.contains("n")) ce.params.n = params["n"].get<SeqIndex>();
    if (params.contains("k")) ce.params.k = params["k"].get<int>();
    if (params.contains("m")) ce.params.m = params["m"].get<int>();
    ce.sides = c.at("sides").get<std::vector<std::string>>();
    ce.boundary = c.at("boundary").get<bool>();
    r.counterexamples.push_back(std::move(ce));
  }
  r.vacuous = j.at("vacuous").get<bool>();
  return r;
}

}  // namespace deficit
