#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dnacodes/constraints.hpp"
#include "dnacodes/factory.hpp"
#include "dnacodes/isomap.hpp"
#include "dnacodes/search.hpp"

namespace dnacodes::report {

using nlohmann::json;

inline json words(const std::vector<DnaString>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

inline json to_json(const ConstraintReport& r) {
  return {
      {"length", r.length},
      {"size", r.size},
      {"min_hamming", r.min_hamming},
      {"distance_threshold", r.distance_threshold},
      {"min_reverse", r.min_reverse},
      {"min_reverse_complement", r.min_reverse_complement},
      {"min_complement", r.min_complement},
      {"hamming_ok", r.hamming_ok},
      {"reverse_ok", r.reverse_ok},
      {"reverse_complement_ok", r.reverse_complement_ok},
      {"complement_ok", r.complement_ok},
      {"gc_constant", r.gc_constant ? json(*r.gc_constant) : json(nullptr)},
      {"conflict_free_level", r.conflict_free_level},
      {"complete_conflict_free", r.conflict_free_level == r.length / 2},
      {"hairpin_free", r.hairpin_free},
  };
}

inline json to_json(const PairValidation& v) {
  return {
      {"conflict_safe", v.conflict_safe}, {"hairpin_safe", v.hairpin_safe}, {"reverse_safe", v.reverse_safe},
      {"gc_balanced", v.gc_balanced},     {"distance_ok", v.distance_ok},   {"fully_valid", v.fully_valid},
  };
}

inline json to_json(const BoundTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    entries.push_back({
        {"distance", e.distance},
        {"size", e.size},
        {"trial", e.trial ? json(*e.trial) : json(nullptr)},
        {"code", words(e.code)},
    });
  }
  return {{"seed_set_size", t.seed_set_size}, {"entries", entries}};
}

inline json to_json(const TheoremCheck& c) {
  return {{"name", c.name}, {"gating", c.gating}, {"predicted", c.predicted}, {"measured", c.measured}, {"pass", c.pass}};
}

inline json to_json(const BuildClaims& c) {
  return {{"conflict", c.conflict}, {"hairpin", c.hairpin}, {"reverse", c.reverse}, {"gc_balanced", c.gc_balanced}};
}

inline json to_json(const DnaCodeBuildReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {
      {"code", r.code_name},
      {"pair", {{"x", r.x}, {"y", r.y}, {"ell", r.ell}, {"h0", role_name(r.h0)}, {"flags", to_json(r.pair_flags)}}},
      {"binary_length", r.binary_length},
      {"predicted",
       {{"length", r.predicted_length},
        {"size", r.predicted_size},
        {"min_hamming", r.predicted_distance},
        {"gc_content", r.predicted_gc},
        {"conflict_free_level", r.predicted_conflict_level ? json(*r.predicted_conflict_level) : json(nullptr)},
        {"hairpin_free", r.predicted_hairpin_free}}},
      {"measured", to_json(r.measured)},
      {"claims", to_json(r.claims)},
      {"checks", checks},
  };
}

}  // namespace dnacodes::report
