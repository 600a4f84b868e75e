#pragma once

// Parsing helpers shared by the command implementations.

#include <string>
#include <vector>

#include "cli_commands.hpp"
#include "schurpb/shapes.hpp"

namespace schurpb::cli {

inline std::string require(const JobConfig& cfg, const std::string& key) {
  auto v = cfg.get(key);
  if (!v || v->empty()) throw InputError("missing --" + key);
  return *v;
}

template <class V>
json tableau_json(const Tableau<V>& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

// One order per corner; a single value is broadcast.
inline std::vector<int> corner_orders(const Partition& shape, const std::string& text) {
  std::vector<int> o = parse_int_list(text);
  const std::size_t c = corners(shape).size();
  if (o.size() == 1 && c > 1) o.assign(c, o[0]);
  if (o.size() != c)
    throw InputError("shape " + shape.to_string() + " has " + std::to_string(c) +
                     " corners but " + std::to_string(o.size()) + " orders were given");
  for (int x : o)
    if (x < 0) throw InputError("orders must be non-negative");
  return o;
}

inline double parse_tol(const JobConfig& cfg, double fallback) {
  const auto v = cfg.get("tol");
  if (!v) return fallback;
  const auto list = parse_real_list(*v);
  if (list.size() != 1 || !(list[0] > 0.0))
    throw InputError("tol must be one positive number, got '" + *v + "'");
  return list[0];
}

}  // namespace schurpb::cli
