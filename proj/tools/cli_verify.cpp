#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "cli_commands.hpp"
#include "cli_util.hpp"
#include "schurpb/analytic.hpp"
#include "schurpb/bernoulli.hpp"

namespace schurpb::cli {

namespace {

struct PointResult {
  bool pass = true;
  long checked = 0;
  std::string detail;
};

struct GridPoint {
  std::string label;
  std::function<PointResult()> run;
};

PointResult from_report(const IdentityReport& r) {
  return {r.passed(), static_cast<long>(r.checked),
          r.mismatches.empty() ? "" : r.mismatches.front()};
}

// Every tableau of the shape with entries in [lo, hi] off the corners and
// [corner_lo, hi] on them, row-major odometer order.
std::vector<WeightTableau> all_weights(const Partition& shape, int lo, int hi, int corner_lo) {
  std::vector<bool> corner(static_cast<std::size_t>(shape.weight()), false);
  for (const Cell& c : corners(shape)) corner[static_cast<std::size_t>(shape.cell_index(c))] = true;
  std::vector<int> first(corner.size());
  for (std::size_t i = 0; i < corner.size(); ++i) first[i] = corner[i] ? corner_lo : lo;
  std::vector<WeightTableau> out;
  if (std::any_of(first.begin(), first.end(), [&](int f) { return f > hi; })) return out;
  std::vector<int> cur = first;
  while (true) {
    out.emplace_back(shape, cur);
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == hi) {
      cur[i - 1] = first[i - 1];
      --i;
    }
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

// Three deterministic weight patterns cycling through 1..3.
std::vector<WeightTableau> patterned_weights(const Partition& shape) {
  std::vector<WeightTableau> out;
  for (int offset = 0; offset < 3; ++offset) {
    std::vector<int> v;
    for (int i = 0; i < shape.weight(); ++i) v.push_back((i + offset) % 3 + 1);
    out.emplace_back(shape, v);
  }
  return out;
}

std::string label(const Partition& shape, const WeightTableau& k) {
  return "shape=" + shape.to_string() + " k=" + tableau_json(k).dump();
}

std::vector<Partition> shapes_or(const JobConfig& cfg, std::vector<std::string> defaults) {
  std::vector<Partition> out;
  if (auto v = cfg.get("shape")) {
    // Several shapes separate with ';'.
    std::string text = *v;
    std::size_t start = 0;
    while (true) {
      const auto semi = text.find(';', start);
      out.push_back(Partition::parse(text.substr(start, semi == std::string::npos
                                                           ? std::string::npos
                                                           : semi - start)));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else {
    for (const auto& d : defaults) out.push_back(Partition::parse(d));
  }
  return out;
}

int int_param(const JobConfig& cfg, const std::string& key, int fallback) {
  const auto v = cfg.get(key);
  if (!v) return fallback;
  const auto list = parse_int_list(*v);
  if (list.size() != 1) throw InputError("--" + key + " takes one integer");
  return list[0];
}

json shape_list(const std::vector<Partition>& shapes) {
  json out = json::array();
  for (const auto& s : shapes) out.push_back(s.to_string());
  return out;
}

void require_hooks(const std::vector<Partition>& shapes) {
  for (const auto& s : shapes) require_hook(s);
}

// Integer Schur zeta arguments: off-corner entries 1..2, corners 2..3.
std::vector<Tableau<double>> zeta_grid(const Partition& shape) {
  std::vector<Tableau<double>> out;
  std::vector<bool> corner(static_cast<std::size_t>(shape.weight()), false);
  for (const Cell& c : corners(shape)) corner[static_cast<std::size_t>(shape.cell_index(c))] = true;
  for (const auto& w : all_weights(shape, 1, 3, 2)) {
    bool keep = true;
    for (std::size_t i = 0; i < corner.size(); ++i)
      if (!corner[i] && w[i] > 2) keep = false;
    if (keep) out.push_back(w.map([](int x) { return static_cast<double>(x); }));
  }
  return out;
}

std::vector<GridPoint> build_grid(const std::string& id, const JobConfig& cfg, json& grid) {
  std::vector<GridPoint> pts;
  const int w = int_param(cfg, "max-weight", id == "bc-binomial" ? 4 : 3);
  if (w < 1) throw InputError("--max-weight must be >= 1");
  grid["max_weight"] = w;

  if (id == "bc-binomial") {
    const int order = int_param(cfg, "orders", 4);
    grid["orders"] = order;
    std::vector<Partition> shapes;
    if (cfg.get("shape"))
      shapes = shapes_or(cfg, {});
    else
      for (int n = 1; n <= w; ++n)
        for (auto& p : partitions_of(n)) shapes.push_back(p);
    grid["shapes"] = shape_list(shapes);
    for (const auto& shape : shapes) {
      const std::vector<int> orders(corners(shape).size(), order);
      for (const auto& k : patterned_weights(shape))
        pts.push_back({label(shape, k), [=] { return from_report(verify_bc_binomial(shape, k, orders)); }});
    }
  } else if (id == "stirling-hook" || id == "hook-recurrence" || id == "hook-bc-relation" ||
             id == "derivative-lemma") {
    const std::vector<Partition> shapes =
        id == "derivative-lemma" ? shapes_or(cfg, {"2,1", "3,1", "2,1,1"})
        : id == "stirling-hook"  ? shapes_or(cfg, {"2,1", "2,1,1"})
                                 : shapes_or(cfg, {"2,1", "3,1,1"});
    require_hooks(shapes);
    const int order = int_param(cfg, "orders", id == "derivative-lemma" ? 8
                                               : id == "stirling-hook" ? 6
                                                                       : 5);
    if (order < 0) throw InputError("--orders must be non-negative");
    grid["shapes"] = shape_list(shapes);
    grid["orders"] = order;
    const int corner_lo = (id == "hook-recurrence" || id == "hook-bc-relation") ? 2 : 1;
    grid["corner_min_weight"] = corner_lo;
    const std::vector<int> orders{order, order};
    for (const auto& shape : shapes) {
      for (const auto& k : all_weights(shape, 1, w, corner_lo)) {
        std::function<PointResult()> run;
        if (id == "stirling-hook")
          run = [=] { return from_report(verify_stirling_hook(shape, k, orders)); };
        else if (id == "hook-recurrence")
          run = [=] { return from_report(verify_hook_recurrence(shape, k, orders)); };
        else if (id == "hook-bc-relation")
          run = [=] { return from_report(verify_hook_bc_relation(shape, k, orders)); };
        else
          run = [=] { return from_report(verify_derivative_lemma(shape, k, orders)); };
        pts.push_back({label(shape, k), run});
      }
    }
  } else if (id == "leading-coefficient") {
    const std::vector<Partition> shapes =
        shapes_or(cfg, {"2,1", "3,1", "2,1,1", "3,1,1", "2,1,1,1", "3,1,1,1"});
    require_hooks(shapes);
    grid["shapes"] = shape_list(shapes);
    for (const auto& shape : shapes)
      for (const auto& k : all_weights(shape, 1, w, 1))
        pts.push_back({label(shape, k), [=] { return from_report(verify_leading_coefficient(shape, k)); }});
  } else if (id == "decomposition") {
    const std::vector<Partition> shapes = shapes_or(cfg, {"2", "1,1", "2,1", "2,2"});
    const double tol = parse_tol(cfg, 1e-6);
    grid["shapes"] = shape_list(shapes);
    grid["tol"] = tol;
    grid["entries"] = "off-corner 1..2, corners 2..3";
    for (const auto& shape : shapes) {
      for (const auto& s : zeta_grid(shape)) {
        pts.push_back({"shape=" + shape.to_string() + " s=" + tableau_json(s).dump(), [=] {
                         PointResult r;
                         const ValueWithBound direct = schur_zeta_eval(s, tol);
                         for (bool star : {false, true}) {
                           const ValueWithBound dec = schur_zeta_via_decomposition(s, star, tol);
                           const double gap = std::abs(direct.value - dec.value);
                           ++r.checked;
                           if (!(gap <= direct.bound + dec.bound) && r.pass) {
                             r.pass = false;
                             r.detail = std::string(star ? "zeta-star" : "zeta") +
                                        " route differs by " + json(gap).dump() +
                                        " > bound " + json(direct.bound + dec.bound).dump();
                           }
                         }
                         return r;
                       }});
      }
    }
  } else if (id == "classical-reduction") {
    const int order = int_param(cfg, "orders", 8);
    grid["orders"] = order;
    pts.push_back({"shape=1 k=[[1]]", [=] { return from_report(verify_classical_reduction(order)); }});
  } else {
    std::string names;
    for (const auto& n : identity_names()) names += (names.empty() ? "" : ", ") + n;
    throw InputError("unknown identity '" + id + "' (known: " + names + ")");
  }
  return pts;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "bc-binomial",      "stirling-hook",       "hook-recurrence", "hook-bc-relation",
      "derivative-lemma", "leading-coefficient", "decomposition",   "classical-reduction"};
  return names;
}

json cmd_verify(const JobConfig& cfg) {
  const std::string id = cfg.action;
  if (id.empty()) throw InputError("verify needs an identity name");
  const auto start = std::chrono::steady_clock::now();
  json grid = json::object();
  const std::vector<GridPoint> pts = build_grid(id, cfg, grid);

  // Workers pull indices; results land in grid order regardless of timing.
  std::vector<PointResult> results(pts.size());
  std::vector<std::string> failures(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pts.size()) return;
      try {
        results[i] = pts[i].run();
      } catch (const std::exception& e) {
        results[i] = {false, 0, std::string("exception: ") + e.what()};
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(pts.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json points = json::array();
  json counterexample = nullptr;
  bool passed = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PointResult& r = results[i];
    points.push_back(json{{"point", pts[i].label},
                          {"pass", r.pass},
                          {"checked", r.checked},
                          {"detail", r.detail}});
    if (!r.pass && passed) {
      passed = false;
      counterexample = json{{"point", pts[i].label}, {"detail", r.detail}};
    }
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return json{{"artifact", "report"},
              {"identity", id},
              {"grid", grid},
              {"points", points},
              {"passed", passed},
              {"counterexample", counterexample},
              {"wall_time_seconds", wall}};
}

}  // namespace schurpb::cli
