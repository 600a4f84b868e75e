#include "cli_commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cli_util.hpp"
#include "schurpb/analytic.hpp"
#include "schurpb/bernoulli.hpp"
#include "schurpb/polylog.hpp"

namespace schurpb::cli {

namespace {

json value_json(const ValueWithBound& v) {
  return json{{"value", v.value}, {"bound", v.bound}, {"method", to_string(v.method)}};
}

json exact_json(const BigRational& q, Method method) {
  return json{{"exact", to_string(q)}, {"method", to_string(method)}};
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Symbolic entry addition for `zeta decompose`: numbers add, anything else
// concatenates with '+'.
std::string plus_symbols(const std::string& a, const std::string& b) {
  double x = 0, y = 0;
  const auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  const auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  if (ra.ec == std::errc() && ra.ptr == a.data() + a.size() && rb.ec == std::errc() &&
      rb.ptr == b.data() + b.size())
    return format_number(x + y);
  return a + "+" + b;
}

json bernoulli_request(const JobConfig& cfg) {
  const Partition shape = Partition::parse(require(cfg, "shape"));
  const WeightTableau k = parse_int_tableau(shape, require(cfg, "k"));
  const Kind kind = parse_kind(cfg.get("kind").value_or("B"));
  const std::vector<int> orders = corner_orders(shape, require(cfg, "orders"));
  return json{{"command", "bernoulli"},
              {"shape", shape.to_string()},
              {"k", tableau_json(k)},
              {"kind", to_string(kind)},
              {"orders", orders}};
}

json zeta_request(const JobConfig& cfg) {
  const std::string action = cfg.action.empty() ? "eval" : cfg.action;
  if (action != "eval" && action != "decompose" && action != "via-decomposition")
    throw InputError("zeta action must be eval, decompose or via-decomposition, got '" +
                     action + "'");
  const Partition shape = Partition::parse(require(cfg, "shape"));
  json req{{"command", "zeta"}, {"action", action}, {"shape", shape.to_string()}};
  if (action == "decompose") {
    req["s"] = tableau_json(parse_symbol_tableau(shape, require(cfg, "s")));
  } else {
    req["s"] = tableau_json(parse_real_tableau(shape, require(cfg, "s")));
    req["tol"] = parse_tol(cfg, action == "eval" ? 1e-12 : 1e-10);
  }
  req["star"] = cfg.flag("star");
  return req;
}

json analytic_request(const JobConfig& cfg, const std::string& command) {
  const Partition shape = Partition::parse(require(cfg, "shape"));
  const WeightTableau k = parse_int_tableau(shape, require(cfg, "k"));
  const std::vector<double> s = parse_real_list(require(cfg, "s"));
  const std::size_t c = corners(shape).size();
  if (s.size() != c)
    throw InputError("shape " + shape.to_string() + " has " + std::to_string(c) +
                     " corners but " + std::to_string(s.size()) + " values of s were given");
  return json{{"command", command}, {"shape", shape.to_string()}, {"k", tableau_json(k)},
              {"s", s},           {"tol", parse_tol(cfg, 1e-7)}};
}

Partition shape_of(const json& req) { return Partition::parse(req["shape"].get<std::string>()); }

WeightTableau k_of(const json& req) {
  return WeightTableau::from_rows(req["k"].get<std::vector<std::vector<int>>>());
}

json compute_bernoulli(const json& req) {
  const Partition shape = shape_of(req);
  const WeightTableau k = k_of(req);
  const auto orders = req["orders"].get<std::vector<int>>();
  const BernoulliTable t =
      bernoulli_table(shape, k, orders, parse_kind(req["kind"].get<std::string>()));
  json rows = json::array();
  const auto idx = t.indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    rows.push_back(json{{"m", idx[i]}, {"value", to_string(t.values[i])}});
  return json{{"artifact", "table"},
              {"request", req},
              {"variables", corner_variables(shape)},
              {"rows", rows}};
}

json compute_zeta(const json& req) {
  const Partition shape = shape_of(req);
  const std::string action = req["action"].get<std::string>();
  const bool star = req["star"].get<bool>();
  if (action == "decompose") {
    const auto s = Tableau<std::string>::from_rows(
        req["s"].get<std::vector<std::vector<std::string>>>());
    const auto comps = star ? decompose_to_mzv_star(s, plus_symbols)
                            : decompose_to_mzv(s, plus_symbols);
    json terms = json::array();
    for (const auto& c : comps) terms.push_back(json{{"sign", c.sign}, {"index", c.parts}});
    return json{{"artifact", "decomposition"}, {"request", req}, {"terms", terms}};
  }
  const auto s = Tableau<double>::from_rows(req["s"].get<std::vector<std::vector<double>>>());
  const double tol = req["tol"].get<double>();
  if (action == "eval") {
    json out{{"artifact", "value"}, {"request", req}};
    out.update(value_json(schur_zeta_eval(s, tol)));
    return out;
  }
  const auto parts = schur_zeta_decomposition(s, star, tol);
  json terms = json::array();
  for (const auto& t : parts) {
    json term{{"sign", t.sign}, {"index", t.index}};
    term.update(value_json(t.value));
    terms.push_back(term);
  }
  json out{{"artifact", "value"}, {"request", req}};
  out.update(value_json(schur_zeta_via_decomposition(s, star, tol)));
  out["terms"] = terms;
  return out;
}

json compute_xi(const json& req) {
  const Partition shape = shape_of(req);
  const WeightTableau k = k_of(req);
  const auto s = req["s"].get<std::vector<double>>();
  json out{{"artifact", "value"}, {"request", req}};
  const bool special = std::all_of(s.begin(), s.end(), is_nonpositive_integer);
  if (special) {
    std::vector<int> m;
    for (double x : s) m.push_back(static_cast<int>(-x));
    out.update(exact_json(xi_special_value(shape, k, m), Method::TableLookup));
    return out;
  }
  QuadratureSpec q;
  q.abs_tol = req["tol"].get<double>();
  out.update(value_json(xi_eval(shape, k, s, q)));
  return out;
}

json compute_eta(const json& req) {
  const Partition shape = shape_of(req);
  const WeightTableau k = k_of(req);
  const auto s = req["s"].get<std::vector<double>>();
  json out{{"artifact", "value"}, {"request", req}};
  const bool special = std::all_of(s.begin(), s.end(), is_nonpositive_integer);
  if (special) {
    std::vector<int> m;
    for (double x : s) m.push_back(static_cast<int>(-x));
    if (shape.weight() == 1) {
      // Classical case: eta_k(-m) = B_m^{(k)}.
      out.update(exact_json(bernoulli_table(shape, k, m, Kind::B).at(m), Method::TableLookup));
    } else {
      out.update(exact_json(eta_special_value(shape, k, m), Method::TableLookup));
    }
    return out;
  }
  if (shape.weight() != 1)
    throw DomainError("numeric eta is only available for the single box; shape " +
                      shape.to_string() + " supports non-positive integer s");
  QuadratureSpec q;
  q.abs_tol = req["tol"].get<double>();
  out.update(value_json(eta_classical_eval(k[0], s[0], q)));
  return out;
}

json make_request(const JobConfig& cfg) {
  if (cfg.command == "bernoulli") return bernoulli_request(cfg);
  if (cfg.command == "zeta") return zeta_request(cfg);
  if (cfg.command == "xi" || cfg.command == "eta") return analytic_request(cfg, cfg.command);
  throw InputError("unknown command '" + cfg.command + "'");
}

json compute(const json& req) {
  const std::string c = req["command"].get<std::string>();
  if (c == "bernoulli") return compute_bernoulli(req);
  if (c == "zeta") return compute_zeta(req);
  if (c == "xi") return compute_xi(req);
  return compute_eta(req);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string number_text(const json& v) { return v.dump(); }

}  // namespace

json cmd_bernoulli(const JobConfig& cfg) { return compute_bernoulli(bernoulli_request(cfg)); }
json cmd_zeta(const JobConfig& cfg) { return compute_zeta(zeta_request(cfg)); }
json cmd_xi(const JobConfig& cfg) { return compute_xi(analytic_request(cfg, "xi")); }
json cmd_eta(const JobConfig& cfg) { return compute_eta(analytic_request(cfg, "eta")); }

std::string render(const json& a, const std::string& format) {
  if (format == "json") return a.dump(2) + "\n";
  std::ostringstream out;
  const std::string kind = a["artifact"].get<std::string>();
  if (kind == "table") {
    const std::size_t c = a["variables"].size();
    for (std::size_t i = 1; i <= c; ++i) out << "m_" << i << ",";
    out << "numerator,denominator\n";
    for (const auto& row : a["rows"]) {
      for (const auto& m : row["m"]) out << m.get<int>() << ",";
      const std::string v = row["value"].get<std::string>();
      const auto slash = v.find('/');
      out << (slash == std::string::npos ? v : v.substr(0, slash)) << ","
          << (slash == std::string::npos ? "1" : v.substr(slash + 1)) << "\n";
    }
  } else if (kind == "value") {
    if (a.contains("exact")) {
      const std::string v = a["exact"].get<std::string>();
      const auto slash = v.find('/');
      out << "numerator,denominator\n"
          << (slash == std::string::npos ? v : v.substr(0, slash)) << ","
          << (slash == std::string::npos ? "1" : v.substr(slash + 1)) << "\n";
    } else {
      out << "value,bound,method\n"
          << number_text(a["value"]) << "," << number_text(a["bound"]) << ","
          << a["method"].get<std::string>() << "\n";
    }
  } else if (kind == "decomposition") {
    out << "sign,index\n";
    for (const auto& t : a["terms"]) {
      std::string idx;
      for (const auto& e : t["index"]) idx += (idx.empty() ? "" : ";") + e.get<std::string>();
      out << t["sign"].get<int>() << "," << csv_field(idx) << "\n";
    }
  } else {
    out << "point,pass,checked,detail\n";
    for (const auto& p : a["points"])
      out << csv_field(p["point"].get<std::string>()) << ","
          << (p["pass"].get<bool>() ? "true" : "false") << "," << p["checked"].get<long>()
          << "," << csv_field(p["detail"].get<std::string>()) << "\n";
  }
  return out.str();
}

namespace {

// Cached artifacts live at <dir>/<command>-<fnv1a of the request>.json and
// are only used when the stored request matches exactly.
std::optional<json> cache_load(const std::filesystem::path& file, const json& req) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    json a = json::parse(in);
    if (a.contains("request") && a["request"] == req) return a;
  } catch (const json::exception&) {
  }
  return std::nullopt;
}

void cache_store(const std::filesystem::path& file, const json& artifact) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << artifact.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::string help;
    const auto parsed = parse_command_line(args, help);
    if (!parsed) {
      out << help;
      return kPass;
    }
    const JobConfig& cfg = *parsed;
    json artifact;
    if (cfg.command == "verify") {
      artifact = cmd_verify(cfg);
    } else {
      const json req = make_request(cfg);
      std::optional<json> cached;
      std::filesystem::path file;
      if (!cfg.cache_dir.empty()) {
        file = std::filesystem::path(cfg.cache_dir) /
               (cfg.command + "-" + hex64(fnv1a64(req.dump())) + ".json");
        cached = cache_load(file, req);
      }
      if (cached) {
        artifact = std::move(*cached);
      } else {
        artifact = compute(req);
        if (!cfg.cache_dir.empty()) cache_store(file, artifact);
      }
    }
    const std::string text = render(artifact, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + cfg.output + "'");
      f << text;
    }
    if (artifact["artifact"] == "report" && !artifact["passed"].get<bool>()) return kVerifyFailed;
    return kPass;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace schurpb::cli
