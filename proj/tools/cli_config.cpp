#include "cli_config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "schurpb/numeric.hpp"

namespace schurpb::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::vector<std::string> kParamKeys{"shape", "k", "s", "kind", "orders", "tol",
                                          "max-weight"};
const std::vector<std::string> kValueOptions{"shape", "k", "s", "kind", "orders",
                                             "tol", "max-weight", "format", "output",
                                             "jobs", "cache-dir", "config"};

int parse_jobs(const std::string& text) {
  try {
    std::size_t used = 0;
    const int j = std::stoi(text, &used);
    if (used != text.size() || j < 1) throw std::invalid_argument(text);
    return j;
  } catch (const std::exception&) {
    throw InputError("jobs must be a positive integer, got '" + text + "'");
  }
}

}  // namespace

std::optional<std::string> JobConfig::get(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

bool JobConfig::flag(const std::string& key) const {
  const auto v = get(key);
  return v && (*v == "true" || *v == "1" || *v == "yes");
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty())
      throw InputError("config line " + std::to_string(number) + ": empty key");
    out[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

std::optional<JobConfig> parse_command_line(const std::vector<std::string>& args,
                                            std::string& help) {
  // "--s -1,-1" would read as a short option; glue values onto their flags.
  std::vector<std::string> argv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    bool glued = false;
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size())
      for (const auto& name : kValueOptions)
        if (a == "--" + name) {
          argv.push_back(a + "=" + args[i + 1]);
          ++i;
          glued = true;
          break;
        }
    if (!glued) argv.push_back(a);
  }

  CLI::App app{"Schur multiple zeta values and Schur type poly-Bernoulli numbers", "schurpb"};
  std::string command, action;
  app.add_option("command", command, "bernoulli | zeta | xi | eta | verify");
  app.add_option("action", action, "zeta: eval | decompose | via-decomposition; verify: identity");
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> opts;
  const std::map<std::string, std::string> descriptions{
      {"shape", "partition, e.g. 2,1"},
      {"k", "weight tableau, e.g. [[1,2],[2]]"},
      {"s", "zeta: tableau; xi/eta: one value per corner, e.g. 1.5 or -1,-2"},
      {"kind", "B or C"},
      {"orders", "per-corner order, or one value for all corners"},
      {"tol", "absolute tolerance"},
      {"max-weight", "largest weight (or shape size for bc-binomial) in verify grids"},
      {"format", "json | csv"},
      {"output", "write the artifact here instead of stdout"},
      {"jobs", "worker threads for verify grids"},
      {"cache-dir", "artifact cache directory (also SCHURPB_CACHE_DIR)"},
      {"config", "key = value config file; flags override it"}};
  for (const auto& name : kValueOptions)
    opts[name] = app.add_option("--" + name, values[name], descriptions.at(name));
  bool star = false;
  auto* star_opt = app.add_flag("--star", star, "use the zeta-star route");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    help = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }

  std::map<std::string, std::string> file;
  if (opts["config"]->count() > 0) {
    std::ifstream in(values["config"]);
    if (!in) throw InputError("cannot read config file '" + values["config"] + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    file = parse_config_text(ss.str());
    std::set<std::string> known(kParamKeys.begin(), kParamKeys.end());
    known.insert({"command", "action", "format", "output", "jobs", "cache-dir", "star"});
    for (const auto& [key, value] : file)
      if (!known.count(key)) throw InputError("unknown config key '" + key + "'");
  }

  JobConfig cfg;
  auto pick = [&](const std::string& key) -> std::optional<std::string> {
    if (opts.count(key) && opts[key]->count() > 0) return values[key];
    const auto it = file.find(key);
    if (it != file.end()) return it->second;
    return std::nullopt;
  };
  cfg.command = !command.empty() ? command : file.count("command") ? file["command"] : "";
  cfg.action = !action.empty() ? action : file.count("action") ? file["action"] : "";
  if (cfg.command.empty()) throw InputError("missing command (bernoulli, zeta, xi, eta, verify)");
  for (const auto& key : kParamKeys)
    if (auto v = pick(key)) cfg.params[key] = *v;
  if (star_opt->count() > 0)
    cfg.params["star"] = star ? "true" : "false";
  else if (file.count("star"))
    cfg.params["star"] = file["star"];
  if (auto v = pick("format")) cfg.format = *v;
  if (cfg.format != "json" && cfg.format != "csv")
    throw InputError("format must be json or csv, got '" + cfg.format + "'");
  if (auto v = pick("output")) cfg.output = *v;
  if (auto v = pick("jobs")) cfg.jobs = parse_jobs(*v);
  if (file.count("cache-dir")) cfg.cache_dir = file["cache-dir"];
  if (const char* env = std::getenv("SCHURPB_CACHE_DIR"); env && *env) cfg.cache_dir = env;
  if (opts["cache-dir"]->count() > 0) cfg.cache_dir = values["cache-dir"];
  return cfg;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("'" + t + "' is not an integer (in '" + text + "')");
    }
  }
  if (out.empty()) throw InputError("expected a comma-separated integer list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("'" + t + "' is not a number (in '" + text + "')");
    }
  }
  if (out.empty()) throw InputError("expected a comma-separated list of numbers");
  return out;
}

}  // namespace schurpb::cli
