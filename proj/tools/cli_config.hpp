#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schurpb::cli {

// Everything one invocation needs. `params` holds the computational keys
// (shape, k, s, kind, orders, tol, star, max-weight) as raw text; commands
// parse and canonicalize them.
struct JobConfig {
  std::string command;
  std::string action;  // zeta: eval | decompose | via-decomposition; verify: identity
  std::map<std::string, std::string> params;
  std::string format = "json";
  std::string output;
  int jobs = 1;
  std::string cache_dir;

  std::optional<std::string> get(const std::string& key) const;
  bool flag(const std::string& key) const;
};

// `key = value` lines; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> parse_config_text(std::string_view text);

// Config file first, then SCHURPB_CACHE_DIR, then flags. Throws InputError.
// Returns nullopt and fills `help` when --help was requested.
std::optional<JobConfig> parse_command_line(const std::vector<std::string>& args,
                                            std::string& help);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace schurpb::cli
