#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "cli_config.hpp"

namespace schurpb::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kInputError = 2, kDomainError = 3 };

// Every artifact carries "artifact" (table | value | decomposition | report)
// and the canonical "request" it was computed from.
json cmd_bernoulli(const JobConfig& cfg);
json cmd_zeta(const JobConfig& cfg);
json cmd_xi(const JobConfig& cfg);
json cmd_eta(const JobConfig& cfg);
json cmd_verify(const JobConfig& cfg);

// Identity names accepted by `verify`, in help order.
const std::vector<std::string>& identity_names();

std::string render(const json& artifact, const std::string& format);

// Full command line handling: parse, cache, compute, write. `args` excludes
// the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurpb::cli
