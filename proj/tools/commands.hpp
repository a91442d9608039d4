#pragma once

#include <string>
#include <vector>

#include "fermereo/config.hpp"

namespace fermereo::cli {

// All runners print a human-readable transcript to stdout and, when
// json_path is nonempty, write a deterministic JSON report there.
// They return the process exit code: 0 on pass, 1 on a checked-property
// failure. Input and usage problems surface as exceptions mapped to exit
// codes in main.

int run_demo(const std::string& name, const RunConfig& config, const std::string& json_path);

int run_check(const std::string& input_path, const RunConfig& config,
              const std::string& json_path);

int run_algebra(const std::string& op, const std::vector<std::string>& files,
                const RunConfig& config, const std::string& json_path);

}  // namespace fermereo::cli
