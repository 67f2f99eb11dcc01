#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace dunkl::cli {

using CheckGroup = std::function<std::vector<Check>(const Config&)>;

struct GroupEntry {
  std::string name;
  CheckGroup run;
};

/// plancherel, translation, convolution, sonine, wavelet, calderon, inversion.
const std::vector<std::string>& suite_names();

/// Check groups of one suite in canonical order; throws std::invalid_argument
/// for an unknown suite.
const std::vector<GroupEntry>& suite_groups(const std::string& suite);

/// Checks of one group.
std::vector<Check> run_group(const std::string& suite, const std::string& group, const Config& cfg);

/// Runs a suite, or every suite for "all"; rows sorted by id.
Report run_suite(const std::string& suite, const Config& cfg);

}  // namespace dunkl::cli
