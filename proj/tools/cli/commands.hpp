#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace dunkl::cli {

/// Kinds accepted by `transform`.
const std::vector<std::string>& transform_kinds();

/// Runs a suite; JSON on `out` or into out_path (plus a .csv sibling), a
/// summary on `log`. Returns 0 iff every check passes.
int cmd_verify(const std::string& suite, const Config& cfg, const std::optional<std::filesystem::path>& out_path,
               std::ostream& out, std::ostream& log);

/// Applies one operator to the samples in `in`, which must sit on the
/// configured grid (the lambda-grid for inverse-dunkl).
int cmd_transform(const std::string& kind, const std::filesystem::path& in, const std::filesystem::path& out,
                  const Config& cfg);

/// Recovers f from h = tX f. With a reference f prints the relative
/// L2(beta) error and returns 2 when it exceeds tol.inversion.
int cmd_invert(const std::filesystem::path& in, const std::filesystem::path& out,
               const std::optional<std::filesystem::path>& reference, const Config& cfg, std::ostream& log);

/// Writes the fixtures: the Gaussian input, the dual-Sonine golden output and
/// the inversion pair, the last two from quadrature orders doubled.
int cmd_regen_golden(const std::filesystem::path& dir, const Config& cfg, std::ostream& log);

}  // namespace dunkl::cli
