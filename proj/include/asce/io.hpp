#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "asce/experiment.hpp"
#include "asce/penalties.hpp"

namespace asce::io {

inline constexpr std::string_view tool_version = "0.1.0";

/// Shortest decimal string that round-trips the exact double. Locale
/// independent; infinities and NaN print as inf/-inf/nan.
std::string format_double(double v);

/// Header: iteration, then <name>_msd and <name>_msd_db per algorithm in
/// config order. One row per iteration, '\n' line ends, trailing newline.
std::string msd_csv(const ExperimentResult& result);

/// Header: h,zeta_za,zeta_rza,zeta_rl1.
std::string penalty_csv(std::span<const PenaltyPoint> table);

/// Experiment config as a JSON object (pretty-printed, keys sorted).
std::string config_json(const ExperimentConfig& cfg);

/// Parses a config either from a bare config object or from a full run
/// manifest (anything holding a "config" key). Unknown keys are ignored;
/// missing keys keep their defaults. Throws std::runtime_error on malformed
/// input or bad values.
ExperimentConfig config_from_json_text(const std::string& text);

/// Run manifest: merged config, resolved deriveds (noise variance, penalty
/// weights), divergence counts, output file names, wall time, tool version.
/// A run is reproducible from the manifest alone via config_from_json_text.
std::string run_manifest_json(const ExperimentResult& result,
                              std::span<const std::pair<std::string, std::string>> outputs);

void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

} // namespace asce::io
