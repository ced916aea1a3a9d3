#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "asce/experiment.hpp"

namespace asce::cli {

struct RunOptions {
    ExperimentConfig config;
    std::filesystem::path out_dir = ".";
};

struct PenaltyTableOptions {
    double epsilon = 20.0;
    double delta = 0.05;
    std::uint32_t points = 401;
    std::filesystem::path out_dir = ".";
};

struct SweepOptions {
    ExperimentConfig base;
    std::vector<std::uint32_t> k_values;  // empty = just base.sparsity_k
    std::vector<double> snr_values;       // empty = just base.snr_db
    std::vector<double> mu_values;        // empty = just base.mu
    std::filesystem::path out_dir = ".";
};

/// Writes msd.csv and run_manifest.json into out_dir. Throws on IO failure
/// or invalid config; returns 0 otherwise.
int cmd_run(const RunOptions& opts);

/// Writes penalty.csv into out_dir.
int cmd_penalty_table(const PenaltyTableOptions& opts);

/// One subdirectory per (k, snr, mu) cell plus summary.csv at the root. A
/// failing cell is reported and skipped; completed cells are kept. Returns 0
/// when every cell succeeded, 1 otherwise.
int cmd_sweep(const SweepOptions& opts);

} // namespace asce::cli
