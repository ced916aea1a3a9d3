#include "asce/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <utility>

#include "asce/io.hpp"
#include "asce/metrics.hpp"
#include "asce/penalties.hpp"

namespace asce::cli {

namespace {

namespace fs = std::filesystem;

void write_out(const fs::path& path, const std::string& contents) {
    io::write_text_file(path, contents);
    std::cout << "wrote " << path.string() << '\n';
}

ExperimentResult run_and_save(const ExperimentConfig& cfg, const fs::path& dir) {
    fs::create_directories(dir);
    ExperimentResult result = run_monte_carlo(cfg);
    write_out(dir / "msd.csv", io::msd_csv(result));
    const std::pair<std::string, std::string> outputs[] = {{"msd_csv", "msd.csv"}};
    write_out(dir / "run_manifest.json", io::run_manifest_json(result, outputs));
    return result;
}

std::string cell_name(std::uint32_t k, double snr_db, double mu) {
    std::ostringstream name;
    name << "k" << k << "_snr" << io::format_double(snr_db) << "_mu" << io::format_double(mu);
    return name.str();
}

double final_msd(const ExperimentResult& result, Algorithm kind) {
    for (const MsdTrace& trace : result.traces) {
        if (trace.algorithm_kind == kind && !trace.average_msd.empty()) {
            return trace.average_msd.back();
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace

int cmd_run(const RunOptions& opts) {
    opts.config.validate();
    fs::create_directories(opts.out_dir);
    const ExperimentResult result = run_monte_carlo(opts.config);
    write_out(opts.out_dir / "msd.csv", io::msd_csv(result));
    const std::pair<std::string, std::string> outputs[] = {{"msd_csv", "msd.csv"}};
    write_out(opts.out_dir / "run_manifest.json", io::run_manifest_json(result, outputs));
    for (std::size_t a = 0; a < result.traces.size(); ++a) {
        const MsdTrace& trace = result.traces[a];
        const double msd = trace.average_msd.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : trace.average_msd.back();
        std::cout << name_of(trace.algorithm_kind) << ": final msd "
                  << io::format_double(to_db(msd)) << " dB over " << trace.mc_count << " trials ("
                  << result.divergence_counts[a] << " diverged)\n";
    }
    return 0;
}

int cmd_penalty_table(const PenaltyTableOptions& opts) {
    const std::vector<double> grid = symmetric_grid(opts.points);
    const std::vector<PenaltyPoint> table = penalty_table(grid, opts.epsilon, opts.delta);
    fs::create_directories(opts.out_dir);
    write_out(opts.out_dir / "penalty.csv", io::penalty_csv(table));
    return 0;
}

int cmd_sweep(const SweepOptions& opts) {
    opts.base.validate();
    const auto ks = opts.k_values.empty() ? std::vector<std::uint32_t>{opts.base.sparsity_k}
                                          : opts.k_values;
    const auto snrs =
        opts.snr_values.empty() ? std::vector<double>{opts.base.snr_db} : opts.snr_values;
    const auto mus = opts.mu_values.empty() ? std::vector<double>{opts.base.mu} : opts.mu_values;

    fs::create_directories(opts.out_dir);

    const bool can_order =
        std::count(opts.base.algorithms.begin(), opts.base.algorithms.end(),
                   Algorithm::ZA_NLMF) &&
        std::count(opts.base.algorithms.begin(), opts.base.algorithms.end(),
                   Algorithm::RZA_NLMF) &&
        std::count(opts.base.algorithms.begin(), opts.base.algorithms.end(), Algorithm::RL1_NLMF);

    std::ostringstream summary;
    summary << "k,snr_db,mu";
    for (const Algorithm a : opts.base.algorithms) {
        summary << ',' << name_of(a) << "_final_msd";
    }
    summary << ",rl1_lt_rza_lt_za\n";

    bool any_failed = false;
    for (const std::uint32_t k : ks) {
        for (const double snr : snrs) {
            for (const double mu : mus) {
                ExperimentConfig cfg = opts.base;
                cfg.sparsity_k = k;
                cfg.snr_db = snr;
                cfg.mu = mu;
                const std::string name = cell_name(k, snr, mu);
                try {
                    const ExperimentResult result = run_and_save(cfg, opts.out_dir / name);
                    summary << k << ',' << io::format_double(snr) << ',' << io::format_double(mu);
                    for (const MsdTrace& trace : result.traces) {
                        summary << ',' << io::format_double(trace.average_msd.back());
                    }
                    if (can_order) {
                        const double za = final_msd(result, Algorithm::ZA_NLMF);
                        const double rza = final_msd(result, Algorithm::RZA_NLMF);
                        const double rl1 = final_msd(result, Algorithm::RL1_NLMF);
                        summary << ',' << ((rl1 < rza && rza < za) ? 1 : 0);
                    } else {
                        summary << ',';
                    }
                    summary << '\n';
                } catch (const std::exception& e) {
                    any_failed = true;
                    std::cerr << "cell " << name << " failed: " << e.what() << '\n';
                }
            }
        }
    }

    write_out(opts.out_dir / "summary.csv", summary.str());
    return any_failed ? 1 : 0;
}

} // namespace asce::cli
