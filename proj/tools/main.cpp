#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asce/commands.hpp"
#include "asce/io.hpp"

namespace {

using asce::ExperimentConfig;

// Flag values shared by run and sweep. Everything is optional so a config
// file (when given) supplies the base and explicit flags override it.
struct ConfigFlags {
    std::string config_file;
    std::optional<std::uint32_t> fir;
    std::optional<std::uint32_t> k;
    std::optional<double> snr_db;
    std::optional<double> mu;
    std::optional<std::uint32_t> iterations;
    std::optional<std::uint32_t> mc_runs;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> algorithms;
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<double> lambda_za;
    std::optional<double> lambda_rza;
    std::optional<double> lambda_rl1;
    std::optional<unsigned> threads;
};

void add_common_flags(CLI::App& sub, ConfigFlags& f, std::string& out_dir) {
    sub.add_option("--config", f.config_file, "JSON config or run manifest to start from")
        ->check(CLI::ExistingFile);
    sub.add_option("--fir", f.fir, "FIR channel length");
    sub.add_option("--iters", f.iterations, "adaptation iterations per trial");
    sub.add_option("--mc", f.mc_runs, "Monte Carlo trials");
    sub.add_option("--seed", f.seed, "master seed");
    sub.add_option("--algorithms", f.algorithms,
                   "comma-separated list: lmf,nlmf,za_nlmf,rza_nlmf,rl1_nlmf")
        ->delimiter(',');
    sub.add_option("--epsilon", f.epsilon, "reweighting strength (rza_nlmf)");
    sub.add_option("--delta", f.delta, "reweighting floor (rl1_nlmf)");
    sub.add_option("--lambda-za", f.lambda_za, "za_nlmf penalty weight override");
    sub.add_option("--lambda-rza", f.lambda_rza, "rza_nlmf penalty weight override");
    sub.add_option("--lambda-rl1", f.lambda_rl1, "rl1_nlmf penalty weight override");
    sub.add_option("--threads", f.threads, "worker threads; 0 = hardware concurrency");
    sub.add_option("--out", out_dir, "output directory")
        ->envname("ASCE_OUT_DIR")
        ->capture_default_str();
}

ExperimentConfig merge_config(const ConfigFlags& f) {
    ExperimentConfig cfg;
    if (!f.config_file.empty()) {
        cfg = asce::io::config_from_json_text(asce::io::read_text_file(f.config_file));
    }
    if (f.fir) cfg.fir_length = *f.fir;
    if (f.k) cfg.sparsity_k = *f.k;
    if (f.snr_db) cfg.snr_db = *f.snr_db;
    if (f.mu) cfg.mu = *f.mu;
    if (f.iterations) cfg.iterations = *f.iterations;
    if (f.mc_runs) cfg.mc_runs = *f.mc_runs;
    if (f.seed) cfg.master_seed = *f.seed;
    if (!f.algorithms.empty()) {
        cfg.algorithms.clear();
        for (const std::string& name : f.algorithms) {
            cfg.algorithms.push_back(asce::algorithm_from_name(name));
        }
    }
    if (f.epsilon) cfg.epsilon = *f.epsilon;
    if (f.delta) cfg.delta = *f.delta;
    if (f.lambda_za) cfg.lambda_za = *f.lambda_za;
    if (f.lambda_rza) cfg.lambda_rza = *f.lambda_rza;
    if (f.lambda_rl1) cfg.lambda_rl1 = *f.lambda_rl1;
    if (f.threads) cfg.threads = *f.threads;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asce: adaptive sparse channel estimation workbench"};
    app.set_version_flag("--version", std::string("asce ") + std::string(asce::io::tool_version));
    app.require_subcommand(1);

    ConfigFlags run_flags;
    std::string run_out = ".";
    CLI::App* run_cmd = app.add_subcommand("run", "run one Monte Carlo experiment");
    add_common_flags(*run_cmd, run_flags, run_out);
    run_cmd->add_option("--k", run_flags.k, "number of nonzero channel taps");
    run_cmd->add_option("--mu", run_flags.mu, "gradient step size");
    run_cmd->add_option("--snr-db", run_flags.snr_db, "SNR in dB; inf selects noiseless");

    ConfigFlags sweep_flags;
    std::string sweep_out = ".";
    std::vector<std::uint32_t> sweep_k;
    std::vector<double> sweep_snr;
    std::vector<double> sweep_mu;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a grid of experiments");
    add_common_flags(*sweep_cmd, sweep_flags, sweep_out);
    sweep_cmd->add_option("--k", sweep_k, "sparsity values, comma separated")->delimiter(',');
    sweep_cmd->add_option("--mu", sweep_mu, "step sizes, comma separated")->delimiter(',');
    sweep_cmd->add_option("--snr-db", sweep_snr, "SNR values, comma separated")->delimiter(',');

    asce::cli::PenaltyTableOptions pen_opts;
    std::string pen_out = ".";
    CLI::App* pen_cmd = app.add_subcommand("penalty-table", "tabulate zero-attraction forces");
    pen_cmd->add_option("--epsilon", pen_opts.epsilon, "reweighting strength")
        ->capture_default_str();
    pen_cmd->add_option("--delta", pen_opts.delta, "reweighting floor")->capture_default_str();
    pen_cmd->add_option("--points", pen_opts.points, "grid points over [-1, 1]")
        ->capture_default_str();
    pen_cmd->add_option("--out", pen_out, "output directory")
        ->envname("ASCE_OUT_DIR")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            asce::cli::RunOptions opts;
            opts.config = merge_config(run_flags);
            opts.out_dir = run_out;
            return asce::cli::cmd_run(opts);
        }
        if (sweep_cmd->parsed()) {
            asce::cli::SweepOptions opts;
            opts.base = merge_config(sweep_flags);
            opts.k_values = sweep_k;
            opts.snr_values = sweep_snr;
            opts.mu_values = sweep_mu;
            opts.out_dir = sweep_out;
            return asce::cli::cmd_sweep(opts);
        }
        if (pen_cmd->parsed()) {
            pen_opts.out_dir = pen_out;
            return asce::cli::cmd_penalty_table(pen_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
