#include "asce/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "asce/metrics.hpp"

namespace asce::io {

namespace {

using nlohmann::json;

json snr_to_json(double snr_db) {
    if (std::isfinite(snr_db)) {
        return snr_db;
    }
    return snr_db > 0 ? "inf" : "-inf";
}

double snr_from_json(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        for (char& c : s) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        const bool neg = !s.empty() && s.front() == '-';
        if (neg || (!s.empty() && s.front() == '+')) {
            s.erase(s.begin());
        }
        if (s == "inf" || s == "infinity") {
            return neg ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::infinity();
        }
    }
    throw std::runtime_error("config: snr_db must be a number or \"inf\"");
}

json config_to_json_obj(const ExperimentConfig& cfg) {
    json j;
    j["fir_length"] = cfg.fir_length;
    j["sparsity_k"] = cfg.sparsity_k;
    j["snr_db"] = snr_to_json(cfg.snr_db);
    j["mu"] = cfg.mu;
    j["iterations"] = cfg.iterations;
    j["mc_runs"] = cfg.mc_runs;
    j["master_seed"] = cfg.master_seed;
    json names = json::array();
    for (const Algorithm a : cfg.algorithms) {
        names.push_back(std::string(name_of(a)));
    }
    j["algorithms"] = names;
    j["epsilon"] = cfg.epsilon;
    j["delta"] = cfg.delta;
    if (cfg.lambda_za) {
        j["lambda_za"] = *cfg.lambda_za;
    }
    if (cfg.lambda_rza) {
        j["lambda_rza"] = *cfg.lambda_rza;
    }
    if (cfg.lambda_rl1) {
        j["lambda_rl1"] = *cfg.lambda_rl1;
    }
    j["threads"] = cfg.threads;
    return j;
}

ExperimentConfig config_from_json_obj(const json& j) {
    ExperimentConfig cfg;
    if (j.contains("fir_length")) cfg.fir_length = j.at("fir_length").get<std::uint32_t>();
    if (j.contains("sparsity_k")) cfg.sparsity_k = j.at("sparsity_k").get<std::uint32_t>();
    if (j.contains("snr_db")) cfg.snr_db = snr_from_json(j.at("snr_db"));
    if (j.contains("mu")) cfg.mu = j.at("mu").get<double>();
    if (j.contains("iterations")) cfg.iterations = j.at("iterations").get<std::uint32_t>();
    if (j.contains("mc_runs")) cfg.mc_runs = j.at("mc_runs").get<std::uint32_t>();
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto& name : j.at("algorithms")) {
            cfg.algorithms.push_back(algorithm_from_name(name.get<std::string>()));
        }
    }
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    if (j.contains("lambda_za")) cfg.lambda_za = j.at("lambda_za").get<double>();
    if (j.contains("lambda_rza")) cfg.lambda_rza = j.at("lambda_rza").get<double>();
    if (j.contains("lambda_rl1")) cfg.lambda_rl1 = j.at("lambda_rl1").get<double>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    return cfg;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string msd_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "iteration";
    for (const Algorithm a : result.config.algorithms) {
        out << ',' << name_of(a) << "_msd," << name_of(a) << "_msd_db";
    }
    out << '\n';
    const std::size_t rows = result.traces.empty() ? 0 : result.traces.front().average_msd.size();
    for (std::size_t n = 0; n < rows; ++n) {
        out << n;
        for (const MsdTrace& trace : result.traces) {
            const double msd = trace.average_msd[n];
            out << ',' << format_double(msd) << ',' << format_double(to_db(msd));
        }
        out << '\n';
    }
    return out.str();
}

std::string penalty_csv(std::span<const PenaltyPoint> table) {
    std::ostringstream out;
    out << "h,zeta_za,zeta_rza,zeta_rl1\n";
    for (const PenaltyPoint& p : table) {
        out << format_double(p.coefficient) << ',' << format_double(p.zeta_za) << ','
            << format_double(p.zeta_rza) << ',' << format_double(p.zeta_rl1) << '\n';
    }
    return out.str();
}

std::string config_json(const ExperimentConfig& cfg) {
    return config_to_json_obj(cfg).dump(2) + "\n";
}

ExperimentConfig config_from_json_text(const std::string& text) {
    try {
        json j = json::parse(text);
        if (j.is_object() && j.contains("config")) {
            j = j.at("config");
        }
        ExperimentConfig cfg = config_from_json_obj(j);
        cfg.validate();
        return cfg;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
}

std::string run_manifest_json(const ExperimentResult& result,
                              std::span<const std::pair<std::string, std::string>> outputs) {
    const ExperimentConfig& cfg = result.config;
    json j;
    j["version"] = std::string(tool_version);
    j["config"] = config_to_json_obj(cfg);

    json resolved;
    resolved["noise_variance"] = cfg.noise_variance();
    resolved["lambda_za"] = cfg.params_for(Algorithm::ZA_NLMF).lambda_za;
    resolved["lambda_rza"] = cfg.params_for(Algorithm::RZA_NLMF).lambda_rza;
    resolved["lambda_rl1"] = cfg.params_for(Algorithm::RL1_NLMF).lambda_rl1;
    j["resolved"] = resolved;

    json counts;
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        counts[std::string(name_of(cfg.algorithms[a]))] = result.divergence_counts[a];
    }
    j["divergence_counts"] = counts;

    json outs;
    for (const auto& [label, file] : outputs) {
        outs[label] = file;
    }
    j["outputs"] = outs;
    j["wall_seconds"] = result.wall_seconds;
    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace asce::io
