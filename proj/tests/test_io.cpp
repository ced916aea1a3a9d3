#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "asce/io.hpp"
#include "asce/penalties.hpp"
#include "asce/rng.hpp"

using namespace asce;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

} // namespace

TEST_CASE("format_double is shortest round-trip") {
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(2.5) == "2.5");
    CHECK(io::format_double(10.0) == "10");
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");

    SeededRng rng(51);
    for (int i = 0; i < 1000; ++i) {
        double v = rng.gaussian() * std::pow(10.0, static_cast<double>(rng.below(41)) - 20.0);
        const std::string s = io::format_double(v);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc());
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);
    }
}

TEST_CASE("msd csv carries one column pair per algorithm in config order") {
    ExperimentResult result;
    result.config.algorithms = {Algorithm::NLMF, Algorithm::RL1_NLMF};
    MsdTrace a;
    a.algorithm_kind = Algorithm::NLMF;
    a.average_msd = {1.0, 0.25};
    a.mc_count = 2;
    MsdTrace b;
    b.algorithm_kind = Algorithm::RL1_NLMF;
    b.average_msd = {1.0, 0.125};
    b.mc_count = 2;
    result.traces = {a, b};
    result.divergence_counts = {0, 0};

    const std::string csv = io::msd_csv(result);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "iteration,nlmf_msd,nlmf_msd_db,rl1_nlmf_msd,rl1_nlmf_msd_db");
    const auto row0 = split_csv(lines[1]);
    REQUIRE(row0.size() == 5);
    CHECK(row0[0] == "0");
    CHECK(row0[1] == "1");
    CHECK(row0[2] == "0");
    const auto row1 = split_csv(lines[2]);
    CHECK(row1[0] == "1");
    CHECK(row1[1] == "0.25");
    CHECK(row1[3] == "0.125");
    CHECK(csv.back() == '\n');
}

TEST_CASE("penalty csv matches the table") {
    const auto grid = symmetric_grid(5);
    const auto table = penalty_table(grid, 20.0, 0.05);
    const std::string csv = io::penalty_csv(table);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "h,zeta_za,zeta_rza,zeta_rl1");
    const auto mid = split_csv(lines[3]);
    CHECK(mid[0] == "0");
    CHECK(mid[1] == "0");
    CHECK(mid[2] == "0");
    CHECK(mid[3] == "0");
    const auto last = split_csv(lines[5]);
    CHECK(last[0] == "1");
    CHECK(last[1] == "1");
}

TEST_CASE("config json round trips every field") {
    ExperimentConfig cfg;
    cfg.fir_length = 32;
    cfg.sparsity_k = 6;
    cfg.snr_db = 8.0;
    cfg.mu = 1.5;
    cfg.iterations = 777;
    cfg.mc_runs = 12;
    cfg.master_seed = 0xDEADBEEFCAFEull;
    cfg.algorithms = {Algorithm::RL1_NLMF, Algorithm::LMF};
    cfg.epsilon = 10.0;
    cfg.delta = 0.1;
    cfg.lambda_rza = 3.25e-4;
    cfg.threads = 5;

    const auto back = io::config_from_json_text(io::config_json(cfg));
    CHECK(back.fir_length == cfg.fir_length);
    CHECK(back.sparsity_k == cfg.sparsity_k);
    CHECK(back.snr_db == cfg.snr_db);
    CHECK(back.mu == cfg.mu);
    CHECK(back.iterations == cfg.iterations);
    CHECK(back.mc_runs == cfg.mc_runs);
    CHECK(back.master_seed == cfg.master_seed);
    CHECK(back.algorithms == cfg.algorithms);
    CHECK(back.epsilon == cfg.epsilon);
    CHECK(back.delta == cfg.delta);
    CHECK_FALSE(back.lambda_za.has_value());
    REQUIRE(back.lambda_rza.has_value());
    CHECK(*back.lambda_rza == 3.25e-4);
    CHECK_FALSE(back.lambda_rl1.has_value());
    CHECK(back.threads == 5);
}

TEST_CASE("infinite snr survives the json round trip") {
    ExperimentConfig cfg;
    cfg.snr_db = std::numeric_limits<double>::infinity();
    const std::string text = io::config_json(cfg);
    CHECK(text.find("\"inf\"") != std::string::npos);
    const auto back = io::config_from_json_text(text);
    CHECK(back.snr_db == std::numeric_limits<double>::infinity());
}

TEST_CASE("manifest embeds a reloadable config") {
    ExperimentConfig cfg;
    cfg.mc_runs = 2;
    cfg.iterations = 5;
    cfg.master_seed = 321;
    ExperimentResult result;
    result.config = cfg;
    for (const Algorithm a : cfg.algorithms) {
        MsdTrace t;
        t.algorithm_kind = a;
        t.average_msd = {1.0, 0.5, 0.4, 0.3, 0.2};
        t.mc_count = 2;
        result.traces.push_back(t);
        result.divergence_counts.push_back(0);
    }
    const std::pair<std::string, std::string> outputs[] = {{"msd_csv", "msd.csv"}};
    const std::string manifest = io::run_manifest_json(result, outputs);
    CHECK(manifest.find("\"version\"") != std::string::npos);
    CHECK(manifest.find("\"divergence_counts\"") != std::string::npos);
    CHECK(manifest.find("\"msd.csv\"") != std::string::npos);

    const auto back = io::config_from_json_text(manifest);
    CHECK(back.master_seed == 321);
    CHECK(back.mc_runs == 2);
    CHECK(back.iterations == 5);
    CHECK(back.algorithms == cfg.algorithms);
}

TEST_CASE("malformed config text is rejected") {
    CHECK_THROWS_AS(io::config_from_json_text("not json"), std::runtime_error);
    CHECK_THROWS_AS(io::config_from_json_text("{\"snr_db\": true}"), std::runtime_error);
    CHECK_THROWS_AS(io::config_from_json_text("{\"algorithms\": [\"lms\"]}"),
                    std::runtime_error);
    CHECK_THROWS_AS(io::config_from_json_text("{\"sparsity_k\": 99}"), std::runtime_error);
}

TEST_CASE("text files round trip and bad paths throw") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "asce_io_test";
    fs::create_directories(dir);
    const fs::path file = dir / "t.txt";
    io::write_text_file(file, "line1\nline2\n");
    CHECK(io::read_text_file(file) == "line1\nline2\n");
    CHECK_THROWS_AS(io::write_text_file(dir / "no_dir" / "x.txt", "y"), std::runtime_error);
    CHECK_THROWS_AS(io::read_text_file(dir / "missing.txt"), std::runtime_error);
    fs::remove_all(dir);
}
