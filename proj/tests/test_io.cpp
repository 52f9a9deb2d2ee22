#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "gardner/init.hpp"
#include "gardner/io.hpp"
#include "gardner/problems.hpp"

using namespace gardner;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("gardner_io_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles round-trip through the text form") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (int i = 0; i < 1000; ++i) {
        const double v = mant(rng) * std::pow(10.0, expo(rng));
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("profile csv carries the header and the initial data") {
    TempDir dir;
    const ExperimentPreset p = preset("pulse");
    const auto state = fit_initial(p.initial, p.grid, 0.0);
    const fs::path file = dir.path / "profile.csv";
    write_profile(file, state, p.grid, 0.0, p.exact, OutputFormat::csv);

    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,u_numeric,v_numeric,u_exact,error");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::stringstream ss(line);
        std::string x, u, v, ue, err;
        std::getline(ss, x, ',');
        std::getline(ss, u, ',');
        std::getline(ss, v, ',');
        std::getline(ss, ue, ',');
        std::getline(ss, err, ',');
        const double ud = std::strtod(u.c_str(), nullptr);
        const double xd = std::strtod(x.c_str(), nullptr);
        CHECK(std::abs(ud - exact_pulse(xd, 0.0)) <= 1e-10);
        CHECK(std::abs(std::strtod(err.c_str(), nullptr)) <= 1e-10);
    }
    CHECK(rows == p.grid.n_intervals + 1);
}

TEST_CASE("profile columns are blank without an exact solution") {
    TempDir dir;
    const ExperimentPreset p = preset("generation");
    GridSpec grid = p.grid;
    grid.n_intervals = 20;
    const auto state = fit_initial(p.initial, grid, 0.0);
    const fs::path file = dir.path / "profile.csv";
    write_profile(file, state, grid, 0.0, nullptr, OutputFormat::csv);
    std::ifstream in(file);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(first.substr(first.size() - 2) == ",,");
}

TEST_CASE("json profile parses and mirrors the csv data") {
    TempDir dir;
    const ExperimentPreset p = preset("pulse");
    GridSpec grid = p.grid;
    grid.n_intervals = 25;
    const auto state = fit_initial(p.initial, grid, 0.0);
    const fs::path file = dir.path / "profile.json";
    write_profile(file, state, grid, 0.0, p.exact, OutputFormat::json);
    const auto j = nlohmann::json::parse(slurp(file));
    REQUIRE(j["columns"]["x"].size() == 26);
    CHECK(std::abs(j["columns"]["u_numeric"][0].get<double>() -
                   exact_pulse(grid.a, 0.0)) <= 1e-9);
}

TEST_CASE("identical writes are byte-identical") {
    TempDir dir;
    const ExperimentPreset p = preset("pulse");
    GridSpec grid = p.grid;
    grid.n_intervals = 30;
    const auto state = fit_initial(p.initial, grid, 0.0);
    write_profile(dir.path / "a.csv", state, grid, 0.0, p.exact, OutputFormat::csv);
    write_profile(dir.path / "b.csv", state, grid, 0.0, p.exact, OutputFormat::csv);
    CHECK(slurp(dir.path / "a.csv") == slurp(dir.path / "b.csv"));
}

TEST_CASE("diagnostics, scan and stability writers emit the documented headers") {
    TempDir dir;
    DiagnosticsRecord rec;
    rec.time = 0.5;
    rec.linf = 1e-5;
    rec.m = 1.0;
    write_diagnostics(dir.path / "d.csv", {rec}, OutputFormat::csv);
    CHECK(slurp(dir.path / "d.csv").rfind("t,linf,M,E,H,C_M,C_E,C_H\n", 0) == 0);

    write_scan_trace(dir.path / "s.csv", {{0.0, 1e-4}, {0.1, 2e-4}}, OutputFormat::csv);
    CHECK(slurp(dir.path / "s.csv").rfind("lambda,linf\n", 0) == 0);

    write_stability_samples(dir.path / "st.csv", {{1.0, 0.1, 1.0, 1.0}}, OutputFormat::csv);
    CHECK(slurp(dir.path / "st.csv").rfind("phi,eps_local,abs_rho1,abs_rho2\n", 0) == 0);

    // missing linf leaves the field empty
    DiagnosticsRecord no_exact;
    no_exact.time = 1.0;
    write_diagnostics(dir.path / "d2.csv", {no_exact}, OutputFormat::csv);
    const std::string text = slurp(dir.path / "d2.csv");
    CHECK(text.find("\n1,,") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

}  // TEST_SUITE
