#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "l2lab/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"l2lab: numerical experiments for weighted Bergman extension bounds"};
    std::string suite, configPath, outDir = ".";
    std::uint64_t seed = 0;
    int truncation = 0, grid = 0;
    app.add_option("suite", suite,
                   "sharpness | concavity | product | suita | azukawa | blocki | auxconstants")
        ->required();
    app.add_option("--config", configPath, "JSON config file");
    app.add_option("--out", outDir, "output directory (report.json, curves/)");
    auto* seedOpt = app.add_option("--seed", seed, "RNG seed");
    auto* truncOpt = app.add_option("--truncation", truncation, "basis truncation override");
    auto* gridOpt = app.add_option("--grid", grid, "grid size override");
    CLI11_PARSE(app, argc, argv);

    try {
        nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
        if (!configPath.empty()) {
            std::ifstream in(configPath);
            if (!in) {
                std::cerr << "ConfigError: cannot open " << configPath << "\n";
                return 2;
            }
            try {
                in >> cfg;
            } catch (const std::exception& e) {
                std::cerr << "ConfigError: " << e.what() << "\n";
                return 2;
            }
            if (cfg.contains("suite")) {
                if (cfg.at("suite").get<std::string>() != suite) {
                    std::cerr << "ConfigError: config file is for suite '"
                              << cfg.at("suite").get<std::string>() << "'\n";
                    return 2;
                }
                cfg.erase("suite");
            }
        }
        // flags override file values
        if (*seedOpt) cfg["seed"] = seed;
        if (*truncOpt) cfg["truncation"] = truncation;
        if (*gridOpt) cfg["grid"] = grid;

        l2lab::SuiteReport rep = l2lab::run_suite(suite, cfg);
        l2lab::write_outputs(rep, outDir);
        for (const auto& ch : rep.checks)
            std::cout << (ch.pass ? "PASS " : "FAIL ") << ch.name << "\n";
        std::cout << (rep.pass ? "suite passed" : "suite FAILED") << "\n";
        if (rep.nonConvergent) return 3;
        return rep.pass ? 0 : 1;
    } catch (const l2lab::Error& e) {
        std::cerr << e.what() << "\n";
        if (e.tag() == "ConfigError") return 2;
        if (e.tag() == "NonConvergent") return 3;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
