#ifndef L2LAB_SUITES_HPP
#define L2LAB_SUITES_HPP

#include <json.hpp>

#include "l2lab/numerics.hpp"

namespace l2lab {

struct CheckResult {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string provenance;  // what mathematical fact the check certifies
};

struct Curve {
    std::string name;                      // file stem, written as curves/<name>.csv
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

struct SuiteReport {
    std::string suite;
    nlohmann::ordered_json configEcho;
    std::vector<CheckResult> checks;
    std::vector<Curve> curves;
    bool pass = true;          // conjunction of per-check passes
    bool nonConvergent = false;
    std::uint64_t seed = 7;
    int truncation = 200;
};

/// Run one experiment suite.  `config` holds suite-specific keys plus the
/// common overrides {seed, truncation, grid}; unknown keys throw ConfigError.
/// Suites: sharpness, concavity, product, suita, azukawa, blocki, auxconstants.
SuiteReport run_suite(const std::string& suite, const nlohmann::ordered_json& config);

/// Report serialization; the timestamp is the only non-deterministic field.
nlohmann::ordered_json report_json(const SuiteReport& rep, bool withTimestamp);

/// Write report.json and curves/*.csv under outDir.  Throws IOError.
void write_outputs(const SuiteReport& rep, const std::string& outDir);

}  // namespace l2lab

#endif
