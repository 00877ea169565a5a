// End-to-end acceptance battery: each criterion drives the suite runner with a
// focused configuration and reports one PASS/FAIL line.  Criteria with runtime
// budgets also fail when the wall-clock limit is exceeded.
#include <chrono>
#include <cstdio>
#include <string>

#include "l2lab/suites.hpp"

using nlohmann::ordered_json;

namespace {

int failures = 0;

void run_criterion(int number, const char* label, const std::string& suite,
                   const ordered_json& config, double budgetSeconds = 0.0) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    bool pass = false;
    std::string note;
    try {
        auto rep = l2lab::run_suite(suite, config);
        pass = rep.pass;
        if (!pass) {
            for (const auto& c : rep.checks)
                if (!c.pass) {
                    note = " [" + c.name + "]";
                    break;
                }
        }
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (budgetSeconds > 0.0 && secs > budgetSeconds) {
        pass = false;
        note += " [over budget " + std::to_string(budgetSeconds) + "s]";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d %s (%.1fs) %s%s\n", number, pass ? "PASS" : "FAIL", secs, label,
                note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    run_criterion(1, "homogeneous data attain the optimal constant", "sharpness",
                  {{"battery", 0}}, 5.0);
    run_criterion(2, "random battery respects the optimal-constant inequality", "sharpness",
                  {{"homogeneous", false}}, 10.0);
    run_criterion(3, "minimal integrals are concave in r, closed form reproduced", "concavity",
                  {{"linearity", false}});
    run_criterion(4, "linear curves force coefficientwise restriction", "concavity",
                  {{"battery", 0}, {"closed_form", false}});
    run_criterion(5, "product lower bound, equality cases, and layer residuals", "product",
                  ordered_json::object(), 30.0);
    run_criterion(6, "disc kernel-capacity equality at four radii", "suita",
                  {{"parts", ordered_json::array({"disc"})}});
    run_criterion(7, "annulus equality loci at the predicted radii", "suita",
                  {{"parts", ordered_json::array({"annulus"})}}, 60.0);
    run_criterion(8, "pointwise extension bound and kernel-volume bound", "blocki",
                  ordered_json::object());
    run_criterion(9, "kernel equals reciprocal indicatrix volume (ball/disc/balanced)",
                  "azukawa",
                  {{"parts", ordered_json::array({"ball", "disc", "balanced"})}});
    run_criterion(10, "tube-mass limit matches the capacity closed form", "azukawa",
                  {{"parts", ordered_json::array({"tube"})}});
    run_criterion(11, "auxiliary ODE identities and explicit constants", "auxconstants",
                  ordered_json::object());
    run_criterion(12, "kernel deterioration is monotone and constant on the disc", "suita",
                  {{"parts", ordered_json::array({"deterioration"})}});

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
