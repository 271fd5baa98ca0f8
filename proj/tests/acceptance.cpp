// Acceptance suite: runs the full verification table (including the
// integration-oracle rows) and writes the density-curve CSV artifacts.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "horopack/report.hpp"

int main() {
    using namespace horo;

    VerifyOptions opts;
    opts.with_oracle = true;

    VerifyReport rep;
    try {
        rep = run_verification(opts);
    } catch (const std::exception& e) {
        std::cerr << "acceptance: verification aborted: " << e.what() << '\n';
        return 1;
    }
    print_verify_report(std::cout, rep);

    // Density-curve artifacts for the four positive-z scenarios and the
    // mirrored family.
    try {
        std::filesystem::create_directories("acceptance_artifacts");
        for (ScenarioId id : all_scenarios()) {
            Interval iv;
            try {
                iv = scenario_interval(id);
            } catch (const InfeasibleScenario&) {
                continue;
            }
            const double lo = iv.lo + 1e-6 * (iv.hi - iv.lo);
            const double hi = iv.hi - 1e-9;
            if (!(lo < hi))
                continue;
            const DensityCurve c = scan(id, lo, hi, 512);
            std::ofstream f(std::string("acceptance_artifacts/") + scenario_name(id) +
                            "_density.csv");
            write_curve_csv(f, c);
        }
        std::ofstream j("acceptance_artifacts/verify_report.json");
        j << to_json(rep).dump(2) << '\n';
    } catch (const std::exception& e) {
        std::cerr << "acceptance: artifact generation failed: " << e.what() << '\n';
        return 1;
    }

    std::cout << (rep.pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << '\n';
    return rep.pass ? 0 : 1;
}
