#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "horopack/optimizer.hpp"
#include "horopack/sector_oracle.hpp"

namespace horo {

/// Rounds to the given number of significant digits (used so that serialized
/// reports round-trip losslessly).
double round_sig(double v, int digits);
std::string fmt_sig(double v, int digits);

nlohmann::json to_json(const Arrangement& arr);
nlohmann::json to_json(const OptimumResult& res);
nlohmann::json to_json(const GlobalSearchResult& res);
nlohmann::json to_json(const DensityCurve& curve);

/// CSV rows "scenario,z,alpha,tet_volume,sector_sum,density" at 12
/// significant digits; byte-identical across runs for fixed inputs.
void write_curve_csv(std::ostream& os, const DensityCurve& curve);

struct VerifyRow {
    std::string name;
    double reference = 0.0;
    double computed = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::string chord_convention; // outcome of the arc/chord reading checks
    std::string angle_map;        // outcome of the corrected-denominator checks
    bool pass = false;
};

struct VerifyOptions {
    bool with_oracle = true; // the oracle-agreement rows dominate the runtime
    int oracle_instances = 20;
    OracleOptions oracle;
};

/// Runs the full verification table (the acceptance criteria).
VerifyReport run_verification(const VerifyOptions& opts = {});

nlohmann::json to_json(const VerifyReport& rep);
void print_verify_report(std::ostream& os, const VerifyReport& rep);

/// Command-line entry point (also used by tests, in-process).
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 infeasible input.
int run_cli(int argc, const char* const* argv);

} // namespace horo
