#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace yforge {

struct CheckResult {
    std::string id;
    std::string anchor;  // which formula the check pins down
    std::string params;
    enum class Status { pass, fail, skipped } status = Status::fail;
    std::string residual;  // "0", a leading-term note, or the skip reason
    double wall_ms = 0;    // console diagnostics only, never serialized
};

struct SuiteParams {
    int y1_max = 4;
    int serre_max = 2;
    int comm_max = 6;
    int order = 6;
    int level = 3;
    int mode_max = 2;
    int lmax = 4;
    std::string config = "0,1,1";
    std::string mode = "standard";  // boson normalization
    int workers = 0;                // 0: from the environment, else 1
    std::string quiver_json;        // optional extra geom instance
};

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Deterministic serialization: no timing, fixed ordering.
    std::string to_json() const;
    std::string summary_line() const;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Run one suite (or "all"); checks execute in a worker pool sized by
/// YANGIAN_FORGE_WORKERS, results are assembled in definition order.
SuiteReport run_suite(const std::string& name, const SuiteParams& p);

/// The normalization calibration: which kappa(m) flag closes the Virasoro
/// relation, plus the screening offsets of the two standard configurations.
SuiteReport calibrate_report();

}  // namespace yforge

namespace yforge {
struct MatrixOp;
/// Matrix snapshot as JSON: sector charges, level bound, and sparse entries
/// with exact numerator/denominator strings.
std::string matrix_op_to_json(const MatrixOp& m);
}  // namespace yforge
