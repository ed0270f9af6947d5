#ifndef GREENSUM_CHECKS_HPP
#define GREENSUM_CHECKS_HPP

#include <string>
#include <vector>

namespace greensum::checks {

// One verification record: a computed value against its reference, with the
// provenance of the reference and the declared tolerance. pass holds iff
// |computed - reference| <= tolerance.
struct CheckResult {
    std::string id;
    std::string module;
    std::string description;
    std::string provenance;  // "literature", "oracle" or "exact"
    double computed = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    std::string note;
};

std::vector<std::string> all_ids();
std::vector<std::string> module_names();

CheckResult run(const std::string& id);

// Runs the selected checks (all when ids is empty), optionally restricted to
// one module and optionally on several threads. Results come back sorted by
// id regardless of execution order.
std::vector<CheckResult> run_selected(const std::vector<std::string>& ids, int jobs = 1,
                                      const std::string& module = "");

}  // namespace greensum::checks

#endif
