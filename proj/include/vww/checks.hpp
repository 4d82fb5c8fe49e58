#ifndef VWW_CHECKS_HPP
#define VWW_CHECKS_HPP

#include <string>
#include <vector>

namespace vww {

/// Outcome of one built-in verification check.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool warn_only = false; // informative check, never fails the suite
    std::string detail;
    double seconds = 0.0;
};

/// Run the full built-in verification suite: operator identities, oracle
/// equivalences, dispersion and exactness of the linear propagator,
/// self-convergence, energy laws and structure checks. Backs both the
/// `verify` subcommand and the acceptance test binary.
std::vector<CheckResult> run_builtin_checks();

/// True if every non-informative check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace vww

#endif // VWW_CHECKS_HPP
