#ifndef OGF_VERIFY_HPP
#define OGF_VERIFY_HPP

#include <string>
#include <vector>

namespace ogf {

/// Outcome of one verification check.
///   pass    -- the identity holds against the series-engine oracle.
///   fail    -- the identity (or the implementation) is broken.
///   flagged -- the source identification as printed disagrees with the
///             oracle, while a corrected reading agrees; the check records
///             the erratum instead of hiding it.
enum class VerifyStatus { pass, fail, flagged };

const char* to_string(VerifyStatus status);

struct VerifyResult {
    std::string suite;  ///< suite that produced the result
    std::string id;     ///< stable dotted identifier, unique across suites
    VerifyStatus status = VerifyStatus::fail;
    std::string detail; ///< one-line explanation of what was checked / found
};

/// Names of the individual suites, in canonical execution order:
/// explicit, recurrence, binet, euler, lambert, catalog.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite by name, or every suite for "all".  Results come back in
/// a deterministic order; randomized checks use fixed seeds.  n_max bounds
/// the expansion depth of the checks (clamped to [4, 64]).
/// Errors: unknown_entry for an unrecognized suite name.
std::vector<VerifyResult> run_verify_suite(const std::string& suite, int n_max = 10);

} // namespace ogf

#endif
