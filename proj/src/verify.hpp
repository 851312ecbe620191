#ifndef KC_VERIFY_HPP
#define KC_VERIFY_HPP

/* Named verification suites.  Each suite sweeps a bounded input space
 * deterministically and checks one statement with two independently computed
 * sides (or against a frozen witness).  Reports carry the swept bounds so a
 * failure is reproducible from the report alone. */

#include <optional>
#include <string>
#include <vector>

namespace kc {

/* Bounds preset.  "standard" serializes as "default"; the keyword is taken. */
enum class Profile { quick, standard, thorough };

std::optional<Profile> parse_profile(const std::string& name);
const char* profile_name(Profile p);

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string name;
    std::string profile;
    std::string bounds;     /* human-readable sweep description */
    long long cases_run = 0;
    std::vector<SuiteFailure> failures;  /* capped; see truncated */
    bool truncated = false;
    double wall_time_ms = 0.0;
    std::string error;      /* nonempty when the sweep itself threw */

    /* A suite that ran nothing proves nothing, so an empty sweep fails. */
    bool passed() const {
        return error.empty() && cases_run > 0 && failures.empty();
    }
};

/* Fixed registry order; run_all reports in this order. */
const std::vector<std::string>& suite_names();

/* Throws std::invalid_argument for an unknown name (message lists the
 * valid ones).  Property violations never throw: they land in failures. */
SuiteReport run_suite(const std::string& name, Profile profile);

std::vector<SuiteReport> run_all(Profile profile);

bool all_passed(const std::vector<SuiteReport>& reports);

/* One record per suite: a "suite:" block of key/value lines. */
std::string report_text(const SuiteReport& r);
std::string reports_text(const std::vector<SuiteReport>& rs);
std::string report_json(const SuiteReport& r);
std::string reports_json(const std::vector<SuiteReport>& rs);

/* Drops every process-global memo (characters, tableaux, contingency,
 * Kronecker).  The fault-injection test plants a wrong character and needs
 * a clean slate afterwards. */
void clear_all_caches();

} // namespace kc

#endif
