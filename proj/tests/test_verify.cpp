/* The verification harness itself: registry, determinism, report formats,
 * and the fault-injection proof that a corrupted character table cannot
 * slip through the agreement suite. */

#include <algorithm>

#include "json.hpp"

#include "characters.hpp"
#include "partition.hpp"
#include "test_util.hpp"
#include "verify.hpp"

using namespace kc;
using namespace kctest;

static void test_registry() {
    const std::vector<std::string>& names = suite_names();
    check_eq(names.size(), static_cast<size_t>(17), "seventeen suites");
    check_eq(names.front(), std::string("theorem1"), "registry order start");
    check_eq(names.back(), std::string("saturation_witness"),
             "registry order end");
    for (const char* expected :
         {"theorem1_general", "lemma_shift", "lemma_walls", "stable_range",
          "lemma25_bound", "lemma26_structure", "murnaghan_lr", "s3_symmetry",
          "transpose_pairs", "dvir_vanishing", "semigroup_spot",
          "schur_kron_eq4", "triple_cauchy_eq7", "hm_product_identity",
          "algorithm_agreement"})
        check(std::find(names.begin(), names.end(), expected) != names.end(),
              std::string("registry lists ") + expected);

    try {
        run_suite("no_such_suite", Profile::quick);
        check(false, "unknown suite must throw");
    } catch (const std::invalid_argument& e) {
        check(std::string(e.what()).find("theorem1") != std::string::npos,
              "the rejection lists the valid names");
    }
}

static void test_profiles() {
    check(parse_profile("quick") == Profile::quick, "quick parses");
    check(parse_profile("default") == Profile::standard, "default parses");
    check(parse_profile("thorough") == Profile::thorough, "thorough parses");
    check(!parse_profile("standard").has_value(),
          "the internal enum name is not a spelling");
    check_eq(std::string(profile_name(Profile::standard)),
             std::string("default"), "standard serializes as default");
}

static void test_suite_runs() {
    SuiteReport r = run_suite("saturation_witness", Profile::quick);
    check(r.passed(), "witness suite passes");
    check_eq(r.name, std::string("saturation_witness"), "name echoed");
    check_eq(r.profile, std::string("quick"), "profile echoed");
    check(r.cases_run > 0, "a passing suite ran something");
    check(!r.bounds.empty(), "bounds are described");
    check(r.error.empty(), "no error recorded");

    /* Equal bounds, equal sweep: the harness is deterministic. */
    SuiteReport a = run_suite("theorem1", Profile::quick);
    SuiteReport b = run_suite("theorem1", Profile::quick);
    check_eq(a.cases_run, b.cases_run, "repeat runs count the same cases");
    check(a.passed() && b.passed(), "theorem1 passes at quick");

    SuiteReport deeper = run_suite("theorem1", Profile::standard);
    check(deeper.cases_run > a.cases_run, "default bounds exceed quick");
}

static void test_report_formats() {
    SuiteReport r = run_suite("murnaghan_lr", Profile::quick);
    std::string text = report_text(r);
    check(text.find("suite: murnaghan_lr") != std::string::npos,
          "text names the suite");
    check(text.find("status: pass") != std::string::npos, "text shows status");
    check(text.find("cases_run:") != std::string::npos, "text shows the count");

    nlohmann::json j = nlohmann::json::parse(report_json(r));
    check_eq(j.at("suite").get<std::string>(), r.name, "json suite field");
    check_eq(j.at("status").get<std::string>(), std::string("pass"),
             "json status field");
    check_eq(j.at("cases_run").get<long long>(), r.cases_run,
             "json case count");
    check(j.at("failures").is_array() && j.at("failures").empty(),
          "json failures empty on a pass");
    check(j.at("truncated").get<bool>() == false, "json truncated flag");

    std::vector<SuiteReport> rs = {r, run_suite("s3_symmetry", Profile::quick)};
    nlohmann::json all = nlohmann::json::parse(reports_json(rs));
    check_eq(all.at("suites").size(), static_cast<size_t>(2),
             "json bundle lists both");
    check(all.at("all_passed").get<bool>(), "json bundle verdict");
    std::string bundle = reports_text(rs);
    check(bundle.find("overall: pass") != std::string::npos,
          "text bundle verdict");
}

static void test_fault_injection() {
    clear_all_caches();
    debug_inject_character(Partition({2, 1}), Partition({3}), Int(5));

    SuiteReport broken = run_suite("algorithm_agreement", Profile::quick);
    check(!broken.passed(), "corrupted characters cannot pass");
    if (broken.error.empty()) {
        check(!broken.failures.empty(), "disagreements were recorded");
        for (const SuiteFailure& f : broken.failures) {
            check(!f.input.empty() && !f.expected.empty() && !f.got.empty(),
                  "failure rows carry full context");
        }
        check(broken.failures.size() <= 50, "failure list is capped");
    }

    /* Same corruption, same report: the sweep order is deterministic. */
    SuiteReport again = run_suite("algorithm_agreement", Profile::quick);
    check_eq(again.failures.size(), broken.failures.size(),
             "deterministic failure count");
    for (size_t i = 0; i < again.failures.size(); i++)
        check(again.failures[i].input == broken.failures[i].input &&
                  again.failures[i].got == broken.failures[i].got,
              "deterministic failure order");

    std::string text = report_text(broken);
    check(text.find("status: fail") != std::string::npos,
          "text reports the failure");
    nlohmann::json j = nlohmann::json::parse(report_json(broken));
    check_eq(j.at("status").get<std::string>(), std::string("fail"),
             "json reports the failure");

    clear_all_caches();
    SuiteReport healed = run_suite("algorithm_agreement", Profile::quick);
    check(healed.passed(), "clearing the caches heals the run");
}

static void test_run_all_quick() {
    std::vector<SuiteReport> rs = run_all(Profile::quick);
    check_eq(rs.size(), suite_names().size(), "run_all covers the registry");
    for (size_t i = 0; i < rs.size(); i++)
        check_eq(rs[i].name, suite_names()[i], "registry order preserved");
    check(all_passed(rs), "everything passes at quick");
}

int main() {
    test_registry();
    test_profiles();
    test_suite_runs();
    test_report_formats();
    test_fault_injection();
    test_run_all_quick();
    return report("test_verify");
}
