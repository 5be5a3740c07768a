#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "ogf/errors.hpp"
#include "ogf/verify.hpp"

using namespace ogf;

namespace {
std::vector<std::string> golden_flag_ids() {
    std::ifstream in(std::string(OGF_GOLDEN_DIR) + "/verify_flags.txt");
    REQUIRE(in.good());
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ids.push_back(line);
    return ids;
}
} // namespace

TEST_CASE("suite registry") {
    const std::vector<std::string>& names = verify_suite_names();
    const std::vector<std::string> expected = {"explicit", "recurrence", "binet",
                                               "euler",    "lambert",    "catalog"};
    CHECK(names == expected);
    CHECK_THROWS_AS(run_verify_suite("nope"), Error);
    try {
        run_verify_suite("nope");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_entry);
    }
}

TEST_CASE("single suite runs clean and reports its known erratum") {
    std::vector<VerifyResult> results = run_verify_suite("explicit", 6);
    CHECK(results.size() >= 5);
    bool saw_flag = false;
    for (const VerifyResult& r : results) {
        CHECK(r.suite == "explicit");
        CHECK_FALSE(r.id.empty());
        CHECK_FALSE(r.detail.empty());
        CHECK(r.status != VerifyStatus::fail);
        if (r.id == "series.order_addition_convolution_index") {
            saw_flag = true;
            CHECK(r.status == VerifyStatus::flagged);
        }
    }
    CHECK(saw_flag);
}

TEST_CASE("full run: no failures, flags exactly match the golden list") {
    std::vector<VerifyResult> results = run_verify_suite("all", 6);
    CHECK(results.size() >= 40);

    std::set<std::string> ids;
    std::vector<std::string> flagged;
    unsigned failed = 0;
    for (const VerifyResult& r : results) {
        CHECK(ids.insert(r.id).second); // ids are unique across suites
        if (r.status == VerifyStatus::flagged) flagged.push_back(r.id);
        if (r.status == VerifyStatus::fail) {
            ++failed;
            MESSAGE("unexpected failure: " << r.id << " - " << r.detail);
        }
    }
    CHECK(failed == 0);

    std::sort(flagged.begin(), flagged.end());
    std::vector<std::string> golden = golden_flag_ids();
    CHECK(std::is_sorted(golden.begin(), golden.end()));
    CHECK(flagged == golden);
}

TEST_CASE("depth parameter is clamped, not trusted") {
    // both extremes must complete; the cheap suite keeps this fast
    std::vector<VerifyResult> tiny = run_verify_suite("lambert", 0);
    std::vector<VerifyResult> huge = run_verify_suite("lambert", 1000);
    CHECK(tiny.size() == huge.size());
    for (const VerifyResult& r : tiny) CHECK(r.status != VerifyStatus::fail);
    for (const VerifyResult& r : huge) CHECK(r.status != VerifyStatus::fail);
}

TEST_CASE("status names") {
    CHECK(std::string(to_string(VerifyStatus::pass)) == "PASS");
    CHECK(std::string(to_string(VerifyStatus::fail)) == "FAIL");
    CHECK(std::string(to_string(VerifyStatus::flagged)) == "FLAGGED");
}
