#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "subsetsums/verify.hpp"

using namespace subsetsums;

namespace {

const std::vector<std::string> kCheckNames = {
    "group_axioms",          "index_bijection",  "total_sum",
    "sum_identity",          "duality",          "translation_invariance",
    "brute_force_agreement", "recurrence_agreement", "eq3_agreement",
    "g_recurrence",          "h2_structure",     "deviation_bound",
    "base_case_bounds",      "ratio_bound",      "code_distance",
    "code_size_sandwich",    "serialization_roundtrip",
};

std::map<std::string, Verdict> verdict_map(const VerifyReport& report) {
    std::map<std::string, Verdict> out;
    for (const auto& c : report.checks) out[c.name] = c.verdict;
    return out;
}

}  // namespace

TEST_CASE("verify_group runs the full check list in order") {
    const VerifyReport report = verify_group(GroupSpec::parse("8"));
    REQUIRE(report.checks.size() == kCheckNames.size());
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        CHECK(report.checks[i].name == kCheckNames[i]);
    }
}

TEST_CASE("small group passes every check with no skips") {
    for (const std::string spec : {"8", "2,2,2", "6", "2,4"}) {
        CAPTURE(spec);
        const VerifyReport report = verify_group(GroupSpec::parse(spec));
        CHECK(report.all_passed());
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CHECK(c.verdict == Verdict::pass);
        }
    }
}

TEST_CASE("order above the g-recurrence cap skips only that sweep") {
    for (const std::string spec : {"9", "4,3"}) {
        CAPTURE(spec);
        const VerifyReport report = verify_group(GroupSpec::parse(spec));
        CHECK(report.all_passed());
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            if (c.name == "g_recurrence") {
                CHECK(c.verdict == Verdict::skip);
            } else {
                CHECK(c.verdict == Verdict::pass);
            }
        }
    }
}

TEST_CASE("larger group skips exactly the exhaustive-only checks") {
    const VerifyReport report = verify_group(GroupSpec::parse("24"));
    CHECK(report.all_passed());
    const auto v = verdict_map(report);
    CHECK(v.at("group_axioms") == Verdict::pass);
    CHECK(v.at("sum_identity") == Verdict::pass);
    CHECK(v.at("translation_invariance") == Verdict::pass);
    CHECK(v.at("h2_structure") == Verdict::pass);
    CHECK(v.at("deviation_bound") == Verdict::pass);
    CHECK(v.at("base_case_bounds") == Verdict::pass);
    CHECK(v.at("ratio_bound") == Verdict::pass);
    CHECK(v.at("code_size_sandwich") == Verdict::pass);
    CHECK(v.at("serialization_roundtrip") == Verdict::pass);
    CHECK(v.at("duality") == Verdict::skip);
    CHECK(v.at("brute_force_agreement") == Verdict::skip);
    CHECK(v.at("recurrence_agreement") == Verdict::skip);
    CHECK(v.at("eq3_agreement") == Verdict::skip);
    CHECK(v.at("g_recurrence") == Verdict::skip);
    CHECK(v.at("code_distance") == Verdict::skip);
}

TEST_CASE("mid-size group keeps exhaustive checks but drops eq3 and g sweeps") {
    const VerifyReport report = verify_group(GroupSpec::parse("2,7"));  // n = 14
    CHECK(report.all_passed());
    const auto v = verdict_map(report);
    CHECK(v.at("duality") == Verdict::pass);
    CHECK(v.at("brute_force_agreement") == Verdict::pass);
    CHECK(v.at("recurrence_agreement") == Verdict::pass);
    CHECK(v.at("code_distance") == Verdict::pass);
    CHECK(v.at("eq3_agreement") == Verdict::skip);
    CHECK(v.at("g_recurrence") == Verdict::skip);
}

TEST_CASE("trivial group verifies with the expected skips") {
    const VerifyReport report = verify_group(GroupSpec::parse(""));
    CHECK(report.all_passed());
    const auto v = verdict_map(report);
    CHECK(v.at("group_axioms") == Verdict::pass);
    CHECK(v.at("duality") == Verdict::pass);
    CHECK(v.at("eq3_agreement") == Verdict::skip);
    CHECK(v.at("g_recurrence") == Verdict::skip);
    CHECK(v.at("h2_structure") == Verdict::skip);
    CHECK(v.at("deviation_bound") == Verdict::skip);
    CHECK(v.at("ratio_bound") == Verdict::skip);
    CHECK(v.at("code_size_sandwich") == Verdict::skip);
}

TEST_CASE("report JSON carries names, inputs, and verdicts") {
    const VerifyReport report = verify_group(GroupSpec::parse("2,4"));
    const auto j = report.json();
    CHECK(j.at("group") == "2,4");
    CHECK(j.at("n") == 8);
    CHECK(j.at("all_passed") == true);
    REQUIRE(j.at("checks").size() == kCheckNames.size());
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        const auto& cj = j.at("checks")[i];
        CHECK(cj.at("name") == kCheckNames[i]);
        CHECK(cj.at("inputs").at("group") == "2,4");
        CHECK(cj.at("inputs").at("n") == 8);
        CHECK(cj.at("verdict") == "pass");
        CHECK(cj.contains("detail"));
    }
}

TEST_CASE("verdicts are deterministic across repeated runs") {
    const VerifyReport a = verify_group(GroupSpec::parse("24"));
    const VerifyReport b = verify_group(GroupSpec::parse("24"));
    CHECK(a.json() == b.json());
}
