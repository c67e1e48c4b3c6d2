#include <gtest/gtest.h>

#include <cstdlib>

#include "htk/report.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::P_;

nlohmann::json without_timing(nlohmann::json j) {
    for (auto& c : j["checks"]) c.erase("micros");
    return j;
}

std::vector<SystemAction> all_actions() {
    std::vector<SystemAction> out;
    for (const auto& [name, a] : system_action_names()) out.push_back(a);
    return out;
}

TEST(Report, VerdictStrings) {
    for (auto v : {Verdict::pass, Verdict::fail, Verdict::evidence_only}) EXPECT_EQ(verdict_from_string(to_string(v)), v);
    EXPECT_THROW(verdict_from_string("maybe"), std::invalid_argument);
}

TEST(Report, RunCheckCapturesExceptions) {
    auto c = run_check("boom", 3, "throws", [](nlohmann::json&) -> Verdict { throw std::runtime_error("bad"); });
    EXPECT_EQ(c.verdict, Verdict::fail);
    EXPECT_EQ(c.payload.at("error"), "bad");
    EXPECT_EQ(c.criterion, 3);
}

TEST(Report, CriterionVerdicts) {
    Report r;
    r.checks.push_back(run_check("a", 1, "", [](nlohmann::json&) { return Verdict::pass; }));
    r.checks.push_back(run_check("b", 1, "", [](nlohmann::json&) { return Verdict::evidence_only; }));
    r.checks.push_back(run_check("c", 2, "", [](nlohmann::json&) { return Verdict::fail; }));
    EXPECT_EQ(r.criterion_verdict(1), Verdict::pass);
    EXPECT_EQ(r.criterion_verdict(2), Verdict::fail);
    EXPECT_EQ(r.criterion_verdict(3), Verdict::fail);
    EXPECT_FALSE(r.ok());
}

TEST(Report, JsonRoundTripIsByteIdentical) {
    const Report r = system_report("iv", all_actions(), 7);
    const std::string dumped = to_json(r).dump();
    const Report back = report_from_json(nlohmann::json::parse(dumped));
    EXPECT_EQ(to_json(back).dump(), dumped);
    EXPECT_EQ(back.checks.size(), r.checks.size());
}

TEST(Report, SameSeedSameResults) {
    const auto a = without_timing(to_json(system_report("sw1", all_actions(), 42)));
    const auto b = without_timing(to_json(system_report("sw1", all_actions(), 42)));
    EXPECT_EQ(a, b);
}

TEST(Report, HessianReport) {
    const Report zero = hessian_report(P_("x1^3"), 3);
    ASSERT_EQ(zero.checks.size(), 4U);
    EXPECT_TRUE(zero.ok());
    EXPECT_TRUE(zero.checks.back().payload.at("zero").get<bool>());
    const Report cubic = hessian_report(P_("x1^3 + x1*x2*x3"), 3);
    EXPECT_FALSE(cubic.checks.back().payload.at("zero").get<bool>());
    EXPECT_TRUE(cubic.checks.back().payload.contains("witness"));
    EXPECT_THROW(hessian_report(P_("x1^-1"), 2), TensorError);
    EXPECT_NE(to_text(cubic, true).find("[PASS]"), std::string::npos);
}

TEST(Report, SystemReports) {
    const Report osc = system_report("oscillator", all_actions(), 1);
    EXPECT_TRUE(osc.ok()) << to_text(osc, true);
    const Report sw1 = system_report("sw1", all_actions(), 1);
    EXPECT_TRUE(sw1.ok()) << to_text(sw1, true);
    for (const auto& c : sw1.checks)
        if (c.name == "linear-subspace") EXPECT_TRUE(c.payload.at("linear_factors").empty());
    const Report nm = system_report("nonmaximal-3d", {SystemAction::family, SystemAction::mechanics}, 1);
    EXPECT_TRUE(nm.ok()) << to_text(nm, true);
    EXPECT_THROW(system_report("kepler", all_actions(), 1), KillingError);
}

TEST(Report, SampleCountFromEnvironment) {
    ::unsetenv("HAANTJES_TRIALS");
    EXPECT_EQ(sample_count(10, 5), 10);
    ::setenv("HAANTJES_TRIALS", "3", 1);
    EXPECT_EQ(sample_count(10, 5), 5);
    ::setenv("HAANTJES_TRIALS", "64", 1);
    EXPECT_EQ(sample_count(10, 5), 64);
    ::setenv("HAANTJES_TRIALS", "many", 1);
    EXPECT_THROW(sample_count(10, 5), std::invalid_argument);
    ::unsetenv("HAANTJES_TRIALS");
}

}  // namespace
}  // namespace htk
