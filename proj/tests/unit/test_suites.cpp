#include <gtest/gtest.h>

#include <set>

#include "haantjes/suites.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

TEST(Suites, CatalogNamesAreUnique) {
    const auto suites = suite_catalog();
    EXPECT_GE(suites.size(), 9u);
    std::set<std::string> names;
    for (const auto& s : suites) {
        EXPECT_TRUE(names.insert(s.name).second) << s.name;
        EXPECT_FALSE(s.description.empty());
    }
}

TEST(Suites, EveryRegisteredSuitePasses) {
    SuiteOptions o;
    o.fixture_dir = HAANTJES_FIXTURE_DIR;
    for (const auto& s : suite_catalog()) {
        const VerificationReport r = run_suite(s.name, o);
        EXPECT_FALSE(r.checks.empty()) << s.name;
        for (const auto& c : r.checks) EXPECT_NE(c.status, CheckStatus::fail) << s.name << "." << c.id << ": " << c.residual;
    }
}

TEST(Suites, UnknownNameThrows) { EXPECT_THROW((void)run_suite("no-such-suite"), UnknownSuite); }

TEST(Suites, DegreeOutOfRangeThrows) {
    SuiteOptions o;
    o.N = 9;
    EXPECT_THROW((void)run_suite("superintegrability", o), Error);
}

TEST(Suites, JsonIsDeterministicAndRoundTrips) {
    const VerificationReport a = run_suite("superintegrability");
    const VerificationReport b = run_suite("superintegrability");
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(to_json(a), to_json(b));
    const VerificationReport back = report_from_json(to_json(a));
    EXPECT_EQ(to_json(back), to_json(a));
    EXPECT_TRUE(diff_reports(a, back).empty());
}

TEST(Suites, DiffReportsSeesStatusChange) {
    VerificationReport a = run_suite("ode");
    VerificationReport b = a;
    b.checks.front().status = CheckStatus::fail;
    EXPECT_FALSE(diff_reports(a, b).empty());
    EXPECT_THROW((void)report_from_json("{\"schema_version\": 99}"), Error);
    EXPECT_THROW((void)report_from_json("{\"schema_version\": 1}"), Error);
    EXPECT_THROW((void)report_from_json("[1, 2]"), Error);
}

TEST(Suites, NumericBindingsSpecialize) {
    SuiteOptions o;
    o.k1 = Rational(3, 5);
    o.k2 = Rational(4, 5);
    o.gamma1 = Rational(1);
    const Bindings b = suite_bindings(o);
    EXPECT_EQ(b.size(), 3u);
    EXPECT_TRUE(run_suite("elliptic", o).passed());
}

TEST(Suites, TextFormatListsEveryCheck) {
    const VerificationReport r = run_suite("ode");
    const std::string text = to_text(r);
    for (const auto& c : r.checks) EXPECT_NE(text.find(c.id), std::string::npos) << c.id;
}

} // namespace
} // namespace haantjes::test
