#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "haantjes/fixtures.hpp"
#include "test_support.hpp"

namespace haantjes::test {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("haantjes_fixture_test_" + name);
    fs::remove_all(dir);
    return dir;
}

TEST(Fixtures, RepositoryFixturesAreCurrent) {
    const VerificationReport r = fixture_suite(HAANTJES_FIXTURE_DIR);
    EXPECT_TRUE(r.passed());
    EXPECT_GE(r.checks.size(), 30u);
}

TEST(Fixtures, OperatorRoundTrip) {
    const CatalogEntry e = catalog("K_e", {}, false);
    const std::string text = operator_fixture(e);
    const CatalogEntry back = load_operator_fixture(text);
    EXPECT_TRUE(equal(back.tensor, e.tensor, e.relations));
    EXPECT_EQ(operator_fixture(back), text);
}

TEST(Fixtures, MapRoundTrip) {
    for (const char* name : {"polar", "elliptic"}) {
        const CanonicalMap map = canonical_map(name);
        const std::string text = map_fixture(map);
        EXPECT_EQ(map_fixture(load_map_fixture(text)), text) << name;
        EXPECT_TRUE(verify_canonical(load_map_fixture(text)).passed()) << name;
    }
}

TEST(Fixtures, DriftIsDetected) {
    const fs::path dir = scratch("drift");
    write_fixtures(dir);
    EXPECT_TRUE(fixture_suite(dir).passed());
    const fs::path target = dir / "operators" / "K_I2.json";
    ASSERT_TRUE(fs::exists(target));
    std::stringstream buf;
    buf << std::ifstream(target).rdbuf();
    std::string text = buf.str();
    text.insert(text.size() - 2, " ");
    std::ofstream(target) << text;
    EXPECT_FALSE(fixture_suite(dir).passed());
    fs::remove_all(dir);
}

TEST(Fixtures, MalformedInputThrows) {
    EXPECT_THROW((void)load_operator_fixture("{"), Error);
    EXPECT_THROW((void)load_operator_fixture("{\"kind\": \"canonical_map\"}"), Error);
    EXPECT_THROW((void)load_map_fixture("[]"), Error);
}

TEST(Fixtures, NamedFunctions) {
    for (const char* name : {"H_1", "H_5", "J", "J2", "I1", "I2", "I_e"}) EXPECT_TRUE(named_function(name).has_value()) << name;
    EXPECT_FALSE(named_function("H_9").has_value());
}

TEST(Fixtures, SolveRequestContainsCatalogOperator) {
    const FamilyFixture f = solve_request("H_2", "I2", 2);
    EXPECT_TRUE(f.family.consistent);
    EXPECT_FALSE(f.catalog_members.empty());
}

} // namespace
} // namespace haantjes::test
