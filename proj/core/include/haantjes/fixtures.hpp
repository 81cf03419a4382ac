#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "haantjes/canonical_map.hpp"
#include "haantjes/chain_solver.hpp"
#include "haantjes/obstruction.hpp"
#include "haantjes/separation.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

inline constexpr int kFixtureSchemaVersion = 1;

/// JSON documents with a "kind" field; expressions are stored in the text
/// grammar accepted by parse_expression, over the standard context.
std::string operator_fixture(const CatalogEntry& entry);
CatalogEntry load_operator_fixture(const std::string& text);

std::string map_fixture(const CanonicalMap& map);
CanonicalMap load_map_fixture(const std::string& text);

std::string candidate_fixture(const EptCandidate& candidate);
EptCandidate load_candidate_fixture(const std::string& text);

std::string separated_fixture(const SeparatedForm& form);
SeparatedForm load_separated_fixture(const std::string& text);

std::string expression_fixture(const std::string& name, const Scalar& value, const std::string& note);

/// Output of the chain solver together with the Haantjes filter.
struct FamilyFixture {
    std::string hamiltonian;
    std::string integral;
    int degree = 2;
    std::vector<std::string> parameters;
    int parameter_degree = 1;
    LinearSolutionFamily family;
    FilterResult filter;
    /// Catalog operators that belong to the family.
    std::vector<std::string> catalog_members;
};
std::string family_fixture(const FamilyFixture& fixture);

/// Named functions accepted by solve_request in place of expressions:
/// H_1..H_5, J, J2, I1, I2, I_e.
std::optional<Scalar> named_function(std::string_view name);

/// Chain solver front end. Empty `parameters` selects the parameters that
/// occur in H or I; a missing parameter degree takes the parameter degree of I
/// (at least one).
FamilyFixture solve_request(const std::string& hamiltonian, const std::string& integral, int degree,
                            std::vector<std::string> parameters = {}, std::optional<int> parameter_degree = {});

/// Relative path and contents of every shipped fixture, in a fixed order.
struct FixtureFile {
    std::string path;
    std::string contents;
};
std::vector<FixtureFile> generate_fixtures();
void write_fixtures(const std::filesystem::path& root);

/// Loads every fixture under `root`, re-verifies the objects it describes and
/// compares each file with its regenerated contents.
VerificationReport fixture_suite(const std::filesystem::path& root);

} // namespace haantjes
