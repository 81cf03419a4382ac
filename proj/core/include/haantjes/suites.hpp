#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "haantjes/errors.hpp"
#include "haantjes/numeric_eval.hpp"
#include "haantjes/report.hpp"
#include "haantjes/zernike_models.hpp"

namespace haantjes {

class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& name) : Error("unknown suite '" + name + "'") {}
};

struct SuiteOptions {
    /// Largest gamma_N used by the polar, chain and obstruction suites.
    int N = kMaxFamilyDegree;
    std::optional<Rational> k1;
    std::optional<Rational> k2;
    std::optional<Rational> gamma1;
    std::optional<Rational> gamma2;
    /// Ansatz degree of the chain solver.
    int deg = 2;
    std::uint64_t seed = kDefaultSeed;
    int samples = 100;
    double tol = kDefaultTolerance;
    std::filesystem::path fixture_dir;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// Every suite in the order `list` prints them.
std::vector<SuiteInfo> suite_catalog();

/// Throws UnknownSuite for a name outside suite_catalog().
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Bindings for the rational values present in `options`.
Bindings suite_bindings(const SuiteOptions& options);

} // namespace haantjes
