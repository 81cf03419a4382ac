// One line per acceptance criterion: PASS or FAIL, wall time and budget.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "haantjes/suites.hpp"

namespace {

using haantjes::CheckStatus;
using haantjes::SuiteOptions;
using haantjes::VerificationReport;

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<std::string()> run;  // empty string on success, reason otherwise
};

std::string failures(const VerificationReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        if (c.status == CheckStatus::fail) out += (out.empty() ? "" : "; ") + c.id + " (" + c.residual + ")";
    }
    return out;
}

std::function<std::string()> suite(std::string name, SuiteOptions options = {}) {
    return [name = std::move(name), options] {
        const VerificationReport r = haantjes::run_suite(name, options);
        if (r.checks.empty()) return std::string("no checks ran");
        return failures(r);
    };
}

#ifdef HAANTJES_CLI
std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cli_determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "haantjes_acceptance";
    std::filesystem::create_directories(dir);
    std::string outputs[2];
    for (int i = 0; i < 2; ++i) {
        const auto path = dir / ("run" + std::to_string(i) + ".json");
        const std::string cmd = std::string("\"") + HAANTJES_CLI + "\" run numeric --seed 7 --samples 40 --format json --out \"" +
                                path.string() + "\" > /dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) return "CLI exited with status " + std::to_string(rc);
        outputs[i] = read_file(path);
    }
    std::filesystem::remove_all(dir);
    if (outputs[0].empty()) return "empty report";
    return outputs[0] == outputs[1] ? "" : "reports differ between runs";
}
#else
std::string cli_determinism() { return "CLI target not built"; }
#endif

} // namespace

int main() {
    SuiteOptions n5;
    n5.N = 5;
    SuiteOptions elliptic_numeric;
    elliptic_numeric.k1 = haantjes::Rational(3, 5);
    elliptic_numeric.k2 = haantjes::Rational(4, 5);

    const std::array<Criterion, 12> criteria{{
        {1, "H_(2) commutes with J, I1, I2 and the dependence relation holds", 5.0, suite("superintegrability", n5)},
        {2, "cubic Higgs algebra and Casimir", 10.0, suite("symmetry-algebra")},
        {3, "Haantjes/Nijenhuis torsion of the operator catalog", 60.0, suite("torsion")},
        {4, "chain equations K^T dH = dI", 30.0, suite("chain", n5)},
        {5, "chain solver recovers the catalog operators", 120.0, suite("solver")},
        {6, "all ten brackets canonical for every coordinate map", 60.0, suite("canonical")},
        {7, "separated forms and separation operators", 60.0, suite("separated")},
        {8, "elliptic separation, symbolic and at k = (3/5, 4/5)", 60.0,
         [elliptic_numeric] {
             std::string r = suite("elliptic")();
             const std::string d = suite("elliptic", elliptic_numeric)();
             return r + (r.empty() || d.empty() ? "" : "; ") + d;
         }},
        {9, "separated ODE singularity classes", 1.0, suite("ode")},
        {10, "polar-type obstruction for N >= 3", 30.0, suite("obstruction", n5)},
        {11, "geodesic residuals at 100 samples per branch and float cross-checks", 30.0, suite("numeric")},
        {12, "CLI output is byte-for-byte deterministic", 30.0, cli_determinism},
    }};

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && seconds > c.budget_seconds) reason = "over time budget";
        const bool ok = reason.empty();
        if (!ok) ++failed;
        std::printf("criterion %2d %s  %.2fs/%.0fs  %s%s%s\n", c.number, ok ? "PASS" : "FAIL", seconds, c.budget_seconds,
                    c.description.c_str(), ok ? "" : "  -- ", reason.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
