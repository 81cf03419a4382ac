#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "haantjes/fixtures.hpp"
#include "haantjes/suites.hpp"
#include "json.hpp"

namespace {

using haantjes::Rational;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUnknownSuite = 2;
constexpr int kExitInternal = 3;

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw haantjes::Error("expected a rational such as 3/5, got '" + text + "'");
    r.canonicalize();
    return r;
}

const CLI::Validator kRational(
    [](std::string& text) {
        Rational r;
        return r.set_str(text, 10) == 0 ? std::string() : "expected a rational such as 3/5, got '" + text + "'";
    },
    "RATIONAL");

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw haantjes::Error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw haantjes::Error("cannot write " + path);
    out << contents;
}

struct RunFlags {
    std::string suite;
    int N = haantjes::kMaxFamilyDegree;
    std::string k1, k2, gamma1, gamma2;
    int deg = 2;
    std::uint64_t seed = haantjes::kDefaultSeed;
    int samples = 100;
    double tol = haantjes::kDefaultTolerance;
    std::string format = "json";
    std::string out;
    std::string fixtures = HAANTJES_FIXTURE_DIR;
    bool timings = false;
};

haantjes::SuiteOptions suite_options(const RunFlags& f) {
    haantjes::SuiteOptions o;
    o.N = f.N;
    auto set = [](std::optional<Rational>& slot, const std::string& text) {
        if (!text.empty()) slot = parse_rational(text);
    };
    set(o.k1, f.k1);
    set(o.k2, f.k2);
    set(o.gamma1, f.gamma1);
    set(o.gamma2, f.gamma2);
    o.deg = f.deg;
    o.seed = f.seed;
    o.samples = f.samples;
    o.tol = f.tol;
    o.fixture_dir = f.fixtures;
    return o;
}

int run_command(const RunFlags& f) {
    const haantjes::VerificationReport report = haantjes::run_suite(f.suite, suite_options(f));
    const std::string doc = f.format == "json" ? haantjes::to_json(report, f.timings) : haantjes::to_text(report, f.timings);
    write_output(f.out, doc);
    if (!f.out.empty() && f.out != "-") std::cout << haantjes::to_text(report, f.timings);
    return report.passed() ? 0 : kExitChecksFailed;
}

int list_command(const std::string& format) {
    const auto suites = haantjes::suite_catalog();
    if (format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& s : suites) doc.push_back({{"name", s.name}, {"description", s.description}});
        std::cout << doc.dump(2) << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& s : suites) width = std::max(width, s.name.size());
        for (const auto& s : suites) std::cout << s.name << std::string(width + 2 - s.name.size(), ' ') << s.description << '\n';
    }
    return 0;
}

struct SolveFlags {
    std::string h, i;
    int deg = 2;
    std::vector<std::string> parameters;
    int parameter_degree = -1;
    std::string out;
};

int solve_command(const SolveFlags& f) {
    std::optional<int> pdeg;
    if (f.parameter_degree >= 0) pdeg = f.parameter_degree;
    const haantjes::FamilyFixture fixture = haantjes::solve_request(f.h, f.i, f.deg, f.parameters, pdeg);
    write_output(f.out, haantjes::family_fixture(fixture));
    if (!f.out.empty() && f.out != "-") {
        const auto& fam = fixture.family;
        if (fam.consistent) {
            std::cout << "consistent: kernel " << fam.basis.size() << ", Haantjes members " << fixture.filter.members.size()
                      << " (" << fixture.filter.strategy << ")";
            for (const auto& name : fixture.catalog_members) std::cout << ", contains " << name;
            std::cout << '\n';
        } else {
            std::cout << "inconsistent; uncancelled:";
            for (const auto& d : fam.diagnostics) std::cout << ' ' << d;
            std::cout << '\n';
        }
    }
    return fixture.family.consistent ? 0 : kExitChecksFailed;
}

int diff_command(const std::string& before, const std::string& after) {
    const auto a = haantjes::report_from_json(read_file(before));
    const auto b = haantjes::report_from_json(read_file(after));
    const auto lines = haantjes::diff_reports(a, b);
    for (const auto& line : lines) std::cout << line << '\n';
    return lines.empty() ? 0 : kExitChecksFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Haantjes-algebra separation of variables"};
    app.require_subcommand(1);

    RunFlags run;
    CLI::App* run_cmd = app.add_subcommand("run", "run a named verification suite");
    run_cmd->add_option("suite,--suite", run.suite, "suite name (see list)");
    run_cmd->add_option("--N", run.N, "largest gamma_N")->check(CLI::Range(1, haantjes::kMaxFamilyDegree));
    run_cmd->add_option("--k1", run.k1, "rational k1")->check(kRational);
    run_cmd->add_option("--k2", run.k2, "rational k2")->check(kRational);
    run_cmd->add_option("--gamma1", run.gamma1, "rational gamma1")->check(kRational);
    run_cmd->add_option("--gamma2", run.gamma2, "rational gamma2")->check(kRational);
    run_cmd->add_option("--deg", run.deg, "chain solver ansatz degree")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--seed", run.seed, "random seed");
    run_cmd->add_option("--samples", run.samples, "numeric samples per branch")->check(CLI::PositiveNumber);
    run_cmd->add_option("--tol", run.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", run.format, "report format")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_option("--out", run.out, "report file (stdout when absent)");
    run_cmd->add_option("--fixtures", run.fixtures, "fixture directory");
    run_cmd->add_flag("--timings", run.timings, "include wall times (not reproducible)");

    std::string list_format = "text";
    CLI::App* list_cmd = app.add_subcommand("list", "list the suites");
    list_cmd->add_option("--format", list_format, "output format")->check(CLI::IsMember({"json", "text"}));

    SolveFlags solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve K^T dH = dI and write a fixture");
    solve_cmd->add_option("--H", solve.h, "Hamiltonian: expression or H_1..H_5")->required();
    solve_cmd->add_option("--I", solve.i, "integral: expression or J, J2, I1, I2, I_e")->required();
    solve_cmd->add_option("--deg", solve.deg, "ansatz degree")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--params", solve.parameters, "parameters allowed in the coefficients")->delimiter(',');
    solve_cmd->add_option("--param-deg", solve.parameter_degree, "degree in the parameters")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--out", solve.out, "fixture file (stdout when absent)");

    std::string diff_before, diff_after;
    CLI::App* diff_cmd = app.add_subcommand("report-diff", "compare two JSON reports");
    diff_cmd->add_option("before", diff_before, "earlier report")->required()->check(CLI::ExistingFile);
    diff_cmd->add_option("after", diff_after, "later report")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run_cmd) {
            if (run.suite.empty()) {
                std::cerr << "run: a suite name is required\n";
                return kExitUnknownSuite;
            }
            return run_command(run);
        }
        if (*list_cmd) return list_command(list_format);
        if (*solve_cmd) return solve_command(solve);
        if (*diff_cmd) return diff_command(diff_before, diff_after);
    } catch (const haantjes::UnknownSuite& e) {
        std::cerr << e.what() << "; see 'list'\n";
        return kExitUnknownSuite;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
