#pragma once

#include <optional>
#include <string>
#include <vector>

namespace haantjes {

enum class CheckStatus { pass, fail, recorded };

std::string to_string(CheckStatus status);

/// One verified identity. `residual` is "0" for an exact zero, the head of
/// the nonzero residual otherwise; numeric checks fill `max_error` instead.
struct CheckResult {
    std::string id;
    std::string identity;
    CheckStatus status = CheckStatus::fail;
    std::string residual = "0";
    std::optional<double> max_error;
    std::optional<double> tolerance;
    std::string note;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    std::size_t count(CheckStatus status) const noexcept;

    void add(CheckResult check) { checks.push_back(std::move(check)); }
    /// Appends every check of `other`, prefixing ids.
    void merge(const VerificationReport& other, const std::string& prefix = {});
};

/// Exact check: pass iff `is_zero`.
CheckResult exact_check(std::string id, std::string identity, bool is_zero, std::string residual_head);
/// Boolean check with a free-form note.
CheckResult bool_check(std::string id, std::string identity, bool ok, std::string note = {});
CheckResult recorded(std::string id, std::string identity, std::string note);
CheckResult numeric_check(std::string id, std::string identity, double max_error, double tolerance,
                          std::string note = {});

inline constexpr int kReportSchemaVersion = 1;

/// Stable document; wall times only when requested so that reports are
/// byte-for-byte reproducible by default.
std::string to_json(const VerificationReport& report, bool include_timings = false);
/// Throws Error on malformed input.
VerificationReport report_from_json(const std::string& text);
std::string to_text(const VerificationReport& report, bool include_timings = false);

/// Line-per-difference comparison of two reports; empty when identical in
/// every check's status and residual.
std::vector<std::string> diff_reports(const VerificationReport& before, const VerificationReport& after);

} // namespace haantjes
