#include "haantjes/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "haantjes/errors.hpp"

namespace haantjes {

namespace {

// Fixed-format floats keep the documents reproducible across libc versions.
std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    return buf;
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "recorded") return CheckStatus::recorded;
    throw Error("unknown check status '" + s + "'");
}

} // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::recorded:
        return "recorded";
    }
    return "fail";
}

bool VerificationReport::passed() const noexcept {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::size_t VerificationReport::count(CheckStatus status) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [status](const CheckResult& c) { return c.status == status; }));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto check : other.checks) {
        if (!prefix.empty()) check.id = prefix + "." + check.id;
        checks.push_back(std::move(check));
    }
}

CheckResult exact_check(std::string id, std::string identity, bool is_zero, std::string residual_head) {
    CheckResult c;
    c.id = std::move(id);
    c.identity = std::move(identity);
    c.status = is_zero ? CheckStatus::pass : CheckStatus::fail;
    c.residual = is_zero ? "0" : std::move(residual_head);
    return c;
}

CheckResult bool_check(std::string id, std::string identity, bool ok, std::string note) {
    CheckResult c;
    c.id = std::move(id);
    c.identity = std::move(identity);
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    c.residual = ok ? "0" : "condition violated";
    c.note = std::move(note);
    return c;
}

CheckResult recorded(std::string id, std::string identity, std::string note) {
    CheckResult c;
    c.id = std::move(id);
    c.identity = std::move(identity);
    c.status = CheckStatus::recorded;
    c.residual = "n/a";
    c.note = std::move(note);
    return c;
}

CheckResult numeric_check(std::string id, std::string identity, double max_error, double tolerance, std::string note) {
    CheckResult c;
    c.id = std::move(id);
    c.identity = std::move(identity);
    c.status = max_error < tolerance ? CheckStatus::pass : CheckStatus::fail;
    c.residual = "max " + format_double(max_error);
    c.max_error = max_error;
    c.tolerance = tolerance;
    c.note = std::move(note);
    return c;
}

std::string to_json(const VerificationReport& report, bool include_timings) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["suite"] = report.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    doc["parameters"] = params;
    doc["summary"] = {{"total", report.checks.size()},
                      {"pass", report.count(CheckStatus::pass)},
                      {"fail", report.count(CheckStatus::fail)},
                      {"recorded", report.count(CheckStatus::recorded)},
                      {"ok", report.passed()}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["identity"] = c.identity;
        j["status"] = to_string(c.status);
        j["residual"] = c.residual;
        if (c.max_error) {
            nlohmann::ordered_json numeric;
            numeric["max_error"] = format_double(*c.max_error);
            if (c.tolerance) numeric["tolerance"] = format_double(*c.tolerance);
            j["numeric"] = numeric;
        }
        if (!c.note.empty()) j["note"] = c.note;
        if (include_timings) j["seconds"] = format_double(c.seconds);
        checks.push_back(std::move(j));
    }
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

namespace {

VerificationReport report_fields(const nlohmann::json& doc) {
    VerificationReport r;
    r.suite = doc.at("suite").get<std::string>();
    if (doc.contains("parameters")) {
        for (const auto& [k, v] : doc.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
    }
    for (const auto& j : doc.at("checks")) {
        CheckResult c;
        c.id = j.at("id").get<std::string>();
        c.identity = j.value("identity", std::string{});
        c.status = status_from_string(j.at("status").get<std::string>());
        c.residual = j.value("residual", std::string{});
        c.note = j.value("note", std::string{});
        if (j.contains("numeric")) {
            c.max_error = std::stod(j["numeric"].at("max_error").get<std::string>());
            if (j["numeric"].contains("tolerance")) c.tolerance = std::stod(j["numeric"]["tolerance"].get<std::string>());
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

} // namespace

VerificationReport report_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema_version", 0) != kReportSchemaVersion) {
        throw Error("not a report of schema version " + std::to_string(kReportSchemaVersion));
    }
    try {
        return report_fields(doc);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    } catch (const std::logic_error& e) {
        throw Error(std::string("malformed report number: ") + e.what());
    }
}

std::string to_text(const VerificationReport& report, bool include_timings) {
    std::ostringstream os;
    os << "suite " << report.suite;
    for (const auto& [k, v] : report.parameters) os << ' ' << k << '=' << v;
    os << '\n';
    for (const auto& c : report.checks) {
        os << "  [" << to_string(c.status) << "] " << c.id << "  " << c.identity;
        if (c.status == CheckStatus::fail || c.max_error) os << "  residual: " << c.residual;
        if (!c.note.empty()) os << "  (" << c.note << ')';
        if (include_timings) os << "  " << format_double(c.seconds) << "s";
        os << '\n';
    }
    os << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail) << " fail, "
       << report.count(CheckStatus::recorded) << " recorded\n";
    return os.str();
}

std::vector<std::string> diff_reports(const VerificationReport& before, const VerificationReport& after) {
    std::vector<std::string> out;
    if (before.suite != after.suite) out.push_back("suite: " + before.suite + " -> " + after.suite);
    std::map<std::string, const CheckResult*> old_checks;
    for (const auto& c : before.checks) old_checks[c.id] = &c;
    std::map<std::string, bool> seen;
    for (const auto& c : after.checks) {
        seen[c.id] = true;
        auto it = old_checks.find(c.id);
        if (it == old_checks.end()) {
            out.push_back("+ " + c.id + " [" + to_string(c.status) + "]");
            continue;
        }
        const CheckResult& o = *it->second;
        if (o.status != c.status) out.push_back("~ " + c.id + " status " + to_string(o.status) + " -> " + to_string(c.status));
        if (o.residual != c.residual) out.push_back("~ " + c.id + " residual " + o.residual + " -> " + c.residual);
    }
    for (const auto& c : before.checks) {
        if (!seen.count(c.id)) out.push_back("- " + c.id + " [" + to_string(c.status) + "]");
    }
    return out;
}

} // namespace haantjes
