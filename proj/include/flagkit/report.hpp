#pragma once

#include <map>
#include <string>
#include <vector>

namespace flagkit {

enum class CheckStatus { Pass, Fail, Flagged };

std::string status_name(CheckStatus s);
CheckStatus status_from_name(const std::string& name);

struct Check {
    std::string name;
    std::string paper_ref;  // theorem/lemma label the check implements, e.g. "Thm 4.6"
    CheckStatus status = CheckStatus::Pass;
    std::vector<std::string> witnesses;
    std::string detail;

    friend bool operator==(const Check& a, const Check& b) {
        return a.name == b.name && a.paper_ref == b.paper_ref && a.status == b.status &&
               a.witnesses == b.witnesses && a.detail == b.detail;
    }
};

/// Machine-readable pass/fail record with witnesses. Deterministic: checks keep
/// insertion order, parameters are sorted by key, nothing time-dependent.
struct VerificationReport {
    std::string group;
    std::map<std::string, std::string> parameters;
    std::vector<Check> checks;

    Check& add(std::string name, std::string paper_ref);
    bool all_passed() const;     // no Fail (Flagged counts as pass)
    int fail_count() const;
    int flagged_count() const;
    void append(const VerificationReport& other);  // concatenates checks

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.group == b.group && a.parameters == b.parameters && a.checks == b.checks;
    }
};

enum class ReportFormat { Text, JsonLines };

/// Deterministic serialization; json-lines is one JSON object per check after a
/// header object, text is an aligned table. Both parse back exactly.
std::string emit_report(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report(const std::string& data, ReportFormat format);

}  // namespace flagkit
