#include "flagkit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace flagkit {

using json = nlohmann::ordered_json;

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Flagged: return "flagged";
    }
    throw std::logic_error("bad status");
}

CheckStatus status_from_name(const std::string& name) {
    if (name == "pass") return CheckStatus::Pass;
    if (name == "fail") return CheckStatus::Fail;
    if (name == "flagged") return CheckStatus::Flagged;
    throw std::invalid_argument("unknown check status: " + name);
}

Check& VerificationReport::add(std::string name, std::string paper_ref) {
    Check c;
    c.name = std::move(name);
    c.paper_ref = std::move(paper_ref);
    checks.push_back(std::move(c));
    return checks.back();
}

bool VerificationReport::all_passed() const { return fail_count() == 0; }

int VerificationReport::fail_count() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; }));
}

int VerificationReport::flagged_count() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Flagged; }));
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string emit_json_lines(const VerificationReport& r) {
    std::string out;
    json header;
    header["group"] = r.group;
    header["parameters"] = json::object();
    for (const auto& [k, v] : r.parameters) header["parameters"][k] = v;
    out += header.dump() + "\n";
    for (const auto& c : r.checks) {
        json line;
        line["name"] = c.name;
        line["paper_ref"] = c.paper_ref;
        line["status"] = status_name(c.status);
        line["witnesses"] = c.witnesses;
        line["detail"] = c.detail;
        out += line.dump() + "\n";
    }
    return out;
}

VerificationReport parse_json_lines(const std::string& data) {
    VerificationReport r;
    std::istringstream in(data);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (!header_seen) {
            r.group = j.at("group").get<std::string>();
            for (auto& [k, v] : j.at("parameters").items())
                r.parameters[k] = v.get<std::string>();
            header_seen = true;
            continue;
        }
        Check c;
        c.name = j.at("name").get<std::string>();
        c.paper_ref = j.at("paper_ref").get<std::string>();
        c.status = status_from_name(j.at("status").get<std::string>());
        c.witnesses = j.at("witnesses").get<std::vector<std::string>>();
        c.detail = j.at("detail").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    if (!header_seen) throw std::invalid_argument("report stream has no header line");
    return r;
}

// Text layout: header lines, then one check per line:
//   <status, padded>  <name, padded>  "<paper_ref>"  [w1; w2]  detail...
// Witness strings and names never contain ';', '[' or ']'; details are
// single-line. That keeps the table parseable.
std::string emit_text(const VerificationReport& r) {
    std::string out = "report: " + r.group + "\n";
    for (const auto& [k, v] : r.parameters) out += "param: " + k + "=" + v + "\n";
    std::size_t name_w = 4;
    for (const auto& c : r.checks) name_w = std::max(name_w, c.name.size());
    for (const auto& c : r.checks) {
        std::string line = status_name(c.status);
        line.resize(8, ' ');
        std::string name = c.name;
        name.resize(name_w + 2, ' ');
        line += name;
        line += "\"" + c.paper_ref + "\"  [";
        for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
            if (i) line += "; ";
            line += c.witnesses[i];
        }
        line += "]";
        if (!c.detail.empty()) line += "  " + c.detail;
        out += line + "\n";
    }
    return out;
}

VerificationReport parse_text(const std::string& data) {
    VerificationReport r;
    std::istringstream in(data);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("report: ", 0) == 0) {
            r.group = line.substr(8);
            header_seen = true;
            continue;
        }
        if (line.rfind("param: ", 0) == 0) {
            std::string kv = line.substr(7);
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad param line: " + line);
            r.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
            continue;
        }
        Check c;
        std::istringstream ls(line);
        std::string status_tok, name_tok;
        ls >> status_tok >> name_tok;
        c.status = status_from_name(status_tok);
        c.name = name_tok;
        auto q1 = line.find('"');
        auto q2 = line.find('"', q1 + 1);
        if (q1 == std::string::npos || q2 == std::string::npos)
            throw std::invalid_argument("bad check line: " + line);
        c.paper_ref = line.substr(q1 + 1, q2 - q1 - 1);
        auto b1 = line.find('[', q2);
        auto b2 = line.find(']', b1);
        if (b1 == std::string::npos || b2 == std::string::npos)
            throw std::invalid_argument("bad check line: " + line);
        std::string ws = line.substr(b1 + 1, b2 - b1 - 1);
        std::size_t pos = 0;
        while (pos < ws.size()) {
            auto sep = ws.find("; ", pos);
            if (sep == std::string::npos) {
                c.witnesses.push_back(ws.substr(pos));
                break;
            }
            c.witnesses.push_back(ws.substr(pos, sep - pos));
            pos = sep + 2;
        }
        if (b2 + 3 <= line.size()) c.detail = line.substr(b2 + 3);
        r.checks.push_back(std::move(c));
    }
    if (!header_seen) throw std::invalid_argument("report stream has no header line");
    return r;
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    return format == ReportFormat::JsonLines ? emit_json_lines(report) : emit_text(report);
}

VerificationReport parse_report(const std::string& data, ReportFormat format) {
    return format == ReportFormat::JsonLines ? parse_json_lines(data) : parse_text(data);
}

}  // namespace flagkit
