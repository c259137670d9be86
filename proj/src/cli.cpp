#include "flagkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <thread>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagkit/bwb.hpp"
#include "flagkit/chevalley.hpp"
#include "flagkit/penrose.hpp"
#include "flagkit/reproduce.hpp"

namespace flagkit {

namespace {

struct CommandResult {
    std::string output;
    int exit_code = 0;
};

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json-lines") return ReportFormat::JsonLines;
    throw std::invalid_argument("unknown format '" + name + "' (use text or json-lines)");
}

int report_exit_code(const VerificationReport& report) {
    return report.all_passed() ? 0 : 1;
}

std::string describe_text(const std::string& group) {
    auto spec = parse_group(group);
    auto rhos = rho_components(spec);
    std::ostringstream out;
    out << "group: " << spec.group_label << "\n";
    out << "ambient_dim: " << spec.rs.ambient_dim << "\n";
    auto print_set = [&](const char* name, const std::vector<CoordinateVector>& set) {
        out << name << ":";
        for (const auto& r : set) out << " " << to_text(r);
        out << "\n";
    };
    print_set("Delta_c+", spec.delta_c_pos);
    print_set("Delta_nc1+", spec.delta_nc1_pos);
    print_set("Delta_nc2+", spec.delta_nc2_pos);
    out << "d=" << spec.delta_c_pos.size() << " q=" << spec.delta_nc1_pos.size()
        << " p=" << spec.delta_nc2_pos.size() << "\n";
    out << "rho = " << to_text(rhos.rho) << "\n";
    out << "rho_c = " << to_text(rhos.rho_c) << "\n";
    out << "rho_nc = " << to_text(rhos.rho_nc) << "\n";
    out << "rho_nc1 = " << to_text(rhos.rho_nc1) << "\n";
    out << "rho_nc2 = " << to_text(rhos.rho_nc2) << "\n";
    out << "rho' = " << to_text(rhos.rho_prime) << "\n";
    out << "rho'_nc = " << to_text(rhos.rho_prime_nc) << "\n";
    out << "rho_nc - rho_c = " << to_text(rhos.rho_nc - rhos.rho_c) << "\n";
    return out.str();
}

CoordinateVector parse_weight_arg(const HermitianDomainSpec& spec, const std::string& text,
                                  const char* who) {
    CoordinateVector w = parse_vector(text);
    if (w.dim() != static_cast<std::size_t>(spec.rs.ambient_dim))
        throw std::invalid_argument(std::string(who) + ": weight " + text + " has dimension " +
                                    std::to_string(w.dim()) + ", expected " +
                                    std::to_string(spec.rs.ambient_dim));
    return w;
}

VerificationReport run_check_predicate(const std::string& predicate, const std::string& group,
                                       const std::string& weight) {
    auto spec = parse_group(group);
    if (weight.empty()) throw std::invalid_argument("check " + predicate + " requires --weight");
    CoordinateVector w = parse_weight_arg(spec, weight, "check");
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["weight"] = to_text(w);
    if (predicate == "injectivity") {
        auto witness = check_injectivity(spec, w);
        auto& c = report.add("thm46-injectivity", "Thm 4.6");
        for (const auto& [beta, alpha] : witness.assignments)
            c.witnesses.push_back("beta=" + to_text(beta) + " alpha=" + to_text(alpha));
        if (!witness.holds) {
            c.status = CheckStatus::Fail;
            for (const auto& beta : spec.delta_nc1_pos)
                if (!witness.assignments.count(beta))
                    c.detail += (c.detail.empty() ? "no witness for beta=" : ", beta=") +
                                to_text(beta);
        }
    } else if (predicate == "nontrivial") {
        auto& c = report.add("thm47-nontrivial-necessary", "Thm 4.7");
        if (!check_nontriviality_necessary(spec, w)) {
            c.status = CheckStatus::Fail;
            for (const auto& alpha : spec.delta_c_pos)
                if (inner(w, alpha) < 0) c.witnesses.push_back("alpha=" + to_text(alpha));
        }
    } else if (predicate == "chamber") {
        auto& c = report.add("thm56-chamber", "Thm 5.6");
        if (!check_chamber(spec, w)) c.status = CheckStatus::Fail;
        auto degrees = chamber_degrees(spec, w);
        c.detail = "q=" + std::to_string(degrees.q_of) +
                   " q'=" + std::to_string(degrees.q_prime_of) +
                   (degrees.regular ? " regular" : " singular");
    } else if (predicate == "propw") {
        auto& c = report.add("lemma54-property-w", "Lemma 5.4");
        auto result = check_property_w(spec, w);
        if (!result.has_value()) {
            c.status = CheckStatus::Fail;
            c.detail = "mu+rho is singular";
        } else if (!*result) {
            c.status = CheckStatus::Fail;
        }
    } else {
        throw std::invalid_argument("unknown predicate '" + predicate +
                                    "' (injectivity|nontrivial|chamber|propw)");
    }
    return report;
}

VerificationReport run_verify(const std::string& what, const std::string& group,
                              const std::string& weight) {
    auto spec = parse_group(group);
    if (what == "lemma49") return verify_beta_alpha_lemma(spec, false);
    if (what == "lemma410") return verify_beta_alpha_lemma(spec, true);
    if (what == "lemma42") return verify_lemma_4_2(build_chevalley(spec), spec);
    if (what == "omega-closed") return verify_omega_nc1_closed(spec);
    if (what == "mu-j") {
        if (weight.empty()) throw std::invalid_argument("verify mu-j requires --weight");
        return verify_mu_j_vanishing(spec, parse_weight_arg(spec, weight, "verify mu-j"));
    }
    throw std::invalid_argument("unknown verify target '" + what +
                                "' (lemma49|lemma410|lemma42|omega-closed|mu-j)");
}

VerificationReport run_canonical(const std::string& group) {
    auto spec = parse_group(group);
    auto canonical = canonical_mu_c(spec);
    VerificationReport report;
    report.group = spec.group_label;
    auto& c = report.add("canonical-weight", "Sec 5");
    c.witnesses.push_back("mu_c_prime=" + to_text(canonical.mu_c_prime));
    c.detail = "k0=" + std::to_string(canonical.k0);
    return report;
}

VerificationReport run_threshold(const std::string& group, const std::string& mu0_text) {
    auto spec = parse_group(group);
    CoordinateVector mu0 = mu0_text.empty()
                               ? CoordinateVector::zero(spec.rs.ambient_dim)
                               : parse_weight_arg(spec, mu0_text, "threshold");
    auto result = threshold_n(spec, mu0);
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["mu0"] = to_text(mu0);
    auto& summary = report.add("threshold-N", "Thm 5.8");
    summary.detail = "N=" + std::to_string(result.N) + " k0=" + std::to_string(result.k0) +
                     " mu_c_prime=" + to_text(result.mu_c_prime);
    for (const auto& pc : result.per_constraint) {
        auto& c = report.add("constraint:" + pc.id, "Thm 6.1");
        c.detail = "min_k=" + std::to_string(pc.min_k);
    }
    auto& minimality = report.add("threshold-minimality", "Thm 5.8");
    if (result.N > 1) {
        minimality.detail = "fails at k=N-1";
        for (const auto& id : result.failing_at_n_minus_1) minimality.witnesses.push_back(id);
    } else {
        minimality.detail = "N=1, nothing below to fail";
    }
    return report;
}

VerificationReport run_cup_search(const std::string& group, int bound) {
    auto spec = parse_group(group);
    auto pairs = search_cup_pairs(spec, bound);
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["bound"] = std::to_string(bound);
    auto& c = report.add("cup-search", "Thm 6.3");
    c.detail = std::to_string(pairs.size()) + " pairs found";
    for (const auto& [mu0, lambda0] : pairs)
        c.witnesses.push_back("mu0=" + to_text(mu0) + " lambda0=" + to_text(lambda0));
    return report;
}

VerificationReport run_bwb(const std::string& group, const std::string& weight) {
    auto spec = parse_group(group);
    if (weight.empty()) throw std::invalid_argument("bwb requires --weight");
    CoordinateVector w = parse_weight_arg(spec, weight, "bwb");
    auto outcome = bwb_cohomology(spec, w);
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["weight"] = to_text(w);
    auto& c = report.add("bwb-cohomology", "Thm 3.6");
    if (outcome.status == BwbOutcome::Status::AllVanish) {
        c.detail = "AllVanish";
    } else {
        c.detail = "Concentrated degree=" + std::to_string(outcome.degree) +
                   " dimension=" + outcome.dimension.str();
        c.witnesses.push_back("dominant_rep=" + to_text(outcome.dominant_rep));
    }
    return report;
}

const std::vector<std::string> kSupportedCommands = {
    "describe",        "validate",         "check injectivity", "check nontrivial",
    "check chamber",   "check propw",      "canonical",         "threshold",
    "cup-search",      "verify lemma49",   "verify lemma410",   "verify lemma42",
    "verify omega-closed", "verify mu-j",  "bwb",               "reproduce-examples"};

CommandResult run_command(const std::string& command, const std::string& group,
                          const std::string& weight, const std::string& mu0, int bound,
                          ReportFormat format, bool dump_chevalley_table) {
    CommandResult result;
    if (command == "describe") {
        result.output = describe_text(group);
        return result;
    }
    VerificationReport report;
    if (command == "validate") {
        report = validate_domain(parse_group(group));
    } else if (command.rfind("check ", 0) == 0) {
        report = run_check_predicate(command.substr(6), group, weight);
    } else if (command == "canonical") {
        report = run_canonical(group);
    } else if (command == "threshold") {
        report = run_threshold(group, mu0);
    } else if (command == "cup-search") {
        report = run_cup_search(group, bound);
    } else if (command.rfind("verify ", 0) == 0) {
        report = run_verify(command.substr(7), group, weight);
    } else if (command == "bwb") {
        report = run_bwb(group, weight);
    } else if (command == "reproduce-examples") {
        report = reproduce_examples();
    } else {
        throw std::invalid_argument("unsupported command '" + command + "'");
    }
    result.output = emit_report(report, format);
    if (command == "verify lemma42" && dump_chevalley_table)
        result.output += dump_table(build_chevalley(parse_group(group)));
    result.exit_code = report_exit_code(report);
    return result;
}

int max_workers() {
    if (const char* env = std::getenv("FLAGKIT_MAX_WORKERS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

CommandResult run_batch(const std::string& path, ReportFormat format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open batch config '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    BatchConfig config = parse_batch_config(buffer.str());

    std::vector<CommandResult> results(config.jobs.size());
    const std::size_t workers = static_cast<std::size_t>(max_workers());
    for (std::size_t base = 0; base < config.jobs.size(); base += workers) {
        std::vector<std::future<CommandResult>> futures;
        for (std::size_t i = base; i < std::min(base + workers, config.jobs.size()); ++i) {
            const BatchJob& job = config.jobs[i];
            futures.push_back(std::async(std::launch::async, [&job, format] {
                try {
                    auto it = job.options.find("bound");
                    int bound = it == job.options.end() ? 5 : std::stoi(it->second);
                    auto mu0_it = job.options.find("mu0");
                    std::string mu0 = mu0_it == job.options.end() ? "" : mu0_it->second;
                    return run_command(job.command, job.group, job.weight, mu0, bound, format,
                                       false);
                } catch (const std::exception& e) {
                    // keep the batch going; the failed job reports in place
                    CommandResult error;
                    error.output = std::string("error: ") + e.what() + "\n";
                    error.exit_code = 2;
                    return error;
                }
            }));
        }
        for (std::size_t i = base; i < std::min(base + workers, config.jobs.size()); ++i)
            results[i] = futures[i - base].get();
    }

    CommandResult combined;
    for (const auto& r : results) {
        combined.output += r.output;
        combined.exit_code = std::max(combined.exit_code, r.exit_code);
    }
    return combined;
}

}  // namespace

BatchConfig parse_batch_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("batch config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("jobs") || !doc["jobs"].is_array())
        throw std::invalid_argument("batch config must be an object with a 'jobs' array");
    BatchConfig config;
    for (const auto& j : doc["jobs"]) {
        BatchJob job;
        job.command = j.at("command").get<std::string>();
        if (std::find(kSupportedCommands.begin(), kSupportedCommands.end(), job.command) ==
            kSupportedCommands.end())
            throw std::invalid_argument("batch job references unsupported command '" +
                                        job.command + "'");
        if (j.contains("group")) job.group = j["group"].get<std::string>();
        if (job.command != "reproduce-examples") {
            if (job.group.empty())
                throw std::invalid_argument("batch job '" + job.command + "' needs a group");
            parse_group(job.group);  // parse now, before any job runs
        }
        if (j.contains("weight")) {
            job.weight = j["weight"].get<std::string>();
            parse_vector(job.weight);
        }
        if (j.contains("options"))
            for (auto& [k, v] : j["options"].items()) {
                std::string value = v.get<std::string>();
                if (k == "bound") {
                    if (value.empty() ||
                        value.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("batch job has a malformed bound '" + value +
                                                    "'");
                } else if (k == "mu0") {
                    parse_vector(value);
                } else {
                    throw std::invalid_argument("batch job has an unknown option '" + k + "'");
                }
                job.options[k] = value;
            }
        config.jobs.push_back(std::move(job));
    }
    return config;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"flagkit: exact root-combinatorial checks for Penrose transformations on "
                 "Hermitian flag domains"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "report format: text or json-lines")
        ->capture_default_str();

    std::string group, weight, mu0, predicate, what, batch_path;
    int bound = 5;
    bool dump = false;

    auto* describe = app.add_subcommand("describe", "print the root split and rho components");
    describe->add_option("group", group)->required();

    auto* validate = app.add_subcommand("validate", "run the structural domain checks");
    validate->add_option("group", group)->required();

    auto* check = app.add_subcommand("check", "weight predicates: injectivity|nontrivial|chamber|propw");
    check->add_option("predicate", predicate)->required();
    check->add_option("group", group)->required();
    check->add_option("--weight", weight, "weight, comma-separated rationals")->required();

    auto* canonical = app.add_subcommand("canonical", "canonical weight mu'_c and k0");
    canonical->add_option("group", group)->required();

    auto* threshold = app.add_subcommand("threshold", "threshold N for the canonical family");
    threshold->add_option("group", group)->required();
    threshold->add_option("--mu0", mu0, "twisting weight (default 0)");

    auto* cup = app.add_subcommand("cup-search", "box search for cup-product weight pairs");
    cup->add_option("group", group)->required();
    cup->add_option("--bound", bound, "coordinate box bound")->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "verification reports: lemma49|lemma410|lemma42|omega-closed|mu-j");
    verify->add_option("what", what)->required();
    verify->add_option("group", group)->required();
    verify->add_option("--weight", weight, "mu' for mu-j");
    verify->add_flag("--dump-table", dump, "print the structure-constant table (lemma42)");

    auto* bwb = app.add_subcommand("bwb", "cohomology of the weight on the base cycle");
    bwb->add_option("group", group)->required();
    bwb->add_option("--weight", weight)->required();

    app.add_subcommand("reproduce-examples", "run the full worked-examples suite");

    auto* batch = app.add_subcommand("batch", "run a JSON batch config");
    batch->add_option("config", batch_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        ReportFormat format = parse_format(format_name);
        std::string command;
        if (describe->parsed()) command = "describe";
        else if (validate->parsed()) command = "validate";
        else if (check->parsed()) command = "check " + predicate;
        else if (canonical->parsed()) command = "canonical";
        else if (threshold->parsed()) command = "threshold";
        else if (cup->parsed()) command = "cup-search";
        else if (verify->parsed()) command = "verify " + what;
        else if (bwb->parsed()) command = "bwb";
        else if (app.get_subcommand("reproduce-examples")->parsed()) command = "reproduce-examples";

        CommandResult result;
        if (batch->parsed())
            result = run_batch(batch_path, format);
        else
            result = run_command(command, group, weight, mu0, bound, format, dump);
        out << result.output;
        if (result.exit_code == 0 && result.output.find("flagged") != std::string::npos)
            err << "warning: some checks are flagged (documented exceptions)\n";
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace flagkit
