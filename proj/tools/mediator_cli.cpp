// Command-line front end: detect / willingness / resolve / baselines /
// generate / evaluate over scenario files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mediator/baselines.hpp"
#include "mediator/conflict.hpp"
#include "mediator/evaluation.hpp"
#include "mediator/generator.hpp"
#include "mediator/resolution.hpp"
#include "mediator/scenario_io.hpp"
#include "mediator/willingness.hpp"

namespace fs = std::filesystem;
using namespace mediator;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // validation failure
constexpr int kExitIo = 2;        // parse/IO/usage failure

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string vector_line(const Scenario& s, const ActionVector& v) {
    std::string out;
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        if (i) out += ' ';
        out += s.targets[i] + ":" + std::to_string(v.bits[i]);
    }
    return out;
}

// Loads a scenario or reports why it could not be used. Returns the exit
// code to propagate on failure, kExitOk on success.
int load_or_fail(const std::string& path, bool allow_overlap, Scenario& out) {
    LoadResult r = load_scenario(path);
    if (!r.parsed()) {
        for (const auto& e : r.parse_errors) std::cerr << "error: " << e << '\n';
        return kExitIo;
    }
    if (allow_overlap) {
        r.scenario->allow_overlapping_groups = true;
        r.validation = validate_scenario(*r.scenario);
    }
    for (const auto& w : r.validation.warnings) {
        std::cerr << "warning: " << w.message << '\n';
    }
    if (!r.validation.valid()) {
        for (const auto& v : r.validation.violations) {
            std::cerr << "invalid scenario: " << v.message << '\n';
        }
        return kExitInvalid;
    }
    out = std::move(*r.scenario);
    return kExitOk;
}

bool write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) return false;
    f << content;
    return static_cast<bool>(f);
}

int cmd_detect(const Scenario& s) {
    ConflictSet cs = detect_conflicts(s);
    for (const auto& n : s.negotiators) {
        std::cout << "v_" << n << ": " << vector_line(s, cs.vectors.at(n))
                  << '\n';
    }
    if (cs.conflicts.empty()) {
        std::cout << "no conflicts\n";
    } else {
        std::cout << "conflicts:";
        for (const auto& c : cs.conflicts) std::cout << ' ' << c;
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_willingness(const Scenario& s) {
    ConflictSet cs = detect_conflicts(s);
    if (cs.conflicts.empty()) {
        std::cout << "no conflicts\n";
        return kExitOk;
    }
    std::cout << "negotiator,target,sensitivity,importance,willingness,class\n";
    for (const auto& rep : willingness_reports(s, cs)) {
        std::cout << rep.negotiator << ',' << rep.target << ','
                  << fmt2(rep.sensitivity) << ',' << fmt2(rep.importance)
                  << ',' << fmt2(rep.willingness) << ','
                  << to_string(rep.cls) << '\n';
    }
    return kExitOk;
}

int cmd_resolve(const Scenario& s) {
    ConflictSet cs = detect_conflicts(s);
    ResolutionOutcome outcome = resolve(s, cs, willingness_reports(s, cs));
    std::cout << "o: " << vector_line(s, outcome.actions) << '\n';
    for (const auto& c : cs.conflicts) {
        const ConflictTrace& trace = outcome.per_conflict.at(c);
        std::cout << "conflict " << c << " -> " << trace.resolved_action
                  << " ["
                  << (trace.branch == ConflictBranch::Majority ? "MAJ"
                                                               : "LOW-driven")
                  << "]\n";
        for (const auto& nt : trace.negotiators) {
            std::cout << "  " << nt.negotiator << ": prefers "
                      << nt.preferred_action << ", " << to_string(nt.cls)
                      << ", rule " << to_string(nt.rule)
                      << (nt.conceded ? ", conceded" : ", not conceded")
                      << '\n';
        }
    }
    return kExitOk;
}

int cmd_baselines(const Scenario& s, MajorityTieBreak tie_break) {
    ConflictSet cs = detect_conflicts(s);
    std::cout << "UO: " << vector_line(s, uploader_overwrites(s, cs)) << '\n';
    std::cout << "MV: " << vector_line(s, majority_voting(s, cs, tie_break))
              << '\n';
    std::cout << "VV: " << vector_line(s, veto_voting(s, cs)) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-party privacy conflict mediator"};
    app.require_subcommand(1);

    bool allow_overlap = false;
    app.add_flag("--allow-overlapping-groups", allow_overlap,
                 "permit overlapping groups within one group set");

    std::string scenario_path;
    std::string out_path;
    std::string tie_break_name = "deny";

    auto add_scenario_cmd = [&](const std::string& name,
                                const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("scenario", scenario_path, "scenario file")
            ->required();
        return cmd;
    };

    CLI::App* detect = add_scenario_cmd("detect", "print the conflict set");
    CLI::App* willing =
        add_scenario_cmd("willingness", "print the willingness table");
    CLI::App* resolve_cmd =
        add_scenario_cmd("resolve", "print the mediated outcome and trace");
    CLI::App* baselines_cmd =
        add_scenario_cmd("baselines", "print UO/MV/VV vectors");
    baselines_cmd->add_option("--tie-break", tie_break_name,
                              "majority-vote tie break: deny|uploader");

    CLI::App* generate =
        app.add_subcommand("generate", "write synthetic scenario files");
    GeneratorConfig cfg;
    int count = 10;
    generate->add_option("--seed", cfg.seed, "generator seed");
    generate->add_option("--count", count, "number of scenarios");
    generate->add_option("--delta", cfg.delta, "tie strength scale maximum");
    generate->add_option("--negotiators", cfg.negotiator_count,
                         "negotiators per scenario");
    generate->add_option("--targets", cfg.target_count,
                         "targets per scenario");
    generate->add_option("--groups", cfg.groups_per_user, "groups per user");
    generate->add_option("--grant-prob", cfg.grant_probability,
                         "probability a group is granted");
    generate->add_option("--exception-prob", cfg.exception_probability,
                         "probability a target is an exception");
    generate->add_option("--out", out_path, "output directory")->required();

    CLI::App* evaluate_cmd = app.add_subcommand(
        "evaluate", "compare mechanisms against concession records");
    std::string records_path;
    std::string scenarios_dir;
    evaluate_cmd->add_option("records", records_path, "concession record CSV")
        ->required();
    evaluate_cmd
        ->add_option("--scenarios", scenarios_dir,
                     "directory of .scenario files")
        ->required();
    evaluate_cmd->add_option("--tie-break", tie_break_name,
                             "majority-vote tie break: deny|uploader");
    evaluate_cmd->add_option("--out", out_path, "write the CSV report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    }

    MajorityTieBreak tie_break;
    if (tie_break_name == "deny") {
        tie_break = MajorityTieBreak::Deny;
    } else if (tie_break_name == "uploader") {
        tie_break = MajorityTieBreak::Uploader;
    } else {
        std::cerr << "error: --tie-break must be 'deny' or 'uploader'\n";
        return kExitIo;
    }

    try {
        if (*generate) {
            std::error_code ec;
            fs::create_directories(out_path, ec);
            std::vector<Scenario> scenarios = generate_scenarios(cfg, count);
            for (const auto& s : scenarios) {
                const std::string path =
                    (fs::path(out_path) / (s.id + ".scenario")).string();
                if (!save_scenario(s, path)) {
                    std::cerr << "error: cannot write '" << path << "'\n";
                    return kExitIo;
                }
            }
            std::cout << "wrote " << scenarios.size() << " scenarios to "
                      << out_path << '\n';
            return kExitOk;
        }

        if (*evaluate_cmd) {
            std::ifstream in(records_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open '" << records_path << "'\n";
                return kExitIo;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            std::vector<std::string> errors;
            std::vector<ConcessionRecord> records =
                parse_records(buf.str(), errors);
            for (const auto& e : errors) std::cerr << "error: " << e << '\n';
            if (!errors.empty()) return kExitIo;

            std::map<std::string, Scenario> scenarios;
            for (const auto& entry : fs::directory_iterator(scenarios_dir)) {
                if (entry.path().extension() != ".scenario") continue;
                Scenario s;
                const int rc =
                    load_or_fail(entry.path().string(), allow_overlap, s);
                if (rc != kExitOk) return rc;
                scenarios.emplace(s.id, std::move(s));
            }

            MatchReport report = evaluate(scenarios, records, tie_break);
            for (const auto& w : report.warnings) {
                std::cerr << "warning: " << w << '\n';
            }
            if (!write_output(out_path, report.to_csv())) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return kExitIo;
            }
            return kExitOk;
        }

        Scenario s;
        if (const int rc = load_or_fail(scenario_path, allow_overlap, s);
            rc != kExitOk) {
            return rc;
        }
        if (*detect) return cmd_detect(s);
        if (*willing) return cmd_willingness(s);
        if (*resolve_cmd) return cmd_resolve(s);
        if (*baselines_cmd) return cmd_baselines(s, tie_break);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
