#include "mediator/evaluation.hpp"

#include <cstdio>
#include <sstream>

#include "mediator/willingness.hpp"

namespace mediator {

namespace {

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rate);
    return buf;
}

Stratum stratum_of(RuleTag tag) {
    switch (tag) {
        case RuleTag::IDM: return Stratum::IDM;
        case RuleTag::IU: return Stratum::IU;
        case RuleTag::NC: return Stratum::NC;
    }
    return Stratum::All;
}

}  // namespace

std::string MatchReport::to_csv() const {
    std::ostringstream out;
    out << "mechanism,stratum,matches,total,rate\n";
    for (MechanismId m : kMechanisms) {
        for (Stratum s : kStrata) {
            const MatchCell& c = cell(m, s);
            out << to_string(m) << ',' << to_string(s) << ',' << c.matches
                << ',' << c.total << ',' << format_rate(c.rate()) << '\n';
        }
    }
    return out.str();
}

MatchReport evaluate(const std::map<std::string, Scenario>& scenarios,
                     const std::vector<ConcessionRecord>& records,
                     MajorityTieBreak tie_break) {
    MatchReport report;

    // Per-scenario mediation results are record-independent; cache them.
    struct Resolved {
        ConflictSet cs;
        ResolutionOutcome ar;
        ActionVector uo, mv, vv;
    };
    std::map<std::string, Resolved> cache;

    for (const auto& rec : records) {
        auto s_it = scenarios.find(rec.scenario_id);
        if (s_it == scenarios.end()) {
            report.warnings.push_back("record references unknown scenario '" +
                                      rec.scenario_id + "'");
            ++report.skipped;
            continue;
        }
        const Scenario& s = s_it->second;

        auto c_it = cache.find(rec.scenario_id);
        if (c_it == cache.end()) {
            Resolved r;
            r.cs = detect_conflicts(s);
            r.ar = resolve(s, r.cs, willingness_reports(s, r.cs));
            r.uo = uploader_overwrites(s, r.cs);
            r.mv = majority_voting(s, r.cs, tie_break);
            r.vv = veto_voting(s, r.cs);
            c_it = cache.emplace(rec.scenario_id, std::move(r)).first;
        }
        const Resolved& r = c_it->second;

        if (!s.is_negotiator(rec.focal_user)) {
            report.warnings.push_back("focal user '" + rec.focal_user +
                                      "' is not a negotiator in '" +
                                      rec.scenario_id + "'");
            ++report.skipped;
            continue;
        }
        auto trace_it = r.ar.per_conflict.find(rec.conflict_target);
        if (trace_it == r.ar.per_conflict.end()) {
            report.warnings.push_back("target '" + rec.conflict_target +
                                      "' is not a detected conflict in '" +
                                      rec.scenario_id + "'");
            ++report.skipped;
            continue;
        }

        const std::size_t idx = *s.target_index(rec.conflict_target);
        const int truth =
            rec.conceded ? 1 - rec.preferred_action : rec.preferred_action;
        const Stratum stratum =
            stratum_of(trace_it->second.find(rec.focal_user)->rule);

        const int resolved[4] = {
            trace_it->second.resolved_action,
            r.uo.bits[idx],
            r.mv.bits[idx],
            r.vv.bits[idx],
        };
        for (MechanismId m : kMechanisms) {
            const int bit = resolved[static_cast<int>(m)];
            for (Stratum st : {Stratum::All, stratum}) {
                MatchCell& cell = report.cell(m, st);
                cell.total++;
                if (bit == truth) cell.matches++;
            }
        }
    }
    return report;
}

ConcessionRecord simulate_concession(const Scenario& s, const ConflictSet& cs,
                                     const ResolutionOutcome& outcome,
                                     const UserId& focal,
                                     const UserId& target) {
    const std::size_t idx = *s.target_index(target);
    ConcessionRecord rec;
    rec.scenario_id = s.id;
    rec.focal_user = focal;
    rec.conflict_target = target;
    rec.preferred_action = cs.vectors.at(focal).bits[idx];
    rec.conceded =
        outcome.per_conflict.at(target).resolved_action != rec.preferred_action;
    return rec;
}

std::vector<ConcessionRecord> parse_records(const std::string& text,
                                            std::vector<std::string>& errors) {
    std::vector<ConcessionRecord> records;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 5) {
            errors.push_back("line " + std::to_string(lineno) +
                             ": expected 5 comma-separated fields");
            continue;
        }
        auto parse_bit = [&](const std::string& tok, int& out) {
            if (tok == "0") out = 0;
            else if (tok == "1") out = 1;
            else return false;
            return true;
        };
        ConcessionRecord rec;
        rec.scenario_id = fields[0];
        rec.focal_user = fields[1];
        rec.conflict_target = fields[2];
        int conceded = 0;
        if (!parse_bit(fields[3], rec.preferred_action) ||
            !parse_bit(fields[4], conceded)) {
            errors.push_back("line " + std::to_string(lineno) +
                             ": action and conceded must be 0 or 1");
            continue;
        }
        rec.conceded = conceded == 1;
        records.push_back(std::move(rec));
    }
    return records;
}

std::string to_csv(const std::vector<ConcessionRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) {
        out << r.scenario_id << ',' << r.focal_user << ','
            << r.conflict_target << ',' << r.preferred_action << ','
            << (r.conceded ? 1 : 0) << '\n';
    }
    return out.str();
}

const char* to_string(Stratum s) {
    switch (s) {
        case Stratum::All: return "ALL";
        case Stratum::IDM: return "IDM";
        case Stratum::IU: return "IU";
        case Stratum::NC: return "NC";
    }
    return "?";
}

}  // namespace mediator
