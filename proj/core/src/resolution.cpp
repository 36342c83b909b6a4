#include "mediator/resolution.hpp"

#include <stdexcept>

namespace mediator {

const NegotiatorTrace* ConflictTrace::find(const UserId& n) const {
    for (const auto& t : negotiators) {
        if (t.negotiator == n) return &t;
    }
    return nullptr;
}

int modified_majority(const Scenario& s, const ConflictSet& cs,
                      const UserId& c) {
    const auto idx = s.target_index(c);
    if (!idx) {
        throw std::invalid_argument("'" + c + "' is not a target");
    }
    int grants = 0;
    int denies = 0;
    for (const auto& n : s.negotiators) {
        (cs.vectors.at(n).bits[*idx] == 1 ? grants : denies)++;
    }
    if (grants != denies) return grants > denies ? 1 : 0;
    return cs.vectors.at(s.uploader).bits[*idx];
}

namespace {

const WillingnessReport& report_for(
    const std::vector<WillingnessReport>& reports, const UserId& n,
    const UserId& c) {
    for (const auto& r : reports) {
        if (r.negotiator == n && r.target == c) return r;
    }
    throw std::invalid_argument("missing willingness report for (" + n + "," +
                                c + ")");
}

}  // namespace

NegotiatorTrace classify_rule(const UserId& n, const UserId& c,
                              const std::vector<WillingnessReport>& reports,
                              const ConflictSet& cs, const Scenario& s) {
    const auto idx = s.target_index(c);
    if (!idx) {
        throw std::invalid_argument("'" + c + "' is not a target");
    }

    NegotiatorTrace trace;
    trace.negotiator = n;
    trace.preferred_action = cs.vectors.at(n).bits[*idx];
    trace.cls = report_for(reports, n, c).cls;

    if (trace.cls == WillingnessClass::High) {
        trace.rule = RuleTag::IDM;
        trace.conceded = true;
        return trace;
    }

    if (trace.preferred_action == 1) {
        for (const auto& b : s.negotiators) {
            if (b == n) continue;
            if (report_for(reports, b, c).cls == WillingnessClass::Low &&
                cs.vectors.at(b).bits[*idx] == 0) {
                trace.rule = RuleTag::IU;
                trace.conceded = true;
                return trace;
            }
        }
    }

    trace.rule = RuleTag::NC;
    trace.conceded = false;
    return trace;
}

ResolutionOutcome resolve(const Scenario& s, const ConflictSet& cs,
                          const std::vector<WillingnessReport>& reports) {
    for (const auto& c : cs.conflicts) {
        for (const auto& n : s.negotiators) {
            report_for(reports, n, c);  // throws when coverage is incomplete
        }
    }

    ResolutionOutcome outcome;
    outcome.actions.owner = "mediator";
    outcome.actions.bits.resize(s.targets.size(), 0);

    // Non-conflicting targets keep the unanimous action.
    const ActionVector& first = cs.vectors.at(s.negotiators.front());
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        outcome.actions.bits[i] = first.bits[i];
    }

    for (const auto& c : cs.conflicts) {
        const std::size_t idx = *s.target_index(c);

        ConflictTrace trace;
        trace.target = c;
        bool all_high = true;
        for (const auto& n : s.negotiators) {
            trace.negotiators.push_back(classify_rule(n, c, reports, cs, s));
            if (trace.negotiators.back().cls == WillingnessClass::Low) {
                all_high = false;
            }
        }

        if (all_high) {
            trace.branch = ConflictBranch::Majority;
            trace.resolved_action = modified_majority(s, cs, c);
        } else {
            trace.branch = ConflictBranch::LowDriven;
            bool low_grant = false;
            bool low_deny = false;
            for (const auto& nt : trace.negotiators) {
                if (nt.cls == WillingnessClass::Low) {
                    (nt.preferred_action == 1 ? low_grant : low_deny) = true;
                }
            }
            if (low_grant && low_deny) {
                trace.resolved_action = 0;
            } else {
                // All LOW negotiators share one preferred action.
                trace.resolved_action = low_grant ? 1 : 0;
            }
        }

        outcome.actions.bits[idx] = trace.resolved_action;
        outcome.per_conflict.emplace(c, std::move(trace));
    }
    return outcome;
}

ResolutionOutcome mediate(const Scenario& s) {
    ConflictSet cs = detect_conflicts(s);
    return resolve(s, cs, willingness_reports(s, cs));
}

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::IDM: return "IDM";
        case RuleTag::IU: return "IU";
        case RuleTag::NC: return "NC";
    }
    return "?";
}

}  // namespace mediator
