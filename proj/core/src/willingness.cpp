#include "mediator/willingness.hpp"

#include <cmath>
#include <stdexcept>

namespace mediator {

double group_strictness(const UserId& n, const Group& g,
                        const PrivacyPolicy& p, const GroupSet& gs,
                        const TieStrengthTable& ties) {
    if (g.members.empty()) {
        throw std::invalid_argument("group '" + g.name +
                                    "' is empty; strictness undefined");
    }
    double strictness = static_cast<double>(ties.delta);
    bool any_granted = false;
    for (const auto& member : g.members) {
        if (act(p, gs, member) == 1) {
            any_granted = true;
            strictness =
                std::min(strictness,
                         static_cast<double>(ties.strength(n, member)));
        }
    }
    // Denied members contribute delta, so an all-denied group sits at the
    // top of the scale.
    return any_granted ? strictness : static_cast<double>(ties.delta);
}

double sensitivity(const UserId& n, const GroupSet& gs,
                   const PrivacyPolicy& p, const TieStrengthTable& ties) {
    if (gs.groups.empty()) {
        throw std::invalid_argument("user '" + n +
                                    "' has no groups; sensitivity undefined");
    }
    double sum = 0.0;
    for (const auto& g : gs.groups) {
        sum += group_strictness(n, g, p, gs, ties);
    }
    return sum / static_cast<double>(gs.groups.size());
}

double relative_importance(const UserId& n, const UserId& c,
                           const GroupSet& gs, const PrivacyPolicy& p,
                           const TieStrengthTable& ties) {
    const double tau = static_cast<double>(ties.strength(n, c));
    if (const Group* g = gs.group_of(c)) {
        return std::abs(group_strictness(n, *g, p, gs, ties) - tau);
    }
    return std::abs(sensitivity(n, gs, p, ties) - tau);
}

WillingnessReport willingness(const UserId& n, const UserId& c,
                              const Scenario& s) {
    const GroupSet& gs = s.group_sets.at(n);
    const PrivacyPolicy& p = s.policies.at(n);
    const double delta = static_cast<double>(s.ties.delta);

    WillingnessReport report;
    report.negotiator = n;
    report.target = c;
    report.sensitivity = sensitivity(n, gs, p, s.ties);
    report.importance = relative_importance(n, c, gs, p, s.ties);
    report.willingness =
        0.5 * (std::abs(delta - report.importance) / (delta + report.importance) +
               std::abs(delta - report.sensitivity) / (delta + report.sensitivity));
    report.cls = report.willingness > 0.5 ? WillingnessClass::High
                                          : WillingnessClass::Low;
    return report;
}

std::vector<WillingnessReport> willingness_reports(const Scenario& s,
                                                   const ConflictSet& cs) {
    const double delta = static_cast<double>(s.ties.delta);

    // Sensitivity is conflict-independent, so compute it once per negotiator.
    std::map<UserId, double> sens;
    for (const auto& n : s.negotiators) {
        sens[n] = sensitivity(n, s.group_sets.at(n), s.policies.at(n), s.ties);
    }

    std::vector<WillingnessReport> reports;
    reports.reserve(cs.conflicts.size() * s.negotiators.size());
    for (const auto& c : cs.conflicts) {
        for (const auto& n : s.negotiators) {
            const GroupSet& gs = s.group_sets.at(n);
            const PrivacyPolicy& p = s.policies.at(n);
            const double tau = static_cast<double>(s.ties.strength(n, c));

            WillingnessReport report;
            report.negotiator = n;
            report.target = c;
            report.sensitivity = sens.at(n);
            if (const Group* g = gs.group_of(c)) {
                report.importance =
                    std::abs(group_strictness(n, *g, p, gs, s.ties) - tau);
            } else {
                report.importance = std::abs(report.sensitivity - tau);
            }
            report.willingness =
                0.5 * (std::abs(delta - report.importance) /
                           (delta + report.importance) +
                       std::abs(delta - report.sensitivity) /
                           (delta + report.sensitivity));
            report.cls = report.willingness > 0.5 ? WillingnessClass::High
                                                  : WillingnessClass::Low;
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

const char* to_string(WillingnessClass cls) {
    return cls == WillingnessClass::High ? "HIGH" : "LOW";
}

}  // namespace mediator
