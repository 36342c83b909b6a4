#include "mediator/scenario.hpp"

#include <algorithm>

namespace mediator {

const Group* GroupSet::find(const std::string& name) const {
    for (const auto& g : groups) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

const Group* GroupSet::group_of(const UserId& u) const {
    for (const auto& g : groups) {
        if (g.contains(u)) return &g;
    }
    return nullptr;
}

int TieStrengthTable::strength(const UserId& a, const UserId& b) const {
    auto it = entries.find({a, b});
    return it == entries.end() ? 0 : it->second;
}

void TieStrengthTable::set(const UserId& a, const UserId& b, int value) {
    entries[{a, b}] = value;
}

std::optional<std::size_t> Scenario::target_index(const UserId& t) const {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] == t) return i;
    }
    return std::nullopt;
}

bool Scenario::is_negotiator(const UserId& u) const {
    return std::find(negotiators.begin(), negotiators.end(), u) !=
           negotiators.end();
}

ValidationReport validate_scenario(const Scenario& s) {
    ValidationReport report;
    auto violation = [&](std::string msg) {
        report.violations.push_back({std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        report.warnings.push_back({std::move(msg)});
    };

    if (s.negotiators.empty()) {
        violation("scenario has no negotiators");
    }
    if (!s.is_negotiator(s.uploader)) {
        violation("uploader '" + s.uploader + "' is not a negotiator");
    }
    {
        std::set<UserId> seen;
        for (const auto& t : s.targets) {
            if (!seen.insert(t).second) {
                violation("duplicate target '" + t + "'");
            }
        }
    }
    {
        std::set<UserId> seen;
        for (const auto& n : s.negotiators) {
            if (!seen.insert(n).second) {
                violation("duplicate negotiator '" + n + "'");
            }
        }
    }

    if (s.ties.delta <= 0) {
        violation("delta must be a positive integer");
    }
    for (const auto& [pair, value] : s.ties.entries) {
        if (value < 0 || value > s.ties.delta) {
            violation("tie strength for (" + pair.first + "," + pair.second +
                      ") is " + std::to_string(value) + ", outside 0.." +
                      std::to_string(s.ties.delta));
        }
    }

    for (const auto& n : s.negotiators) {
        auto gs_it = s.group_sets.find(n);
        if (gs_it == s.group_sets.end()) {
            violation("negotiator '" + n + "' has no group set");
            continue;
        }
        const GroupSet& gs = gs_it->second;
        if (gs.owner != n) {
            violation("group set listed under '" + n + "' is owned by '" +
                      gs.owner + "'");
        }
        if (gs.groups.empty()) {
            violation("negotiator '" + n +
                      "' has an empty group set (sensitivity undefined)");
        }
        std::set<std::string> names;
        for (const auto& g : gs.groups) {
            if (g.name.empty()) {
                violation("negotiator '" + n + "' declares an unnamed group");
            }
            if (!names.insert(g.name).second) {
                violation("negotiator '" + n + "' declares group '" + g.name +
                          "' twice");
            }
            if (g.members.empty()) {
                violation("group '" + g.name + "' of '" + n +
                          "' is empty (group strictness undefined)");
            }
        }
        if (!s.allow_overlapping_groups) {
            for (std::size_t i = 0; i < gs.groups.size(); ++i) {
                for (std::size_t j = i + 1; j < gs.groups.size(); ++j) {
                    std::vector<UserId> common;
                    std::set_intersection(
                        gs.groups[i].members.begin(), gs.groups[i].members.end(),
                        gs.groups[j].members.begin(), gs.groups[j].members.end(),
                        std::back_inserter(common));
                    if (!common.empty()) {
                        violation("groups '" + gs.groups[i].name + "' and '" +
                                  gs.groups[j].name + "' of '" + n +
                                  "' overlap (e.g. '" + common.front() + "')");
                    }
                }
            }
        }

        auto p_it = s.policies.find(n);
        if (p_it == s.policies.end()) {
            violation("negotiator '" + n + "' has no privacy policy");
            continue;
        }
        const PrivacyPolicy& p = p_it->second;
        if (p.owner != n) {
            violation("policy listed under '" + n + "' is owned by '" +
                      p.owner + "'");
        }
        for (const auto& name : p.granted) {
            if (gs.find(name) == nullptr) {
                violation("policy of '" + n + "' grants unknown group '" +
                          name + "'");
            }
        }
        for (const auto& e : p.exceptions) {
            if (gs.group_of(e) == nullptr) {
                warning("exception '" + e + "' in policy of '" + n +
                        "' belongs to none of the owner's groups; the "
                        "decision for them is flipped from deny to grant");
            }
        }
    }

    for (const auto& [owner, p] : s.policies) {
        if (!s.is_negotiator(owner)) {
            violation("policy owner '" + owner + "' is not a negotiator");
        }
        (void)p;
    }

    return report;
}

int act(const PrivacyPolicy& p, const GroupSet& gs, const UserId& t) {
    int base = 0;
    for (const auto& g : gs.groups) {
        if (p.granted.count(g.name) != 0 && g.contains(t)) {
            base = 1;
            break;
        }
    }
    if (p.exceptions.count(t) != 0) base = 1 - base;
    return base;
}

ActionVector action_vector(const PrivacyPolicy& p, const GroupSet& gs,
                           const std::vector<UserId>& targets) {
    ActionVector v;
    v.owner = p.owner;
    v.bits.reserve(targets.size());
    for (const auto& t : targets) v.bits.push_back(act(p, gs, t));
    return v;
}

}  // namespace mediator
