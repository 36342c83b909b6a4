#include "mediator/conflict.hpp"

#include <algorithm>

namespace mediator {

bool ConflictSet::in_conflict(const UserId& t) const {
    return std::find(conflicts.begin(), conflicts.end(), t) != conflicts.end();
}

ConflictSet detect_conflicts(const Scenario& s) {
    ConflictSet cs;
    for (const auto& n : s.negotiators) {
        cs.vectors[n] =
            action_vector(s.policies.at(n), s.group_sets.at(n), s.targets);
    }
    if (s.negotiators.empty()) return cs;

    // Equality of bits is transitive, so a target conflicts iff some
    // negotiator disagrees with the first one.
    const ActionVector& first = cs.vectors.at(s.negotiators.front());
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        for (const auto& n : s.negotiators) {
            if (cs.vectors.at(n).bits[i] != first.bits[i]) {
                cs.conflicts.push_back(s.targets[i]);
                break;
            }
        }
    }
    return cs;
}

bool is_unanimous(const Scenario& s) {
    return detect_conflicts(s).conflicts.empty();
}

}  // namespace mediator
