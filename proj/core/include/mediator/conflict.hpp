#ifndef MEDIATOR_CONFLICT_HPP
#define MEDIATOR_CONFLICT_HPP

#include <map>

#include "mediator/scenario.hpp"

namespace mediator {

/// Targets on which at least two negotiators' action vectors disagree,
/// in scenario target order, together with every negotiator's vector.
struct ConflictSet {
    std::vector<UserId> conflicts;
    std::map<UserId, ActionVector> vectors;

    bool in_conflict(const UserId& t) const;
};

/// Computes every negotiator's action vector and harvests the conflict
/// set. Precondition: the scenario validates cleanly.
ConflictSet detect_conflicts(const Scenario& s);

bool is_unanimous(const Scenario& s);

}  // namespace mediator

#endif
