#ifndef MEDIATOR_BASELINES_HPP
#define MEDIATOR_BASELINES_HPP

#include "mediator/conflict.hpp"
#include "mediator/scenario.hpp"

namespace mediator {

/// Aggregation mechanisms compared by the harness.
enum class MechanismId { AR, UO, MV, VV };

enum class MajorityTieBreak { Deny, Uploader };

/// The uploader's vector wins everywhere.
ActionVector uploader_overwrites(const Scenario& s, const ConflictSet& cs);

/// Per conflict, the strict-majority preferred action; exact ties resolve
/// per tie_break (deny by default). Non-conflicts pass through.
ActionVector majority_voting(const Scenario& s, const ConflictSet& cs,
                             MajorityTieBreak tie_break = MajorityTieBreak::Deny);

/// A single deny vote denies: pointwise minimum of all vectors.
ActionVector veto_voting(const Scenario& s, const ConflictSet& cs);

const char* to_string(MechanismId id);

}  // namespace mediator

#endif
