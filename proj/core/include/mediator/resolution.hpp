#ifndef MEDIATOR_RESOLUTION_HPP
#define MEDIATOR_RESOLUTION_HPP

#include <map>
#include <vector>

#include "mediator/conflict.hpp"
#include "mediator/scenario.hpp"
#include "mediator/willingness.hpp"

namespace mediator {

/// Concession rule that fired for a negotiator on a conflict.
enum class RuleTag {
    IDM,  // "I do not mind": high willingness, concedes
    IU,   // "I understand": low-willingness grantor yields to a low denier
    NC,   // "No concession": low willingness, holds firm
};

/// Which branch of the resolution algorithm decided a conflict.
enum class ConflictBranch {
    Majority,   // every negotiator HIGH, modified majority vote
    LowDriven,  // at least one LOW negotiator fixed the action
};

struct NegotiatorTrace {
    UserId negotiator;
    int preferred_action = 0;
    WillingnessClass cls = WillingnessClass::Low;
    RuleTag rule = RuleTag::NC;
    bool conceded = false;
};

struct ConflictTrace {
    UserId target;
    ConflictBranch branch = ConflictBranch::LowDriven;
    int resolved_action = 0;
    std::vector<NegotiatorTrace> negotiators;

    const NegotiatorTrace* find(const UserId& n) const;
};

/// Final action vector over all targets plus the per-conflict rule trace.
/// Non-conflicting targets carry the unanimous action through unchanged.
struct ResolutionOutcome {
    ActionVector actions;
    std::map<UserId, ConflictTrace> per_conflict;
};

/// Majority vote over the negotiators' preferred actions for target c;
/// the uploader's preference breaks exact ties.
int modified_majority(const Scenario& s, const ConflictSet& cs,
                      const UserId& c);

/// Classifies which concession rule fires for negotiator n on conflict c
/// given all willingness reports for c.
NegotiatorTrace classify_rule(const UserId& n, const UserId& c,
                              const std::vector<WillingnessReport>& reports,
                              const ConflictSet& cs, const Scenario& s);

/// Runs the concession rules over every conflict. reports must cover
/// every (negotiator, conflict) pair.
ResolutionOutcome resolve(const Scenario& s, const ConflictSet& cs,
                          const std::vector<WillingnessReport>& reports);

/// Convenience: detect, estimate willingness, resolve.
ResolutionOutcome mediate(const Scenario& s);

const char* to_string(RuleTag tag);

}  // namespace mediator

#endif
