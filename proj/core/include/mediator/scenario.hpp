#ifndef MEDIATOR_SCENARIO_HPP
#define MEDIATOR_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mediator {

using UserId = std::string;

/// One named group of users, as declared by its owner.
struct Group {
    std::string name;
    std::set<UserId> members;

    bool contains(const UserId& u) const { return members.count(u) != 0; }
};

/// All groups declared by one user. Declaration order is significant:
/// it breaks ties when overlapping groups are permitted.
struct GroupSet {
    UserId owner;
    std::vector<Group> groups;

    const Group* find(const std::string& name) const;
    /// First group (in declaration order) that contains u, or nullptr.
    const Group* group_of(const UserId& u) const;
};

/// Tie strength values on a 0..delta integer scale for ordered user pairs.
/// Missing pairs read as 0 (no relationship).
struct TieStrengthTable {
    int delta = 5;
    std::map<std::pair<UserId, UserId>, int> entries;

    int strength(const UserId& a, const UserId& b) const;
    void set(const UserId& a, const UserId& b, int value);
};

/// A privacy policy: the set of granted group names plus individual
/// exceptions whose decision is flipped.
struct PrivacyPolicy {
    UserId owner;
    std::set<std::string> granted;
    std::set<UserId> exceptions;
};

/// A complete mediation scenario: negotiators (one of them the uploader),
/// the candidate audience, and each negotiator's groups and policy.
struct Scenario {
    std::string id;
    std::vector<UserId> users;
    std::vector<UserId> negotiators;
    UserId uploader;
    std::vector<UserId> targets;
    std::map<UserId, GroupSet> group_sets;
    std::map<UserId, PrivacyPolicy> policies;
    TieStrengthTable ties;
    bool allow_overlapping_groups = false;

    std::optional<std::size_t> target_index(const UserId& t) const;
    bool is_negotiator(const UserId& u) const;
};

/// Grant/deny bits for one negotiator, indexed by scenario target order.
struct ActionVector {
    UserId owner;
    std::vector<int> bits;

    bool operator==(const ActionVector&) const = default;
};

struct ValidationIssue {
    std::string message;
};

/// Violations make a scenario unusable; warnings flag cases the model
/// handles but that are worth a second look (e.g. an excepted user in
/// none of the owner's groups).
struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<ValidationIssue> warnings;

    bool valid() const { return violations.empty(); }
};

ValidationReport validate_scenario(const Scenario& s);

/// Action function: base decision is 1 iff some granted group contains t;
/// listed exceptions flip the base decision unconditionally.
int act(const PrivacyPolicy& p, const GroupSet& gs, const UserId& t);

ActionVector action_vector(const PrivacyPolicy& p, const GroupSet& gs,
                           const std::vector<UserId>& targets);

}  // namespace mediator

#endif
