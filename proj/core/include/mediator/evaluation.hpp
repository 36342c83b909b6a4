#ifndef MEDIATOR_EVALUATION_HPP
#define MEDIATOR_EVALUATION_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mediator/baselines.hpp"
#include "mediator/resolution.hpp"
#include "mediator/scenario.hpp"

namespace mediator {

/// One recorded concession decision: did the focal user change their
/// preferred action for the conflicting target.
struct ConcessionRecord {
    std::string scenario_id;
    UserId focal_user;
    UserId conflict_target;
    int preferred_action = 0;
    bool conceded = false;
};

/// Evaluation strata: overall plus one per concession rule AR fired for
/// the focal user.
enum class Stratum { All = 0, IDM = 1, IU = 2, NC = 3 };
inline constexpr std::array<Stratum, 4> kStrata = {Stratum::All, Stratum::IDM,
                                                   Stratum::IU, Stratum::NC};
inline constexpr std::array<MechanismId, 4> kMechanisms = {
    MechanismId::AR, MechanismId::UO, MechanismId::MV, MechanismId::VV};

struct MatchCell {
    int matches = 0;
    int total = 0;

    double rate() const { return total == 0 ? 0.0 : double(matches) / total; }
};

/// Match counts per mechanism, overall and stratified by AR's rule tag.
struct MatchReport {
    MatchCell cells[4][4];  // [mechanism][stratum]
    std::vector<std::string> warnings;
    int skipped = 0;

    MatchCell& cell(MechanismId m, Stratum s) {
        return cells[static_cast<int>(m)][static_cast<int>(s)];
    }
    const MatchCell& cell(MechanismId m, Stratum s) const {
        return cells[static_cast<int>(m)][static_cast<int>(s)];
    }
    int instantiations(Stratum s) const {
        return cell(MechanismId::AR, s).total;
    }

    /// CSV with header `mechanism,stratum,matches,total,rate`, rates with
    /// 4 decimals.
    std::string to_csv() const;
};

/// Compares each mechanism's resolved action against the recorded
/// behaviour (preferred_action flipped iff conceded). Records referencing
/// an unknown scenario, a non-negotiator focal user, or a non-conflicting
/// target are skipped with a warning.
MatchReport evaluate(const std::map<std::string, Scenario>& scenarios,
                     const std::vector<ConcessionRecord>& records,
                     MajorityTieBreak tie_break = MajorityTieBreak::Deny);

/// A record for a focal user that behaves exactly as the concession rules
/// predict: they concede iff the mediated outcome differs from their
/// preferred action.
ConcessionRecord simulate_concession(const Scenario& s, const ConflictSet& cs,
                                     const ResolutionOutcome& outcome,
                                     const UserId& focal, const UserId& target);

/// One record per line: scenario_id,focal_user,conflict_target,bit,bit.
std::vector<ConcessionRecord> parse_records(const std::string& text,
                                            std::vector<std::string>& errors);
std::string to_csv(const std::vector<ConcessionRecord>& records);

const char* to_string(Stratum s);

}  // namespace mediator

#endif
