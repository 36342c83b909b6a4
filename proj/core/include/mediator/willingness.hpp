#ifndef MEDIATOR_WILLINGNESS_HPP
#define MEDIATOR_WILLINGNESS_HPP

#include <vector>

#include "mediator/conflict.hpp"
#include "mediator/scenario.hpp"

namespace mediator {

enum class WillingnessClass { Low, High };

/// Willingness of one negotiator to change their preferred action for
/// one conflicting target, with the intermediate estimates.
struct WillingnessReport {
    UserId negotiator;
    UserId target;
    double sensitivity = 0.0;       // mean group strictness, in tie units
    double importance = 0.0;        // relative importance of the target
    double willingness = 0.0;       // in [0,1]
    WillingnessClass cls = WillingnessClass::Low;
};

/// Minimum tie strength needed in group g to be granted access: granted
/// members contribute their tie strength, denied members contribute delta.
/// Precondition: g is non-empty (validation enforces this).
double group_strictness(const UserId& n, const Group& g,
                        const PrivacyPolicy& p, const GroupSet& gs,
                        const TieStrengthTable& ties);

/// Mean group strictness over all of n's groups.
double sensitivity(const UserId& n, const GroupSet& gs,
                   const PrivacyPolicy& p, const TieStrengthTable& ties);

/// |T_n(G) - tau(n,c)| for the first group of n containing c, or
/// |S_n - tau(n,c)| when c belongs to none of n's groups.
double relative_importance(const UserId& n, const UserId& c,
                           const GroupSet& gs, const PrivacyPolicy& p,
                           const TieStrengthTable& ties);

/// Half the 2-d Canberra distance from (importance, sensitivity) to the
/// scale maximum (delta, delta). Exactly 0.5 classifies Low.
WillingnessReport willingness(const UserId& n, const UserId& c,
                              const Scenario& s);

/// One report per (negotiator, conflicting target) pair, negotiators in
/// scenario order within each conflict, conflicts in target order.
std::vector<WillingnessReport> willingness_reports(const Scenario& s,
                                                   const ConflictSet& cs);

const char* to_string(WillingnessClass cls);

}  // namespace mediator

#endif
