#include "mediator/baselines.hpp"

namespace mediator {

ActionVector uploader_overwrites(const Scenario& s, const ConflictSet& cs) {
    ActionVector out = cs.vectors.at(s.uploader);
    out.owner = "UO";
    return out;
}

ActionVector majority_voting(const Scenario& s, const ConflictSet& cs,
                             MajorityTieBreak tie_break) {
    ActionVector out = cs.vectors.at(s.negotiators.front());
    out.owner = "MV";
    for (const auto& c : cs.conflicts) {
        const std::size_t idx = *s.target_index(c);
        int grants = 0;
        int denies = 0;
        for (const auto& n : s.negotiators) {
            (cs.vectors.at(n).bits[idx] == 1 ? grants : denies)++;
        }
        if (grants != denies) {
            out.bits[idx] = grants > denies ? 1 : 0;
        } else if (tie_break == MajorityTieBreak::Uploader) {
            out.bits[idx] = cs.vectors.at(s.uploader).bits[idx];
        } else {
            out.bits[idx] = 0;
        }
    }
    return out;
}

ActionVector veto_voting(const Scenario& s, const ConflictSet& cs) {
    ActionVector out;
    out.owner = "VV";
    out.bits.resize(s.targets.size(), 1);
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        for (const auto& n : s.negotiators) {
            if (cs.vectors.at(n).bits[i] == 0) {
                out.bits[i] = 0;
                break;
            }
        }
    }
    return out;
}

const char* to_string(MechanismId id) {
    switch (id) {
        case MechanismId::AR: return "AR";
        case MechanismId::UO: return "UO";
        case MechanismId::MV: return "MV";
        case MechanismId::VV: return "VV";
    }
    return "?";
}

}  // namespace mediator
