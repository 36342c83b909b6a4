#include "mediator/generator.hpp"

#include <stdexcept>

#include "mediator/conflict.hpp"

namespace mediator {

namespace {

// mt19937_64 output is specified bit-for-bit by the standard; avoiding
// std::uniform_*_distribution keeps draws identical across platforms.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool coin(std::mt19937_64& rng, double p) { return next_unit(rng) < p; }

}  // namespace

std::vector<std::string> check_config(const GeneratorConfig& cfg) {
    std::vector<std::string> problems;
    if (cfg.negotiator_count < 1) problems.push_back("negotiator_count < 1");
    if (cfg.target_count < 1) problems.push_back("target_count < 1");
    if (cfg.groups_per_user < 1) problems.push_back("groups_per_user < 1");
    if (cfg.delta < 1) problems.push_back("delta < 1");
    if (cfg.grant_probability < 0.0 || cfg.grant_probability > 1.0)
        problems.push_back("grant_probability outside [0,1]");
    if (cfg.exception_probability < 0.0 || cfg.exception_probability > 1.0)
        problems.push_back("exception_probability outside [0,1]");
    if (cfg.retry_budget < 1) problems.push_back("retry_budget < 1");
    return problems;
}

Scenario draw_scenario(std::mt19937_64& rng, const GeneratorConfig& cfg,
                       const std::string& id) {
    Scenario s;
    s.id = id;
    s.ties.delta = cfg.delta;

    for (int i = 0; i < cfg.negotiator_count; ++i) {
        s.negotiators.push_back("n" + std::to_string(i + 1));
    }
    for (int i = 0; i < cfg.target_count; ++i) {
        s.targets.push_back("t" + std::to_string(i + 1));
    }
    s.uploader = s.negotiators.front();
    s.users = s.negotiators;
    s.users.insert(s.users.end(), s.targets.begin(), s.targets.end());

    for (const auto& n : s.negotiators) {
        // Each target lands in one of the groups or stays ungrouped
        // (bucket 0), keeping groups disjoint by construction.
        std::vector<Group> buckets(cfg.groups_per_user);
        for (int g = 0; g < cfg.groups_per_user; ++g) {
            buckets[g].name = "g" + std::to_string(g + 1);
        }
        for (const auto& t : s.targets) {
            const auto b = next_below(rng, cfg.groups_per_user + 1);
            if (b > 0) buckets[b - 1].members.insert(t);
        }

        GroupSet gs;
        gs.owner = n;
        for (auto& b : buckets) {
            if (!b.members.empty()) gs.groups.push_back(std::move(b));
        }
        if (gs.groups.empty()) {
            Group g;
            g.name = "g1";
            g.members.insert(s.targets.front());
            gs.groups.push_back(std::move(g));
        }

        PrivacyPolicy p;
        p.owner = n;
        for (const auto& g : gs.groups) {
            if (coin(rng, cfg.grant_probability)) p.granted.insert(g.name);
        }
        for (const auto& t : s.targets) {
            if (coin(rng, cfg.exception_probability)) p.exceptions.insert(t);
        }

        for (const auto& u : s.users) {
            if (u != n) {
                s.ties.set(n, u,
                           static_cast<int>(next_below(rng, cfg.delta + 1)));
            }
        }

        s.group_sets.emplace(n, std::move(gs));
        s.policies.emplace(n, std::move(p));
    }
    return s;
}

std::vector<Scenario> generate_scenarios(const GeneratorConfig& cfg,
                                         int count) {
    if (auto problems = check_config(cfg); !problems.empty()) {
        std::string msg = "invalid generator config:";
        for (const auto& p : problems) msg += " " + p + ";";
        throw std::runtime_error(msg);
    }

    std::mt19937_64 rng(cfg.seed);
    std::vector<Scenario> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        bool accepted = false;
        for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
            Scenario s = draw_scenario(
                rng, cfg,
                "gen-" + std::to_string(cfg.seed) + "-" +
                    std::to_string(i + 1));
            if (!validate_scenario(s).valid()) continue;
            if (detect_conflicts(s).conflicts.empty()) continue;
            out.push_back(std::move(s));
            accepted = true;
            break;
        }
        if (!accepted) {
            throw std::runtime_error(
                "retry budget exhausted: config produced no conflicting "
                "scenario after " +
                std::to_string(cfg.retry_budget) + " draws");
        }
    }
    return out;
}

}  // namespace mediator
