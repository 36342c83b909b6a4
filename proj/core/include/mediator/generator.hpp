#ifndef MEDIATOR_GENERATOR_HPP
#define MEDIATOR_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mediator/scenario.hpp"

namespace mediator {

/// Knobs for synthetic scenario generation. Every emitted scenario passes
/// validation and contains at least one conflict (rejection-sampled).
struct GeneratorConfig {
    std::uint64_t seed = 0;
    int negotiator_count = 2;
    int target_count = 4;
    int groups_per_user = 2;
    int delta = 5;
    double grant_probability = 0.5;
    double exception_probability = 0.1;

    /// Draws aborted after this many rejected candidates per scenario.
    int retry_budget = 1000;
};

/// Empty when the config is usable; otherwise one message per problem.
std::vector<std::string> check_config(const GeneratorConfig& cfg);

/// Deterministic under (cfg.seed, count): the same inputs produce the
/// same scenarios on every platform. Throws std::runtime_error on an
/// invalid config or when the retry budget is exhausted (a config that
/// cannot produce conflicts).
std::vector<Scenario> generate_scenarios(const GeneratorConfig& cfg,
                                         int count);

/// One candidate draw from an explicit RNG stream; may be conflict-free
/// and is not rejection-sampled. Used by property suites that roll their
/// own scenario distributions.
Scenario draw_scenario(std::mt19937_64& rng, const GeneratorConfig& cfg,
                       const std::string& id);

}  // namespace mediator

#endif
