#include <doctest.h>

#include <algorithm>

#include "mediator/conflict.hpp"
#include "test_support.hpp"

using namespace mediator;
using mediator::test::example_scenario;
using mediator::test::random_scenario;

namespace {

// Independent oracle: for every target, enumerate all negotiator pairs
// and check disagreement directly on act().
std::vector<UserId> brute_force_conflicts(const Scenario& s) {
    std::vector<UserId> out;
    for (const auto& t : s.targets) {
        bool conflict = false;
        for (std::size_t i = 0; i < s.negotiators.size() && !conflict; ++i) {
            for (std::size_t j = i + 1; j < s.negotiators.size(); ++j) {
                const auto& a = s.negotiators[i];
                const auto& b = s.negotiators[j];
                if (act(s.policies.at(a), s.group_sets.at(a), t) !=
                    act(s.policies.at(b), s.group_sets.at(b), t)) {
                    conflict = true;
                    break;
                }
            }
        }
        if (conflict) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("example conflicts are Eve and Frank") {
    ConflictSet cs = detect_conflicts(example_scenario());
    CHECK(cs.conflicts == std::vector<UserId>{"Eve", "Frank"});
    CHECK(cs.vectors.at("Alice").bits == std::vector<int>{1, 1, 0, 0});
    CHECK(cs.vectors.at("Bob").bits == std::vector<int>{1, 1, 1, 1});
    CHECK_FALSE(is_unanimous(example_scenario()));
}

TEST_CASE("identical policies yield no conflict") {
    Scenario s = example_scenario();
    s.group_sets.at("Bob") = s.group_sets.at("Alice");
    s.group_sets.at("Bob").owner = "Bob";
    s.policies.at("Bob") = s.policies.at("Alice");
    s.policies.at("Bob").owner = "Bob";
    CHECK(detect_conflicts(s).conflicts.empty());
    CHECK(is_unanimous(s));
}

TEST_CASE("a single negotiator never conflicts") {
    Scenario s = example_scenario();
    s.negotiators = {"Alice"};
    s.policies.erase("Bob");
    s.group_sets.erase("Bob");
    CHECK(detect_conflicts(s).conflicts.empty());
    CHECK(is_unanimous(s));
}

TEST_CASE("detection equals the brute-force oracle") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        Scenario s = random_scenario(rng);
        CHECK(detect_conflicts(s).conflicts == brute_force_conflicts(s));
    }
}

TEST_CASE("permuting negotiators does not change the conflict set") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 500; ++i) {
        Scenario s = random_scenario(rng);
        auto base = detect_conflicts(s).conflicts;
        std::shuffle(s.negotiators.begin(), s.negotiators.end(), rng);
        CHECK(detect_conflicts(s).conflicts == base);
    }
}

TEST_CASE("removing a negotiator never adds a conflict") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        Scenario s = random_scenario(rng);
        auto base = detect_conflicts(s).conflicts;

        Scenario smaller = s;
        const UserId removed = smaller.negotiators.back();
        smaller.negotiators.pop_back();
        if (smaller.negotiators.empty()) continue;
        smaller.policies.erase(removed);
        smaller.group_sets.erase(removed);
        if (smaller.uploader == removed) {
            smaller.uploader = smaller.negotiators.front();
        }

        for (const auto& c : detect_conflicts(smaller).conflicts) {
            CHECK(std::find(base.begin(), base.end(), c) != base.end());
        }
    }
}
