#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mediator/willingness.hpp"
#include "test_support.hpp"

using namespace mediator;
using mediator::test::example_scenario;
using doctest::Approx;

TEST_CASE("group strictness on the example") {
    Scenario s = example_scenario();
    const auto& gs = s.group_sets.at("Alice");
    const auto& p = s.policies.at("Alice");

    // Charlie:4 and Dan:2 are granted, Eve is denied and counts as delta.
    CHECK(group_strictness("Alice", gs.groups[0], p, gs, s.ties) ==
          Approx(2.0));

    // Bob grants both CloseFriends members (ties 3 and 5).
    const auto& bgs = s.group_sets.at("Bob");
    const auto& bp = s.policies.at("Bob");
    CHECK(group_strictness("Bob", bgs.groups[0], bp, bgs, s.ties) ==
          Approx(3.0));
    CHECK(group_strictness("Bob", bgs.groups[1], bp, bgs, s.ties) ==
          Approx(2.0));
}

TEST_CASE("a fully denied group sits at delta") {
    Scenario s = example_scenario();
    PrivacyPolicy deny_all{"Alice", {}, {}};
    const auto& gs = s.group_sets.at("Alice");
    CHECK(group_strictness("Alice", gs.groups[0], deny_all, gs, s.ties) ==
          Approx(5.0));
    CHECK(sensitivity("Alice", gs, deny_all, s.ties) == Approx(5.0));
}

TEST_CASE("group strictness rejects an empty group") {
    Scenario s = example_scenario();
    Group empty{"Empty", {}};
    CHECK_THROWS_AS(group_strictness("Alice", empty,
                                     s.policies.at("Alice"),
                                     s.group_sets.at("Alice"), s.ties),
                    std::invalid_argument);
}

TEST_CASE("sensitivity on the example") {
    Scenario s = example_scenario();
    CHECK(sensitivity("Alice", s.group_sets.at("Alice"),
                      s.policies.at("Alice"), s.ties) == Approx(2.0));
    // Mean of CloseFriends (3) and Family (2).
    CHECK(sensitivity("Bob", s.group_sets.at("Bob"), s.policies.at("Bob"),
                      s.ties) == Approx(2.5));
}

TEST_CASE("sensitivity rejects an empty group set") {
    Scenario s = example_scenario();
    GroupSet empty;
    empty.owner = "Alice";
    CHECK_THROWS_AS(
        sensitivity("Alice", empty, s.policies.at("Alice"), s.ties),
        std::invalid_argument);
}

TEST_CASE("relative importance on the example") {
    Scenario s = example_scenario();
    const auto& gs = s.group_sets.at("Alice");
    const auto& p = s.policies.at("Alice");

    // Eve is in MyFriends: |T(MyFriends) - tau(Alice,Eve)| = |2 - 1|.
    CHECK(relative_importance("Alice", "Eve", gs, p, s.ties) == Approx(1.0));
    // Frank is in none of Alice's groups: |S - tau| = |2 - 0|.
    CHECK(relative_importance("Alice", "Frank", gs, p, s.ties) == Approx(2.0));
}

TEST_CASE("relative importance with a loose group and a close friend") {
    // Sharing with all friends (strictness 1) but excluding a close
    // friend (tie 5) is highly important: |1 - 5| = 4.
    Scenario s;
    s.users = {"Alice", "Charlie", "Peter"};
    s.negotiators = {"Alice"};
    s.uploader = "Alice";
    s.targets = {"Charlie", "Peter"};
    GroupSet gs;
    gs.owner = "Alice";
    gs.groups.push_back({"Friends", {"Charlie", "Peter"}});
    s.group_sets.emplace("Alice", gs);
    s.policies.emplace("Alice",
                       PrivacyPolicy{"Alice", {"Friends"}, {"Charlie"}});
    s.ties.delta = 5;
    s.ties.set("Alice", "Charlie", 5);
    s.ties.set("Alice", "Peter", 1);

    // Peter (tie 1) is the only granted member, so strictness is 1.
    CHECK(relative_importance("Alice", "Charlie", s.group_sets.at("Alice"),
                              s.policies.at("Alice"),
                              s.ties) == Approx(4.0));
}

TEST_CASE("willingness values on the example") {
    Scenario s = example_scenario();

    WillingnessReport ae = willingness("Alice", "Eve", s);
    CHECK(ae.willingness == Approx(0.5 * (4.0 / 6.0 + 3.0 / 7.0)));
    CHECK(ae.willingness == Approx(0.5476).epsilon(0.001));
    CHECK(ae.cls == WillingnessClass::High);

    WillingnessReport af = willingness("Alice", "Frank", s);
    CHECK(af.willingness == Approx(3.0 / 7.0));
    CHECK(af.cls == WillingnessClass::Low);

    WillingnessReport be = willingness("Bob", "Eve", s);
    CHECK(be.willingness == Approx(0.5 * (3.0 / 7.0 + 2.5 / 7.5)));
    CHECK(be.cls == WillingnessClass::Low);

    WillingnessReport bf = willingness("Bob", "Frank", s);
    CHECK(bf.willingness == Approx(0.5 * (1.0 + 2.5 / 7.5)));
    CHECK(bf.cls == WillingnessClass::High);
}

TEST_CASE("willingness extremes") {
    // I = 0 and S = 0 -> both Canberra terms are 1.
    Scenario s;
    s.users = {"n", "c"};
    s.negotiators = {"n"};
    s.uploader = "n";
    s.targets = {"c"};
    GroupSet gs;
    gs.owner = "n";
    gs.groups.push_back({"g", {"c"}});
    s.group_sets.emplace("n", gs);
    s.ties.delta = 5;

    SUBCASE("maximal willingness") {
        // c granted with tie 0: strictness 0, sensitivity 0, importance 0.
        s.policies.emplace("n", PrivacyPolicy{"n", {"g"}, {}});
        s.ties.set("n", "c", 0);
        WillingnessReport r = willingness("n", "c", s);
        CHECK(r.willingness == Approx(1.0));
        CHECK(r.cls == WillingnessClass::High);
    }
    SUBCASE("exactly 0.5 classifies LOW") {
        // Sole member granted with tie 5: S = 5, I = 0, so the terms are
        // 1 and 0 and the willingness lands exactly on the cut point.
        s.policies.emplace("n", PrivacyPolicy{"n", {"g"}, {}});
        s.ties.set("n", "c", 5);
        WillingnessReport r = willingness("n", "c", s);
        CHECK(r.willingness == Approx(0.5));
        CHECK(r.cls == WillingnessClass::Low);
    }
    SUBCASE("minimal willingness") {
        // c granted with tie 5 as sole member: S = 5, I = |5 - 5| = 0...
        // to reach I = S = delta, deny c so strictness is delta and
        // tau(n,c) = 0.
        s.policies.emplace("n", PrivacyPolicy{"n", {}, {}});
        s.ties.set("n", "c", 0);
        WillingnessReport r = willingness("n", "c", s);
        CHECK(r.importance == Approx(5.0));
        CHECK(r.sensitivity == Approx(5.0));
        CHECK(r.willingness == Approx(0.0));
        CHECK(r.cls == WillingnessClass::Low);
    }
}

TEST_CASE("willingness stays within [0,1] and classifies at 0.5") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 1000; ++i) {
        Scenario s = mediator::test::random_scenario(rng);
        for (const auto& n : s.negotiators) {
            for (const auto& t : s.targets) {
                WillingnessReport r = willingness(n, t, s);
                CHECK(r.willingness >= 0.0);
                CHECK(r.willingness <= 1.0);
                CHECK((r.cls == WillingnessClass::High) ==
                      (r.willingness > 0.5));
            }
        }
    }
}

TEST_CASE("willingness is monotone in importance and sensitivity") {
    const double delta = 5.0;
    auto w = [&](double importance, double sens) {
        return 0.5 * (std::abs(delta - importance) / (delta + importance) +
                      std::abs(delta - sens) / (delta + sens));
    };
    for (double s = 0.0; s <= delta; s += 0.5) {
        for (double i = 0.0; i + 0.5 <= delta; i += 0.5) {
            CHECK(w(i + 0.5, s) < w(i, s));
            CHECK(w(s, i + 0.5) < w(s, i));
        }
    }
}

TEST_CASE("Canberra terms are scale-relative") {
    // Doubling delta together with proportional I and S leaves each term
    // unchanged.
    auto term = [](double delta, double x) {
        return std::abs(delta - x) / (delta + x);
    };
    for (double x = 0.0; x <= 5.0; x += 1.0) {
        CHECK(term(5.0, x) == Approx(term(10.0, 2.0 * x)));
    }
}

TEST_CASE("willingness_reports covers conflicts in order") {
    Scenario s = example_scenario();
    ConflictSet cs = detect_conflicts(s);
    auto reports = willingness_reports(s, cs);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].negotiator == "Alice");
    CHECK(reports[0].target == "Eve");
    CHECK(reports[3].negotiator == "Bob");
    CHECK(reports[3].target == "Frank");
    // Cached-sensitivity path agrees with the direct computation.
    for (const auto& r : reports) {
        CHECK(r.willingness ==
              Approx(willingness(r.negotiator, r.target, s).willingness));
    }
}
