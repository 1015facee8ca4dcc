#include <doctest.h>

#include <random>

#include "searchkit/blocksworld.hpp"
#include "searchkit/datasets.hpp"
#include "searchkit/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_problems.hpp"

using namespace searchkit;
namespace bw = searchkit::blocksworld;

TEST_CASE("atom parsing enforces the grammar") {
    CHECK(bw::parse_atom("on a b").str() == "on a b");
    CHECK(bw::parse_atom("  arm-empty ").str() == "arm-empty");
    CHECK_THROWS_AS(bw::parse_atom("on a"), ParseError);        // arity
    CHECK_THROWS_AS(bw::parse_atom("fly a"), ParseError);       // unknown predicate
    CHECK_THROWS_AS(bw::parse_atom("clear a b"), ParseError);   // arity
    CHECK_THROWS_AS(bw::parse_atom("on a a"), ParseError);      // self-support
    CHECK_THROWS_AS(bw::parse_atom("clear a(b"), ParseError);   // reserved char
}

TEST_CASE("well-formedness validation") {
    CHECK_NOTHROW(bw::make_state({"arm-empty", "clear a", "on-table a"}));
    CHECK_NOTHROW(bw::make_state({"holding a"}));
    // both arm-empty and holding
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "holding a"}), std::invalid_argument);
    // neither
    CHECK_THROWS_AS(bw::make_state({"clear a", "on-table a"}), std::invalid_argument);
    // block resting in two places
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "clear a", "on-table a", "on a b",
                                    "on-table b"}),
                    std::invalid_argument);
    // two blocks on one block
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "on a c", "on b c", "on-table c",
                                    "clear a", "clear b"}),
                    std::invalid_argument);
    // floating two-cycle
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "on a b", "on b a"}),
                    std::invalid_argument);
    // clear flag wrong
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "on-table a"}), std::invalid_argument);
    CHECK_THROWS_AS(bw::make_state({"arm-empty", "clear a", "clear b", "on a b",
                                    "on-table b"}),
                    std::invalid_argument);
    // nothing may rest on a held block
    CHECK_THROWS_AS(bw::make_state({"holding a", "on b a", "clear b"}),
                    std::invalid_argument);
}

TEST_CASE("successor schemas on hand-checked cases") {
    SUBCASE("single block on table: only pick-up applies") {
        auto state = bw::make_state({"arm-empty", "clear a", "on-table a"});
        auto succs = bw::successors(state);
        REQUIRE(succs.size() == 1);
        CHECK(succs[0].action == "(pick-up a)");
        CHECK(succs[0].state.atoms == std::set<std::string>{"holding a"});
    }
    SUBCASE("holding a with one clear table block: put-down and stack") {
        auto state = bw::make_state({"holding a", "clear b", "on-table b"});
        auto succs = bw::successors(state);
        REQUIRE(succs.size() == 2);
        CHECK(succs[0].action == "(put-down a)");
        CHECK(succs[1].action == "(stack a b)");
        CHECK(succs[1].state.atoms ==
              std::set<std::string>{"arm-empty", "clear a", "on a b", "on-table b"});
    }
    SUBCASE("holding with no clear blocks: only put-down") {
        auto state = bw::make_state({"holding a"});
        auto succs = bw::successors(state);
        REQUIRE(succs.size() == 1);
        CHECK(succs[0].action == "(put-down a)");
    }
}

TEST_CASE("goal satisfaction is subset containment") {
    auto state = bw::make_state({"arm-empty", "clear a", "on a b", "on-table b"});
    CHECK(bw::is_goal(state, {}));  // empty goal
    CHECK(bw::is_goal(state, {state.atoms}));
    CHECK(bw::is_goal(state, {{"on a b"}}));
    CHECK(!bw::is_goal(state, {{"on b a"}}));
}

TEST_CASE("every successor of a well-formed state is well-formed") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto state = testsupport::random_blocks_state(rng, 1 + static_cast<int>(rng() % 4));
        for (int depth = 0; depth < 4; ++depth) {
            auto succs = bw::successors(state);
            for (const auto &succ : succs) CHECK(bw::is_well_formed(succ.state));
            if (succs.empty()) break;
            state = succs[rng() % succs.size()].state;
        }
    }
}

TEST_CASE("actions are reversible") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto state = testsupport::random_blocks_state(rng, 1 + static_cast<int>(rng() % 4));
        for (const auto &succ : bw::successors(state)) {
            bool reversed = false;
            for (const auto &back : bw::successors(succ.state))
                if (bw::canonical_key(back.state) == bw::canonical_key(state)) reversed = true;
            CHECK(reversed);
        }
    }
}

TEST_CASE("reachable counts match the closed form and are seed-independent") {
    // sets-of-stacks(n) + n * sets-of-stacks(n-1): 2, 5, 22, 125, 866.
    const long long expected[] = {0, 2, 5, 22, 125, 866};
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 5; ++n) {
        CHECK(testsupport::blocksworld_state_count(n) == expected[n]);
        for (int trial = 0; trial < 3; ++trial) {
            auto seed_state = testsupport::random_blocks_state(rng, n);
            CHECK(bw::count_reachable(seed_state) ==
                  static_cast<std::size_t>(expected[n]));
            // Holding states see the same closure (strong connectivity).
            auto succs = bw::successors(seed_state);
            const auto &held = succs[rng() % succs.size()].state;
            CHECK(bw::count_reachable(held) == static_cast<std::size_t>(expected[n]));
        }
    }
}

TEST_CASE("pddl problems parse, validate, and round-trip") {
    const std::string text =
        "(define (problem demo)\n"
        "  (:domain blocksworld)\n"
        "  (:objects a b)\n"
        "  (:init (arm-empty) (clear a) (on a b) (on-table b))\n"
        "  (:goal (and (on b a))))\n";
    auto instance = bw::parse_problem(text);
    CHECK(instance.name == "demo");
    CHECK(instance.init.contains("on a b"));
    CHECK(instance.goal.atoms == std::set<std::string>{"on b a"});

    auto round_trip = bw::parse_problem(bw::serialize_problem(instance));
    CHECK(round_trip.init.atoms == instance.init.atoms);
    CHECK(round_trip.goal.atoms == instance.goal.atoms);

    SUBCASE("keywords are case-insensitive, goal may be a bare atom") {
        auto alt = bw::parse_problem(
            "(DEFINE (PROBLEM p) (:OBJECTS a) (:INIT (ARM-EMPTY) (CLEAR a) "
            "(ON-TABLE a)) (:GOAL (HOLDING a)))");
        CHECK(alt.goal.atoms == std::set<std::string>{"holding a"});
    }
    SUBCASE("errors carry context") {
        CHECK_THROWS_AS(bw::parse_problem("(define (problem p) (:objects a) "
                                          "(:init (on a)) (:goal (and)))"),
                        ParseError);  // arity
        CHECK_THROWS_AS(bw::parse_problem("(define (problem p) (:objects a) "
                                          "(:init (arm-empty) (holding a) "
                                          "(clear a) (on-table a)) (:goal (and)))"),
                        ParseError);  // ill-formed init
        CHECK_THROWS_AS(bw::parse_problem("(define (problem p) (:objects a) "
                                          "(:init (arm-empty)"),
                        ParseError);  // unbalanced parens
        CHECK_THROWS_AS(bw::parse_problem("(define (problem p) (:objects a) "
                                          "(:init (clear b) (arm-empty) (on-table b)) "
                                          "(:goal (and)))"),
                        ParseError);  // undeclared object
    }
}

TEST_CASE("bfs plans are optimal against the layer oracle on small instances") {
    auto dataset = datasets::gen_blocksworld(15, 4, 99);
    for (const auto &file : dataset.files) {
        auto instance = bw::parse_problem(file.contents);
        auto problem = bw::make_problem(instance);
        auto outcome = bfs(problem);
        REQUIRE(outcome.status == SearchStatus::Solved);
        CHECK(validate_path(problem, outcome.path));
        auto oracle = testsupport::shortest_goal_depth(problem);
        REQUIRE(oracle.has_value());
        CHECK(outcome.path.size() - 1 == *oracle);
    }
}
