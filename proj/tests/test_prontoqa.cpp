#include <doctest.h>

#include <algorithm>
#include <random>

#include "searchkit/datasets.hpp"
#include "searchkit/errors.hpp"
#include "searchkit/prontoqa.hpp"
#include "support/oracles.hpp"
#include "support/random_problems.hpp"

using namespace searchkit;
namespace pq = searchkit::prontoqa;

TEST_CASE("fact normalization and lexical negation") {
    CHECK(pq::normalize_fact("  wumpus   is red ") == "wumpus is red");
    CHECK(pq::negate("wumpus is red") == "not wumpus is red");
    CHECK(pq::negate("not wumpus is red") == "wumpus is red");
    for (const char *fact : {"a", "not a", "the vumpus is large"})
        CHECK(pq::negate(pq::negate(fact)) == fact);
    CHECK(pq::is_negative("not a"));
    CHECK(!pq::is_negative("nota"));
    CHECK_THROWS_AS(pq::normalize_fact("   "), ParseError);
    CHECK_THROWS_AS(pq::normalize_fact("not not a"), ParseError);
}

TEST_CASE("successors apply exactly the applicable novel rules") {
    std::vector<pq::Rule> rules = {{"A", "B"}, {"B", "C"}};
    auto succs = pq::successors({"A"}, rules);
    REQUIRE(succs.size() == 1);
    CHECK(succs[0].action == "A -> B");
    CHECK(succs[0].state == pq::FactSet{"A", "B"});

    CHECK(pq::successors({"A", "B"}, {{"A", "B"}}).empty());  // consequent known

    auto two = pq::successors({"A"}, {{"A", "B"}, {"A", "C"}});
    REQUIRE(two.size() == 2);
    CHECK(two[0].state == pq::FactSet{"A", "B"});
    CHECK(two[1].state == pq::FactSet{"A", "C"});
}

TEST_CASE("goal test is membership") {
    CHECK(pq::is_goal({"A", "B"}, "B"));
    CHECK(!pq::is_goal({"A"}, "not A"));
    CHECK(!pq::is_goal({}, "A"));
}

TEST_CASE("prove answers TRUE, FALSE, and UNKNOWN") {
    SUBCASE("two-step chain is TRUE with the full proof") {
        pq::Task task{{"A"}, {{"A", "B"}, {"B", "C"}}, "C", std::nullopt};
        pq::ProveStats stats;
        auto verdict = pq::prove(task, {}, &stats);
        CHECK(verdict.answer == pq::Answer::True);
        REQUIRE(verdict.proof.size() == 2);
        CHECK(verdict.proof[0].label() == "A -> B");
        CHECK(verdict.proof[1].label() == "B -> C");
        CHECK(stats.searches == 1);
        CHECK(pq::validate_proof(task, verdict));
    }
    SUBCASE("negated consequent gives FALSE via the second search") {
        pq::Task task{{"A"}, {{"A", "not C"}}, "C", std::nullopt};
        pq::ProveStats stats;
        auto verdict = pq::prove(task, {}, &stats);
        CHECK(verdict.answer == pq::Answer::False);
        REQUIRE(verdict.proof.size() == 1);
        CHECK(verdict.proof[0].label() == "A -> not C");
        CHECK(stats.searches == 2);
        CHECK(pq::validate_proof(task, verdict));
    }
    SUBCASE("no rules means UNKNOWN") {
        pq::Task task{{"A"}, {}, "C", std::nullopt};
        pq::ProveStats stats;
        auto verdict = pq::prove(task, {}, &stats);
        CHECK(verdict.answer == pq::Answer::Unknown);
        CHECK(verdict.proof.empty());
        CHECK(stats.searches == 2);
        CHECK(pq::validate_proof(task, verdict));
    }
}

TEST_CASE("validate_proof rejects broken replays") {
    pq::Task task{{"A"}, {{"A", "B"}, {"B", "C"}}, "C", std::nullopt};
    auto verdict = pq::prove(task);
    REQUIRE(verdict.answer == pq::Answer::True);

    auto reordered = verdict;
    std::swap(reordered.proof[0], reordered.proof[1]);  // B->C before B is known
    CHECK(!pq::validate_proof(task, reordered));

    auto foreign = verdict;
    foreign.proof.push_back({"C", "D"});  // not one of the task's rules
    CHECK(!pq::validate_proof(task, foreign));

    auto truncated = verdict;
    truncated.proof.pop_back();
    CHECK(!pq::validate_proof(task, truncated));
}

TEST_CASE("fact sets grow by exactly one fact per path step") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto task = testsupport::random_prontoqa(rng);
        auto problem = pq::make_problem(task, task.query);
        auto outcome = bfs(problem);
        if (outcome.status != SearchStatus::Solved) continue;
        for (std::size_t i = 1; i < outcome.path.size(); ++i)
            CHECK(outcome.path[i].state.size() == outcome.path[i - 1].state.size() + 1);
        // Path length bounded by the number of distinct consequents.
        std::set<std::string> consequents;
        for (const auto &rule : task.rules) consequents.insert(rule.consequent);
        CHECK(outcome.path.size() - 1 <= consequents.size());
    }
}

TEST_CASE("reachable states match the antichain enumerator on generated tasks") {
    // A fact set S is reachable iff every non-initial fact has an in-S rule
    // antecedent (rule graphs from the generator are acyclic).
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 25; ++trial) {
        auto task = testsupport::random_prontoqa(rng);
        auto problem = pq::make_problem(task, task.query);
        auto crawl = testsupport::crawl(problem);

        std::vector<std::string> derivable;
        for (const auto &rule : task.rules)
            if (std::find(derivable.begin(), derivable.end(), rule.consequent) ==
                derivable.end())
                derivable.push_back(rule.consequent);
        const pq::FactSet initial(task.initial_facts.begin(), task.initial_facts.end());
        std::size_t reachable = 0;
        REQUIRE(derivable.size() <= 20);
        for (std::uint64_t mask = 0; mask < (1ull << derivable.size()); ++mask) {
            pq::FactSet facts = initial;
            for (std::size_t i = 0; i < derivable.size(); ++i)
                if (mask & (1ull << i)) facts.insert(derivable[i]);
            if (facts.size() != initial.size() + __builtin_popcountll(mask))
                continue;  // mask re-added an initial fact: same set counted once
            bool ok = true;
            for (std::size_t i = 0; i < derivable.size() && ok; ++i) {
                if (!(mask & (1ull << i))) continue;
                bool supported = false;
                for (const auto &rule : task.rules)
                    if (rule.consequent == derivable[i] && facts.count(rule.antecedent) &&
                        rule.antecedent != rule.consequent)
                        supported = true;
                ok = supported;
            }
            if (ok) ++reachable;
        }
        CHECK(crawl.keys.size() == reachable);
    }
}

TEST_CASE("task files parse and round-trip") {
    const std::string text =
        "facts:\n"
        "the wumpus is red\n"
        "rules:\n"
        "the wumpus is red -> the wumpus is angry\n"
        "query: the wumpus is angry\n"
        "gold: true\n"
        "\n"
        "facts:\n"
        "A\n"
        "rules:\n"
        "A -> not B\n"
        "query: B\n"
        "gold: false\n";
    auto tasks = pq::parse_tasks(text);
    REQUIRE(tasks.size() == 2);
    CHECK(tasks[0].gold == true);
    CHECK(tasks[1].gold == false);
    CHECK(tasks[1].rules[0].consequent == "not B");

    auto round_trip = pq::parse_tasks(pq::serialize_tasks(tasks));
    REQUIRE(round_trip.size() == 2);
    CHECK(round_trip[0].query == tasks[0].query);
    CHECK(round_trip[1].rules[0].label() == tasks[1].rules[0].label());

    CHECK_THROWS_AS(pq::parse_tasks("facts:\nA\nrules:\nA - B\nquery: B\n"), ParseError);
    CHECK_THROWS_AS(pq::parse_tasks("facts:\nA\n"), ParseError);  // no query
    CHECK_THROWS_AS(pq::parse_tasks("stray line\n"), ParseError);
}

TEST_CASE("generated tasks prove to their gold answers with at most two searches") {
    auto dataset = datasets::gen_prontoqa(60, 4, 3, 17);
    auto tasks = pq::parse_tasks(dataset.files[0].contents);
    REQUIRE(tasks.size() == 60);
    for (const auto &task : tasks) {
        pq::ProveStats stats;
        auto verdict = pq::prove(task, {}, &stats);
        REQUIRE(task.gold.has_value());
        CHECK((verdict.answer == pq::Answer::True) == *task.gold);
        CHECK(stats.searches <= 2);
        CHECK(pq::validate_proof(task, verdict));
        CHECK(verdict.proof.size() == 4);  // chain depth
    }
}
