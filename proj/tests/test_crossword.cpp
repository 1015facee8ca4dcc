#include <doctest.h>

#include <random>

#include "searchkit/crossword.hpp"
#include "searchkit/datasets.hpp"
#include "searchkit/errors.hpp"
#include "support/random_problems.hpp"

using namespace searchkit;
namespace xw = searchkit::crossword;

namespace {

// A hand-made solvable spec: the planted grid is row i = column i
// (symmetric letters), plus one distractor per slot.
xw::Spec tiny_spec() {
    const std::array<std::string, 5> rows = {"abcde", "bbbbb", "cbcac", "dbaad", "ebcda"};
    xw::Spec spec;
    for (int i = 0; i < xw::kSize; ++i) {
        std::string col;
        for (int r = 0; r < xw::kSize; ++r) col += rows[r][i];
        spec.row_candidates[i] = {rows[i], "zzzzz"};
        spec.col_candidates[i] = {col, "yyyyy"};
    }
    return spec;
}

}  // namespace

TEST_CASE("empty state with 10 candidates per slot has exactly 100 successors") {
    auto dataset = datasets::gen_crossword(1, 42, 9);
    auto spec = xw::parse_spec(dataset.files[0].contents);
    auto succs = xw::successors(spec, xw::State{});
    CHECK(succs.size() == 100);
}

TEST_CASE("with all rows assigned only matching columns remain") {
    auto spec = tiny_spec();
    xw::State state;
    for (int row = 0; row < xw::kSize; ++row) state.assignment[row] = 0;
    auto succs = xw::successors(spec, state);
    CHECK(succs.size() <= 50);
    for (const auto &succ : succs) {
        // Each successor assigns one column whose word matches the grid.
        int changed = -1;
        for (int slot = 0; slot < xw::kSlots; ++slot)
            if (succ.state.assignment[slot] != state.assignment[slot]) changed = slot;
        REQUIRE(changed >= xw::kSize);
        CHECK(succ.state.assignment[changed] == 0);  // only the planted column fits
    }
    CHECK(succs.size() == 5);
}

TEST_CASE("fully assigned state has no successors and passes the goal test") {
    auto spec = tiny_spec();
    xw::State state;
    state.assignment.fill(0);
    CHECK(xw::successors(spec, state).empty());
    CHECK(xw::is_goal(spec, state));
    xw::State partial = state;
    partial.assignment[9] = -1;
    CHECK(!xw::is_goal(spec, partial));

    // Defensive re-check: a full assignment whose induced words clash at a
    // crossing is rejected, not trusted.
    xw::State clashed = state;
    clashed.assignment[5] = 1;  // C0 = "yyyyy" conflicts with every row
    CHECK(!xw::is_goal(spec, clashed));
}

TEST_CASE("canonical key renders slots in fixed order") {
    xw::State state;
    state.assignment[0] = 3;
    CHECK(xw::canonical_key(state) ==
          "R0=3|R1=·|R2=·|R3=·|R4=·|"
          "C0=·|C1=·|C2=·|C3=·|C4=·");
}

TEST_CASE("grid_of overlays rows and columns") {
    auto spec = tiny_spec();
    xw::State state;
    CHECK(xw::render_grid(xw::grid_of(spec, state)) == ".....\n.....\n.....\n.....\n.....\n");
    state.assignment[0] = 0;  // R0 = abcde
    auto grid = xw::grid_of(spec, state);
    CHECK(grid[0][0] == 'a');
    CHECK(grid[0][4] == 'e');
    CHECK(!grid[1][0].has_value());
    state.assignment[5] = 0;  // C0 = abcde too (symmetric grid)
    grid = xw::grid_of(spec, state);
    CHECK(grid[0][0] == 'a');
    CHECK(grid[4][0] == 'e');
}

TEST_CASE("dfs solves planted specs and the grid matches a goal state") {
    auto dataset = datasets::gen_crossword(4, 7, 9);
    for (std::size_t i = 0; i < dataset.files.size(); i += 2) {
        auto spec = xw::parse_spec(dataset.files[i].contents);
        auto problem = xw::make_problem(spec);
        auto outcome = dfs(problem);
        REQUIRE(outcome.status == SearchStatus::Solved);
        CHECK(validate_path(problem, outcome.path));
        CHECK(xw::is_goal(spec, outcome.path.back().state));
    }
}

TEST_CASE("distractors_per_slot=0 solves in exactly 10 assignments") {
    auto dataset = datasets::gen_crossword(1, 3, 0);
    auto spec = xw::parse_spec(dataset.files[0].contents);
    auto outcome = dfs(xw::make_problem(spec));
    REQUIRE(outcome.status == SearchStatus::Solved);
    CHECK(outcome.path.size() == 11);  // empty + 10 assignments
    // And the solution equals the planted grid.
    CHECK(xw::render_grid(xw::grid_of(spec, outcome.path.back().state)) ==
          dataset.files[1].contents);
}

TEST_CASE("fixed-slot-order mode stays complete on planted specs") {
    auto dataset = datasets::gen_crossword(3, 19, 6);
    for (std::size_t i = 0; i < dataset.files.size(); i += 2) {
        auto spec = xw::parse_spec(dataset.files[i].contents);
        auto fixed = dfs(xw::make_problem(spec, /*fixed_slot_order=*/true));
        REQUIRE(fixed.status == SearchStatus::Solved);
        CHECK(xw::is_goal(spec, fixed.path.back().state));
        // Branching shrinks: first layer offers at most one slot's candidates.
        auto succs = xw::successors(spec, xw::State{}, true);
        CHECK(succs.size() <= 7);
    }
}

TEST_CASE("monotone consistency: prefixes of a solution are consistent in any order") {
    std::mt19937_64 rng(99);
    auto dataset = datasets::gen_crossword(2, 23, 9);
    for (std::size_t f = 0; f < dataset.files.size(); f += 2) {
        auto spec = xw::parse_spec(dataset.files[f].contents);
        auto outcome = dfs(xw::make_problem(spec));
        REQUIRE(outcome.status == SearchStatus::Solved);
        const xw::State solution = outcome.path.back().state;
        for (int trial = 0; trial < 20; ++trial) {
            std::array<int, xw::kSlots> order;
            for (int i = 0; i < xw::kSlots; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            const int prefix_len = 1 + static_cast<int>(rng() % xw::kSlots);
            xw::State prefix;
            for (int i = 0; i < prefix_len; ++i) {
                int slot = order[i];
                const auto &word = xw::candidates(spec, slot)[solution.assignment[slot]];
                CHECK(xw::consistent_placement(spec, prefix, slot, word));
                prefix.assignment[slot] = solution.assignment[slot];
            }
        }
    }
}

TEST_CASE("bfs and dfs agree on solvability") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 12; ++i) {
        auto spec = testsupport::random_crossword(rng);
        auto problem = xw::make_problem(spec);
        CHECK((bfs(problem).status == SearchStatus::Solved) ==
              (dfs(problem).status == SearchStatus::Solved));
    }
}

TEST_CASE("spec parsing filters word lengths and validates blocks") {
    CHECK_THROWS_AS(xw::parse_spec("h0:\nabcde\n"), ParseError);  // missing blocks
    std::string text;
    for (int i = 0; i < 5; ++i)
        text += "h" + std::to_string(i) + ":\nabcde\nabc\ntoolong\n";
    for (int i = 0; i < 5; ++i) text += "v" + std::to_string(i) + ":\nfghij\n";
    auto spec = xw::parse_spec(text);
    for (int i = 0; i < 5; ++i) CHECK(spec.row_candidates[i].size() == 1);  // filtered

    std::string empty_slot = text;
    empty_slot.replace(empty_slot.find("fghij"), 5, "fgh");
    CHECK_THROWS_AS(xw::parse_spec(empty_slot), ParseError);  // v0 left empty

    auto round_trip = xw::parse_spec(xw::serialize_spec(spec));
    CHECK(round_trip.row_candidates == spec.row_candidates);
    CHECK(round_trip.col_candidates == spec.col_candidates);
}
