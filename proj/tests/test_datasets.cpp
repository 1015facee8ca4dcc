#include <doctest.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <sstream>

#include "searchkit/bench.hpp"
#include "searchkit/datasets.hpp"

using namespace searchkit;
namespace ds = searchkit::datasets;

TEST_CASE("generation is a pure function of seed and parameters") {
    CHECK(ds::dataset_digest(ds::gen_game24(50, 7)) ==
          ds::dataset_digest(ds::gen_game24(50, 7)));
    CHECK(ds::dataset_digest(ds::gen_game24(50, 7)) !=
          ds::dataset_digest(ds::gen_game24(50, 8)));
    CHECK(ds::dataset_digest(ds::gen_crossword(3, 1)) ==
          ds::dataset_digest(ds::gen_crossword(3, 1)));
    CHECK(ds::dataset_digest(ds::gen_blocksworld(5, 4, 2)) ==
          ds::dataset_digest(ds::gen_blocksworld(5, 4, 2)));
    CHECK(ds::dataset_digest(ds::gen_prontoqa(10, 3, 2, 3)) ==
          ds::dataset_digest(ds::gen_prontoqa(10, 3, 2, 3)));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ds::gen_game24(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ds::gen_game24(1, 1, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(ds::gen_blocksworld(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ds::gen_blocksworld(1, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(ds::gen_prontoqa(1, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ds::gen_crossword(0, 1), std::invalid_argument);
}

TEST_CASE("value_range 1..1 gives all-ones instances") {
    auto dataset = ds::gen_game24(5, 3, 1, 1);
    auto instances = game24::parse_instances(dataset.files[0].contents);
    for (const auto &instance : instances)
        CHECK(instance.numbers == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("24-game oracle on known instances") {
    CHECK(!ds::oracle_game24({{1, 1, 1, 1}, 24}));
    CHECK(ds::oracle_game24({{6, 6, 6, 6}, 24}));
    CHECK(ds::oracle_game24({{24, 1, 1, 1}, 24}));
    CHECK(ds::oracle_game24({{4, 7, 8, 8}, 24}));   // (7 - 8/8) * 4
    CHECK(ds::oracle_game24({{1, 3, 4, 6}, 24}));   // 6 / (1 - 3/4), needs fractions
    CHECK(!ds::oracle_game24({{1, 1, 1, 2}, 24}));
    CHECK(ds::oracle_game24({{5, 5}, 10}));
    CHECK(!ds::oracle_game24({{2}, 24}));
    CHECK(ds::oracle_game24({{24}, 24}));  // zero operations
}

TEST_CASE("solver agrees with the oracle across a generated batch") {
    auto dataset = ds::gen_game24(120, 21);
    auto instances = game24::parse_instances(dataset.files[0].contents);
    const std::string &answers = dataset.files[1].contents;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const bool solvable = answers[2 * i] == '1';  // "X\n" per line
        CHECK(ds::oracle_game24(instances[i]) == solvable);
        CHECK((game24::solve(instances[i]).status == SearchStatus::Solved) == solvable);
    }
}

TEST_CASE("crossword datasets contain their planted solution") {
    auto dataset = ds::gen_crossword(3, 9, 9);
    REQUIRE(dataset.files.size() == 6);  // spec + solution per game
    for (std::size_t i = 0; i < dataset.files.size(); i += 2) {
        auto spec = crossword::parse_spec(dataset.files[i].contents);
        const std::string &solution = dataset.files[i + 1].contents;
        std::array<std::string, 5> rows;
        std::istringstream in(solution);
        for (auto &row : rows) std::getline(in, row);
        for (int r = 0; r < 5; ++r) {
            const auto &words = spec.row_candidates[r];
            CHECK(std::find(words.begin(), words.end(), rows[r]) != words.end());
            CHECK(words.size() == 10);
        }
        for (int c = 0; c < 5; ++c) {
            std::string col;
            for (int r = 0; r < 5; ++r) col += rows[r][c];
            const auto &words = spec.col_candidates[c];
            CHECK(std::find(words.begin(), words.end(), col) != words.end());
        }
    }
}

TEST_CASE("generated blocksworld instances are well-formed and solvable") {
    auto dataset = ds::gen_blocksworld(8, 4, 5);
    for (const auto &file : dataset.files) {
        auto instance = blocksworld::parse_problem(file.contents);
        CHECK(blocksworld::is_well_formed(instance.init));
        auto outcome = bfs(blocksworld::make_problem(instance));
        CHECK(outcome.status == SearchStatus::Solved);
    }
}

TEST_CASE("one-block instances are init=goal=on-table with empty plans") {
    auto dataset = ds::gen_blocksworld(2, 1, 8);
    for (const auto &file : dataset.files) {
        auto instance = blocksworld::parse_problem(file.contents);
        CHECK(instance.init.contains("on-table b1"));
        auto outcome = bfs(blocksworld::make_problem(instance));
        REQUIRE(outcome.status == SearchStatus::Solved);
        CHECK(outcome.path.size() == 1);  // already at the goal
    }
}

TEST_CASE("manifests round-trip and record the emitted digest") {
    auto dataset = ds::gen_prontoqa(12, 2, 1, 77);
    auto manifest = ds::parse_manifest(ds::make_manifest(dataset));
    CHECK(manifest.domain == "prontoqa");
    CHECK(manifest.seed == 77);
    CHECK(manifest.count == 12);
    CHECK(manifest.file_count == 1);
    CHECK(manifest.digest == ds::dataset_digest(dataset));

    // Writing to disk then regenerating reproduces the recorded digest.
    auto dir = std::filesystem::temp_directory_path() / "searchkit-test-manifest";
    std::filesystem::remove_all(dir);
    ds::write_dataset(dataset, dir);
    auto written = ds::parse_manifest(bench::read_file(dir / "manifest.txt"));
    auto regenerated = ds::gen_prontoqa(12, 2, 1, 77);
    CHECK(ds::dataset_digest(regenerated) == written.digest);
    CHECK(bench::read_file(dir / "tasks.txt") == regenerated.files[0].contents);
    std::filesystem::remove_all(dir);
}

TEST_CASE("depth-1 prontoqa tasks resolve almost immediately") {
    auto dataset = ds::gen_prontoqa(6, 1, 0, 13);
    auto tasks = prontoqa::parse_tasks(dataset.files[0].contents);
    for (const auto &task : tasks) {
        REQUIRE(task.rules.size() == 1);
        prontoqa::ProveStats stats;
        auto verdict = prontoqa::prove(task, {}, &stats);
        CHECK((verdict.answer == prontoqa::Answer::True) == *task.gold);
        CHECK(stats.expanded <= 2 * 2);  // two states per search at most
    }
}
