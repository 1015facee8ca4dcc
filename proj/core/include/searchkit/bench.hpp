#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "searchkit/search.hpp"

namespace searchkit::bench {

enum class Domain { Game24, Crossword, Blocksworld, Prontoqa };
Domain domain_from_name(const std::string &name);  // throws on unknown names
const char *domain_name(Domain domain);

enum class Algo { Bfs, Dfs };
Algo algo_from_name(const std::string &name);

struct SolveOptions {
    Algo algo = Algo::Bfs;
    int jobs = 1;  // instance-level fan-out; each search stays single-threaded
    SearchLimits limits;
    bool fixed_slot_order = false;  // crossword only
};

struct InstanceRecord {
    std::string id;
    std::string status;       // SOLVED/EXHAUSTED/LIMIT, or TRUE/FALSE/UNKNOWN
    bool correct = false;     // solved-correctly per the domain's notion
    bool path_valid = false;  // validate_path / proof replay result
    long long plan_length = 0;
    std::uint64_t expanded = 0;
    std::uint64_t generated = 0;
    double seconds = 0.0;
    std::string detail;  // e.g. solved crossword grid, or an error note
};

struct RunReport {
    std::vector<InstanceRecord> records;
    std::size_t correct = 0;
    double accuracy = 0.0;  // correct / records
    std::uint64_t total_expanded = 0;
    std::uint64_t total_generated = 0;
    double total_seconds = 0.0;   // summed per-instance wall time
    double elapsed_seconds = 0.0; // wall time of the whole run
    bool all_paths_valid = true;
};

// Loads the dataset at path (a file for game24/prontoqa, a directory of
// .xw / .pddl files for crossword/blocksworld), solves every instance,
// and validates every returned path. PrOntoQA always goes through the
// two-phase prover, whatever options.algo says.
RunReport run_suite(Domain domain, const std::filesystem::path &dataset,
                    const SolveOptions &options);

std::string report_table(const RunReport &report);
std::string report_csv(const RunReport &report);

// Reachable-state count of a single instance via exhaustive crawl. index
// selects the instance for multi-instance files (game24 line, prontoqa
// record); it is ignored for single-instance .pddl / .xw files.
std::size_t enumerate_states(Domain domain, const std::filesystem::path &instance_path,
                             std::size_t index = 0);

// Replays a plan file (one action label per line) from the instance's
// initial state; true iff every step is a legal successor and the final
// state satisfies the goal. For prontoqa the plan lines are rules "X -> Y"
// and the goal is the recorded query (or its negation when prefixed).
bool validate_plan(Domain domain, const std::filesystem::path &instance_path,
                   const std::filesystem::path &plan_path, std::size_t index = 0,
                   std::string *message = nullptr);

std::string read_file(const std::filesystem::path &path);

}  // namespace searchkit::bench
