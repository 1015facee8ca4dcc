#pragma once

#include <array>
#include <string>
#include <vector>

namespace searchkit::costmodel {

// Shared bounds used by the surveyed planning-with-LLM approaches:
// successors generated per state, rollouts/trials, and beam width.
struct CostParams {
    long long branching = 5;
    long long trials = 10;
    long long beam = 5;
};

struct DatasetProfile {
    std::string name;
    long long instance_count;  // D
    long long length_bound;    // L, per-dataset plan/rollout length bound
    long long total_states;    // summed state-space size over all instances
};

// The four benchmark suites with their published sizes: 24Game (1362
// instances, 4573 states each), Crossword (20 puzzles, 11^10 states each),
// BlocksWorld (447 four-block + 55 five-block instances), PrOntoQA (4000
// tasks, 12-54 states each).
const std::vector<DatasetProfile> &builtin_datasets();

struct ApproachSpec {
    std::string name;
    std::string complexity;  // e.g. "O(TbLD)"
    long long (*calls_per_instance)(long long length, const CostParams &);
    long long (*states_per_instance)(long long length, const CostParams &);
    // IO/CoT make one call per instance; the table prints their call
    // totals as raw dataset sizes instead of K notation.
    bool exact_call_display = false;
};

// The nine projected approaches: IO, CoT, ReAct, ReWOO, RAP, ToT, GoT,
// Reflection, LATS.
const std::vector<ApproachSpec> &builtin_approaches();
const ApproachSpec &approach_by_name(const std::string &name);
const DatasetProfile &dataset_by_name(const std::string &name);

// The measured row: per-dataset averages reported for the pre-validated
// symbolic-search approach, kept verbatim and never recomputed.
struct MeasuredRow {
    std::string name = "ToS";
    std::string complexity = "O(1)";
    std::array<std::string, 4> states_display = {"27.0%", "3e-4%", "125%", "175%"};
    std::array<std::string, 4> calls_display = {"2.2", "3.8", "3.8", "2.6"};
};

struct Pricing {
    double input_per_million = 10.0;   // dollars per 1M input tokens
    double output_per_million = 30.0;  // dollars per 1M output tokens
    long long tokens_in = 500;         // average tokens per call input
    long long tokens_out = 50;         // average tokens per call output
};

// D x calls_per_instance(L), exact integer arithmetic.
long long projected_calls(const ApproachSpec &approach, const DatasetProfile &dataset,
                          const CostParams &params);

// 100 x D x states_per_instance(L) / total_states, as a percentage.
double explored_fraction(const ApproachSpec &approach, const DatasetProfile &dataset,
                         const CostParams &params);

// Dollars for running the approach over the given datasets.
double total_cost(const ApproachSpec &approach, const Pricing &pricing,
                  const std::vector<DatasetProfile> &datasets, const CostParams &params);

// Table formatting. The rules are tuned so that every cell of the
// published comparison table is reproduced character for character.
std::string format_calls(long long value, bool exact);
std::string format_states_percent(double percent);

std::string render_table(const CostParams &params, const Pricing &pricing);
std::string render_table_csv(const CostParams &params, const Pricing &pricing);

}  // namespace searchkit::costmodel
