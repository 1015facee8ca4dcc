#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "searchkit/bench.hpp"
#include "searchkit/cost_model.hpp"
#include "searchkit/datasets.hpp"
#include "searchkit/errors.hpp"

namespace fs = std::filesystem;
using namespace searchkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInaccurate = 1;
constexpr int kExitUsage = 2;

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// game24/prontoqa datasets are single files: -o names the instance file,
// extra files (oracle answers) and the manifest become sidecars. The
// directory-per-dataset domains (crossword, blocksworld) treat -o as a
// directory.
void write_generated(const datasets::Dataset &dataset, const fs::path &out,
                     bool single_file) {
    if (!single_file || fs::is_directory(out) || out.filename().empty()) {
        datasets::write_dataset(dataset, out);
        std::cout << "wrote " << dataset.files.size() << " files + manifest under "
                  << out.string() << "\n";
        return;
    }
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    for (std::size_t i = 0; i < dataset.files.size(); ++i) {
        fs::path target = out;
        if (i > 0) {
            auto dot = dataset.files[i].name.find('.');
            target = out.string() + dataset.files[i].name.substr(dot);
        }
        write_text(target, dataset.files[i].contents);
    }
    write_text(out.string() + ".manifest", datasets::make_manifest(dataset));
    std::cout << "wrote " << out.string() << " (+" << dataset.files.size() - 1
              << " sidecar) and manifest, digest " << datasets::dataset_digest(dataset)
              << "\n";
}

struct GenerateArgs {
    std::string domain;
    long long count = 100;
    std::uint64_t seed = 1;
    std::string out;
    long long min_value = 1;
    long long max_value = 13;
    int blocks = 4;
    int depth = 3;
    int distractors = 3;
    int slot_distractors = 9;
};

int cmd_generate(const GenerateArgs &args) {
    const bench::Domain domain = bench::domain_from_name(args.domain);
    switch (domain) {
    case bench::Domain::Game24:
        write_generated(datasets::gen_game24(args.count, args.seed, args.min_value,
                                             args.max_value),
                        args.out, /*single_file=*/true);
        break;
    case bench::Domain::Crossword:
        write_generated(datasets::gen_crossword(args.count, args.seed, args.slot_distractors),
                        args.out, /*single_file=*/false);
        break;
    case bench::Domain::Blocksworld:
        write_generated(datasets::gen_blocksworld(args.count, args.blocks, args.seed),
                        args.out, /*single_file=*/false);
        break;
    case bench::Domain::Prontoqa:
        write_generated(datasets::gen_prontoqa(args.count, args.depth, args.distractors,
                                               args.seed),
                        args.out, /*single_file=*/true);
        break;
    }
    return kExitOk;
}

struct SolveArgs {
    std::string domain;
    std::string dataset;
    std::string algo = "bfs";
    int jobs = 1;
    std::string csv;
    bool csv_requested = false;
    bool fixed_slot_order = false;
    bool quiet = false;
    bool show_solutions = false;
    std::optional<std::uint64_t> max_expansions;
    std::optional<double> max_seconds;
};

int cmd_solve(const SolveArgs &args) {
    bench::SolveOptions options;
    options.algo = bench::algo_from_name(args.algo);
    options.jobs = args.jobs;
    options.fixed_slot_order = args.fixed_slot_order;
    options.limits.max_expansions = args.max_expansions;
    options.limits.max_seconds = args.max_seconds;

    const bench::Domain domain = bench::domain_from_name(args.domain);
    bench::RunReport report = bench::run_suite(domain, args.dataset, options);
    if (!args.quiet)
        std::cout << bench::report_table(report);
    else
        std::printf("instances: %zu  correct: %zu  accuracy: %.2f%%\n",
                    report.records.size(), report.correct, 100.0 * report.accuracy);
    if (args.show_solutions) {
        // Crossword grids as 5 lines of letters, blocksworld plans one
        // action per line, prontoqa proofs as rule lines.
        for (const auto &record : report.records) {
            if (record.detail.empty()) continue;
            std::cout << record.id << ":\n" << record.detail;
        }
    }
    if (args.csv_requested) {
        const std::string csv = bench::report_csv(report);
        if (args.csv.empty() || args.csv == "-")
            std::cout << csv;
        else
            write_text(args.csv, csv);
    }
    return report.correct == report.records.size() && report.all_paths_valid
               ? kExitOk
               : kExitInaccurate;
}

struct CostsArgs {
    costmodel::CostParams params;
    costmodel::Pricing pricing;
    std::string approach;
    std::string dataset;
    std::string csv;
    bool csv_requested = false;
};

int cmd_costs(const CostsArgs &args) {
    if (!args.approach.empty() && !args.dataset.empty()) {
        const auto &approach = costmodel::approach_by_name(args.approach);
        const auto &dataset = costmodel::dataset_by_name(args.dataset);
        const long long calls = costmodel::projected_calls(approach, dataset, args.params);
        std::cout << calls << " ("
                  << costmodel::format_calls(calls, approach.exact_call_display) << ")\n";
        return kExitOk;
    }
    if (!args.approach.empty()) {
        const auto &approach = costmodel::approach_by_name(args.approach);
        const double cost = costmodel::total_cost(approach, args.pricing,
                                                  costmodel::builtin_datasets(), args.params);
        std::printf("%s: $%.2f over all four datasets\n", approach.name.c_str(), cost);
        return kExitOk;
    }
    if (args.csv_requested) {
        const std::string csv = costmodel::render_table_csv(args.params, args.pricing);
        if (args.csv.empty() || args.csv == "-")
            std::cout << csv;
        else
            write_text(args.csv, csv);
        return kExitOk;
    }
    std::cout << costmodel::render_table(args.params, args.pricing);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"searchkit: sound-and-complete state-space search over four benchmark "
                 "domains, with dataset generators and an LLM-call cost model"};
    app.require_subcommand(1);
    std::function<int()> action;

    GenerateArgs gen;
    auto *generate = app.add_subcommand(
        "generate", "Generate a benchmark dataset (instances, oracle answers, manifest)");
    generate->add_option("domain", gen.domain, "game24|crossword|blocksworld|prontoqa")
        ->required();
    generate->add_option("--count,-n", gen.count, "number of instances");
    generate->add_option("--seed,-s", gen.seed, "RNG seed (generation is pure in it)");
    generate->add_option("--out,-o", gen.out, "output file (game24, prontoqa) or directory")
        ->required();
    generate->add_option("--min", gen.min_value, "smallest sampled number (game24)");
    generate->add_option("--max", gen.max_value, "largest sampled number (game24)");
    generate->add_option("--blocks,-b", gen.blocks, "block count (blocksworld, 1-8)");
    generate->add_option("--depth,-d", gen.depth, "implication chain depth (prontoqa)");
    generate->add_option("--distractors", gen.distractors, "distractor rules (prontoqa)");
    generate->add_option("--slot-distractors", gen.slot_distractors,
                         "distractor words per slot (crossword)");
    generate->callback([&]() { action = [&]() { return cmd_generate(gen); }; });

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "Solve a dataset and report accuracy");
    solve_cmd->add_option("domain", solve.domain, "game24|crossword|blocksworld|prontoqa")
        ->required();
    solve_cmd->add_option("dataset", solve.dataset, "instance file or directory")->required();
    solve_cmd->add_option("--algo,-a", solve.algo, "bfs|dfs (prontoqa always proves)");
    solve_cmd->add_option("--jobs,-j", solve.jobs, "parallel instances")
        ->envname("SEARCHKIT_JOBS");
    auto *solve_csv = solve_cmd->add_option("--csv", solve.csv,
                                            "write per-instance CSV (stdout when no path)");
    solve_csv->expected(0, 1);
    solve_cmd->add_flag("--fixed-slot-order", solve.fixed_slot_order,
                        "crossword: assign only the lowest-index open slot");
    solve_cmd->add_flag("--quiet,-q", solve.quiet, "print only the summary line");
    solve_cmd->add_flag("--show-solutions", solve.show_solutions,
                        "print each solution (grid, plan, or proof)");
    std::uint64_t max_expansions = 0;
    double max_seconds = 0.0;
    auto *exp_opt = solve_cmd->add_option("--max-expansions", max_expansions,
                                          "per-instance expansion limit");
    auto *sec_opt = solve_cmd->add_option("--max-seconds", max_seconds,
                                          "per-instance wall-time limit");
    solve_cmd->callback([&, exp_opt, sec_opt]() {
        if (*exp_opt) solve.max_expansions = max_expansions;
        if (*sec_opt) solve.max_seconds = max_seconds;
        solve.csv_requested = solve_cmd->count("--csv") > 0;
        action = [&]() { return cmd_solve(solve); };
    });

    std::string enum_domain, enum_path;
    std::size_t enum_index = 0;
    auto *enumerate = app.add_subcommand("enumerate",
                                         "Count reachable states of one instance");
    enumerate->add_option("domain", enum_domain, "game24|crossword|blocksworld|prontoqa")
        ->required();
    enumerate->add_option("instance", enum_path, "instance file")->required();
    enumerate->add_option("--index,-i", enum_index,
                          "instance index within multi-instance files");
    enumerate->callback([&]() {
        action = [&]() {
            std::cout << bench::enumerate_states(bench::domain_from_name(enum_domain),
                                                 enum_path, enum_index)
                      << "\n";
            return kExitOk;
        };
    });

    CostsArgs costs;
    auto *costs_cmd = app.add_subcommand(
        "costs", "Project LLM calls, explored-state fractions, and dollar costs");
    costs_cmd->add_option("--branching,-b", costs.params.branching, "branching bound");
    costs_cmd->add_option("--trials,-T", costs.params.trials, "rollouts/trials");
    costs_cmd->add_option("--beam,-m", costs.params.beam, "beam size");
    costs_cmd->add_option("--input-rate", costs.pricing.input_per_million,
                          "dollars per 1M input tokens");
    costs_cmd->add_option("--output-rate", costs.pricing.output_per_million,
                          "dollars per 1M output tokens");
    costs_cmd->add_option("--tokens-in", costs.pricing.tokens_in, "input tokens per call");
    costs_cmd->add_option("--tokens-out", costs.pricing.tokens_out, "output tokens per call");
    costs_cmd->add_option("--approach", costs.approach, "single approach, e.g. RAP");
    costs_cmd->add_option("--dataset", costs.dataset, "single dataset, e.g. 24Game");
    auto *costs_csv = costs_cmd->add_option("--csv", costs.csv,
                                            "machine-readable cells (stdout when no path)");
    costs_csv->expected(0, 1);
    costs_cmd->callback([&, costs_cmd]() {
        costs.csv_requested = costs_cmd->count("--csv") > 0;
        action = [&]() { return cmd_costs(costs); };
    });

    std::string val_domain, val_instance, val_plan;
    std::size_t val_index = 0;
    auto *validate = app.add_subcommand("validate",
                                        "Replay a plan file against an instance");
    validate->add_option("domain", val_domain, "game24|crossword|blocksworld|prontoqa")
        ->required();
    validate->add_option("instance", val_instance, "instance file")->required();
    validate->add_option("plan", val_plan, "plan file, one action label per line")
        ->required();
    validate->add_option("--index,-i", val_index,
                         "instance index within multi-instance files");
    validate->callback([&]() {
        action = [&]() {
            std::string message;
            const bool ok = bench::validate_plan(bench::domain_from_name(val_domain),
                                                 val_instance, val_plan, val_index, &message);
            std::cout << (ok ? "VALID" : "INVALID") << ": " << message << "\n";
            return ok ? kExitOk : kExitInaccurate;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
