#include "searchkit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "searchkit/blocksworld.hpp"
#include "searchkit/crossword.hpp"
#include "searchkit/datasets.hpp"
#include "searchkit/errors.hpp"
#include "searchkit/game24.hpp"
#include "searchkit/prontoqa.hpp"

namespace searchkit::bench {

Domain domain_from_name(const std::string &name) {
    if (name == "game24" || name == "24game") return Domain::Game24;
    if (name == "crossword") return Domain::Crossword;
    if (name == "blocksworld") return Domain::Blocksworld;
    if (name == "prontoqa") return Domain::Prontoqa;
    throw std::invalid_argument(
        "unknown domain '" + name +
        "' (expected game24, crossword, blocksworld, or prontoqa)");
}

const char *domain_name(Domain domain) {
    switch (domain) {
    case Domain::Game24: return "game24";
    case Domain::Crossword: return "crossword";
    case Domain::Blocksworld: return "blocksworld";
    case Domain::Prontoqa: return "prontoqa";
    }
    return "?";
}

Algo algo_from_name(const std::string &name) {
    if (name == "bfs") return Algo::Bfs;
    if (name == "dfs") return Algo::Dfs;
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected bfs or dfs)");
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

template <typename State>
SearchOutcome<State> run_search(const Problem<State> &problem, const SolveOptions &options) {
    return options.algo == Algo::Bfs ? bfs(problem, options.limits)
                                     : dfs(problem, options.limits);
}

// Reachability crawl that ignores the goal test; used by enumerate.
template <typename State>
std::size_t crawl_count(const Problem<State> &problem) {
    std::unordered_set<std::string> seen;
    std::vector<State> worklist;
    seen.insert(problem.canonical_key(problem.initial));
    worklist.push_back(problem.initial);
    while (!worklist.empty()) {
        State state = std::move(worklist.back());
        worklist.pop_back();
        for (auto &succ : problem.successors(state))
            if (seen.insert(problem.canonical_key(succ.state)).second)
                worklist.push_back(std::move(succ.state));
    }
    return seen.size();
}

std::vector<std::filesystem::path> sorted_files(const std::filesystem::path &dir,
                                                const std::string &extension) {
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error(dir.string() + " is not a directory (expected one holding " +
                                 extension + " files)");
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == extension)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no " + extension + " files under " + dir.string());
    return files;
}

void run_parallel(std::size_t task_count, int jobs,
                  const std::function<void(std::size_t)> &task) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= task_count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), task_count);
    threads.reserve(n);
    for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto &thread : threads) thread.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void finalize(RunReport &report) {
    for (const InstanceRecord &record : report.records) {
        if (record.correct) ++report.correct;
        report.total_expanded += record.expanded;
        report.total_generated += record.generated;
        report.total_seconds += record.seconds;
        if (!record.path_valid) report.all_paths_valid = false;
    }
    report.accuracy = report.records.empty()
                          ? 0.0
                          : static_cast<double>(report.correct) / report.records.size();
}

RunReport run_game24(const std::filesystem::path &dataset, const SolveOptions &options) {
    auto instances = game24::parse_instances(read_file(dataset));

    // Bundled oracle answers, when the generator emitted them next to the
    // instance file ("X.answers" or "X.txt.answers"); otherwise the oracle
    // runs inline.
    std::vector<int> answers;
    std::filesystem::path answers_path = dataset;
    answers_path += ".answers";
    if (!std::filesystem::exists(answers_path)) {
        answers_path = dataset;
        answers_path.replace_extension(".answers");
    }
    if (std::filesystem::exists(answers_path)) {
        std::istringstream in(read_file(answers_path));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) answers.push_back(line[0] == '1');
        if (answers.size() != instances.size())
            throw std::runtime_error(answers_path.string() +
                                     " does not match the instance count");
    }

    RunReport report;
    report.records.resize(instances.size());
    run_parallel(instances.size(), options.jobs, [&](std::size_t i) {
        Timer timer;
        InstanceRecord &record = report.records[i];
        record.id = game24::format_instance(instances[i]);
        auto problem = game24::make_problem(instances[i]);
        auto outcome = run_search(problem, options);
        record.status = to_string(outcome.status);
        record.expanded = outcome.expanded;
        record.generated = outcome.generated;
        const bool solvable =
            i < answers.size() ? answers[i] != 0 : datasets::oracle_game24(instances[i]);
        if (outcome.status == SearchStatus::Solved) {
            record.path_valid = validate_path(problem, outcome.path);
            record.plan_length = static_cast<long long>(outcome.path.size()) - 1;
            record.correct = solvable && record.path_valid;
        } else {
            record.path_valid = true;  // nothing to validate
            record.correct = outcome.status == SearchStatus::Exhausted && !solvable;
        }
        record.seconds = timer.seconds();
    });
    return report;
}

RunReport run_crossword(const std::filesystem::path &dataset, const SolveOptions &options) {
    auto files = sorted_files(dataset, ".xw");
    std::vector<std::string> texts;
    texts.reserve(files.size());
    for (const auto &file : files) texts.push_back(read_file(file));

    RunReport report;
    report.records.resize(files.size());
    run_parallel(files.size(), options.jobs, [&](std::size_t i) {
        Timer timer;
        InstanceRecord &record = report.records[i];
        record.id = files[i].filename().string();
        crossword::Spec spec = crossword::parse_spec(texts[i]);
        auto problem = crossword::make_problem(spec, options.fixed_slot_order);
        auto outcome = run_search(problem, options);
        record.status = to_string(outcome.status);
        record.expanded = outcome.expanded;
        record.generated = outcome.generated;
        if (outcome.status == SearchStatus::Solved) {
            record.path_valid = validate_path(problem, outcome.path);
            record.plan_length = static_cast<long long>(outcome.path.size()) - 1;
            record.correct = record.path_valid &&
                             crossword::is_goal(spec, outcome.path.back().state);
            record.detail = crossword::render_grid(
                crossword::grid_of(spec, outcome.path.back().state));
        } else {
            record.path_valid = true;
        }
        record.seconds = timer.seconds();
    });
    return report;
}

RunReport run_blocksworld(const std::filesystem::path &dataset, const SolveOptions &options) {
    auto files = sorted_files(dataset, ".pddl");
    std::vector<std::string> texts;
    texts.reserve(files.size());
    for (const auto &file : files) texts.push_back(read_file(file));

    RunReport report;
    report.records.resize(files.size());
    run_parallel(files.size(), options.jobs, [&](std::size_t i) {
        Timer timer;
        InstanceRecord &record = report.records[i];
        record.id = files[i].filename().string();
        auto instance = blocksworld::parse_problem(texts[i]);
        auto problem = blocksworld::make_problem(instance);
        auto outcome = run_search(problem, options);
        record.status = to_string(outcome.status);
        record.expanded = outcome.expanded;
        record.generated = outcome.generated;
        if (outcome.status == SearchStatus::Solved) {
            record.path_valid = validate_path(problem, outcome.path);
            record.plan_length = static_cast<long long>(outcome.path.size()) - 1;
            record.correct = record.path_valid;
            std::string plan;
            for (const auto &step : outcome.path)
                if (step.action) plan += *step.action + "\n";
            record.detail = std::move(plan);
        } else {
            record.path_valid = true;
        }
        record.seconds = timer.seconds();
    });
    return report;
}

RunReport run_prontoqa(const std::filesystem::path &dataset, const SolveOptions &options) {
    auto tasks = prontoqa::parse_tasks(read_file(dataset));
    RunReport report;
    report.records.resize(tasks.size());
    run_parallel(tasks.size(), options.jobs, [&](std::size_t i) {
        Timer timer;
        InstanceRecord &record = report.records[i];
        record.id = "task-" + std::to_string(i);
        prontoqa::ProveStats stats;
        auto verdict = prontoqa::prove(tasks[i], options.limits, &stats);
        record.status = prontoqa::to_string(verdict.answer);
        record.expanded = stats.expanded;
        record.generated = stats.generated;
        record.plan_length = static_cast<long long>(verdict.proof.size());
        record.path_valid = prontoqa::validate_proof(tasks[i], verdict);
        if (tasks[i].gold.has_value()) {
            const bool expected = *tasks[i].gold;
            const bool answered = verdict.answer == prontoqa::Answer::True    ? true
                                  : verdict.answer == prontoqa::Answer::False ? false
                                                                              : !expected;
            record.correct = verdict.answer != prontoqa::Answer::Unknown &&
                             answered == expected && record.path_valid;
        } else {
            record.correct = record.path_valid;
        }
        std::string proof;
        for (const auto &rule : verdict.proof) proof += rule.label() + "\n";
        record.detail = std::move(proof);
        record.seconds = timer.seconds();
    });
    return report;
}

}  // namespace

RunReport run_suite(Domain domain, const std::filesystem::path &dataset,
                    const SolveOptions &options) {
    Timer timer;
    RunReport report;
    switch (domain) {
    case Domain::Game24: report = run_game24(dataset, options); break;
    case Domain::Crossword: report = run_crossword(dataset, options); break;
    case Domain::Blocksworld: report = run_blocksworld(dataset, options); break;
    case Domain::Prontoqa: report = run_prontoqa(dataset, options); break;
    }
    finalize(report);
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::string report_table(const RunReport &report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-24s %-10s %-8s %6s %10s %11s %9s\n", "instance",
                  "status", "correct", "plan", "expanded", "generated", "seconds");
    out << line;
    for (const auto &record : report.records) {
        std::snprintf(line, sizeof line, "%-24s %-10s %-8s %6lld %10llu %11llu %9.4f\n",
                      record.id.c_str(), record.status.c_str(),
                      record.correct ? "yes" : "NO", record.plan_length,
                      static_cast<unsigned long long>(record.expanded),
                      static_cast<unsigned long long>(record.generated), record.seconds);
        out << line;
    }
    std::snprintf(line, sizeof line,
                  "instances: %zu  correct: %zu  accuracy: %.2f%%  expanded: %llu  "
                  "generated: %llu  solve time: %.3fs  elapsed: %.3fs\n",
                  report.records.size(), report.correct, 100.0 * report.accuracy,
                  static_cast<unsigned long long>(report.total_expanded),
                  static_cast<unsigned long long>(report.total_generated),
                  report.total_seconds, report.elapsed_seconds);
    out << line;
    return out.str();
}

std::string report_csv(const RunReport &report) {
    std::ostringstream out;
    out << "instance,status,correct,path_valid,plan_length,expanded,generated,seconds\n";
    for (const auto &record : report.records) {
        char line[256];
        std::snprintf(line, sizeof line, "%s,%s,%d,%d,%lld,%llu,%llu,%.6f\n",
                      record.id.c_str(), record.status.c_str(), record.correct ? 1 : 0,
                      record.path_valid ? 1 : 0, record.plan_length,
                      static_cast<unsigned long long>(record.expanded),
                      static_cast<unsigned long long>(record.generated), record.seconds);
        out << line;
    }
    return out.str();
}

std::size_t enumerate_states(Domain domain, const std::filesystem::path &instance_path,
                             std::size_t index) {
    switch (domain) {
    case Domain::Game24: {
        auto instances = game24::parse_instances(read_file(instance_path));
        if (index >= instances.size())
            throw std::out_of_range("instance index out of range");
        return crawl_count(game24::make_problem(instances[index]));
    }
    case Domain::Crossword: {
        crossword::Spec spec = crossword::parse_spec(read_file(instance_path));
        return crawl_count(crossword::make_problem(spec));
    }
    case Domain::Blocksworld: {
        auto instance = blocksworld::parse_problem(read_file(instance_path));
        return blocksworld::count_reachable(instance.init);
    }
    case Domain::Prontoqa: {
        auto tasks = prontoqa::parse_tasks(read_file(instance_path));
        if (index >= tasks.size()) throw std::out_of_range("task index out of range");
        return crawl_count(prontoqa::make_problem(tasks[index], tasks[index].query));
    }
    }
    throw std::logic_error("unreachable");
}

bool validate_plan(Domain domain, const std::filesystem::path &instance_path,
                   const std::filesystem::path &plan_path, std::size_t index,
                   std::string *message) {
    std::vector<std::string> actions;
    {
        std::istringstream in(read_file(plan_path));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty() && line[0] != '#') actions.push_back(line);
        }
    }

    auto set_message = [&](const std::string &text) {
        if (message) *message = text;
    };

    // Replays by matching action labels against the successor lists; a
    // plan is valid iff every step matches and the final state is a goal.
    auto replay = [&](auto problem) {
        auto state = problem.initial;
        std::vector<PathStep<decltype(state)>> path;
        path.push_back({std::nullopt, state});
        for (const std::string &action : actions) {
            bool stepped = false;
            for (auto &succ : problem.successors(state)) {
                if (succ.action == action) {
                    state = std::move(succ.state);
                    path.push_back({action, state});
                    stepped = true;
                    break;
                }
            }
            if (!stepped) {
                set_message("no applicable action matches '" + action + "'");
                return false;
            }
        }
        if (!problem.is_goal(state)) {
            set_message("plan replays but the final state is not a goal");
            return false;
        }
        if (!validate_path(problem, path)) {
            set_message("path failed independent validation");
            return false;
        }
        set_message("plan valid (" + std::to_string(actions.size()) + " steps)");
        return true;
    };

    switch (domain) {
    case Domain::Game24: {
        auto instances = game24::parse_instances(read_file(instance_path));
        if (index >= instances.size())
            throw std::out_of_range("instance index out of range");
        return replay(game24::make_problem(instances[index]));
    }
    case Domain::Crossword: {
        crossword::Spec spec = crossword::parse_spec(read_file(instance_path));
        return replay(crossword::make_problem(spec));
    }
    case Domain::Blocksworld: {
        auto instance = blocksworld::parse_problem(read_file(instance_path));
        return replay(blocksworld::make_problem(instance));
    }
    case Domain::Prontoqa: {
        auto tasks = prontoqa::parse_tasks(read_file(instance_path));
        if (index >= tasks.size()) throw std::out_of_range("task index out of range");
        const auto &task = tasks[index];
        // A proof may establish either the query or its negation.
        if (replay(prontoqa::make_problem(task, task.query))) {
            set_message("proof establishes the query");
            return true;
        }
        if (replay(prontoqa::make_problem(task, prontoqa::negate(task.query)))) {
            set_message("proof establishes the negated query");
            return true;
        }
        return false;
    }
    }
    throw std::logic_error("unreachable");
}

}  // namespace searchkit::bench
