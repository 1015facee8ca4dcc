#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace searchkit {

// Generic uninformed search over an opaque state type. A domain plugs in
// three functions: an ordered successor generator with action labels, a
// goal test, and a canonical key (equal states collide, unequal states do
// not - the closed list is indexed by it).
template <typename State>
struct LabeledSuccessor {
    std::string action;
    State state;
};

template <typename State>
struct Problem {
    State initial;
    std::function<std::vector<LabeledSuccessor<State>>(const State &)> successors;
    std::function<bool(const State &)> is_goal;
    std::function<std::string(const State &)> canonical_key;
};

struct SearchLimits {
    std::optional<std::uint64_t> max_expansions;
    std::optional<double> max_seconds;
};

enum class SearchStatus { Solved, Exhausted, Limit };

inline const char *to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::Solved: return "SOLVED";
    case SearchStatus::Exhausted: return "EXHAUSTED";
    case SearchStatus::Limit: return "LIMIT";
    }
    return "?";
}

// One step of a solution path. The initial state carries no action.
template <typename State>
struct PathStep {
    std::optional<std::string> action;
    State state;
};

// A state is expanded when its successors are generated; generated counts
// every successor ever produced, duplicates included.
template <typename State>
struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<PathStep<State>> path;  // initial..goal, empty unless Solved
    std::uint64_t expanded = 0;
    std::uint64_t generated = 0;
};

struct ClosedEntry {
    std::optional<std::string> parent_key;  // empty for the initial state
    std::optional<std::string> action;
};

// Walks the closed record from goal_key back to the initial state (the one
// entry without a parent) and returns the chain reversed. A missing key or
// a cycle means the closed list is corrupt, which is a bug in the caller.
template <typename State>
std::vector<PathStep<State>> reconstruct_path(
    const std::unordered_map<std::string, ClosedEntry> &closed,
    const std::string &goal_key,
    const std::unordered_map<std::string, State> &states) {
    std::vector<PathStep<State>> path;
    std::optional<std::string> key = goal_key;
    while (key) {
        auto closed_it = closed.find(*key);
        auto state_it = states.find(*key);
        if (closed_it == closed.end() || state_it == states.end())
            throw std::logic_error("reconstruct_path: broken parent chain at key '" + *key + "'");
        path.push_back({closed_it->second.action, state_it->second});
        key = closed_it->second.parent_key;
        if (path.size() > closed.size())
            throw std::logic_error("reconstruct_path: parent chain does not terminate");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace detail {

// Shared BFS/DFS body. Entries are popped from the front (FIFO) or the
// back (LIFO); everything else is identical: duplicates are filtered at
// pop time against the closed list, the goal is tested at pop time right
// after the closed insertion, and only then is the state expanded. This
// ordering is what makes the expanded/generated counters meaningful:
// expanded == number of distinct keys whose successors were generated.
template <typename State>
SearchOutcome<State> closed_list_search(const Problem<State> &problem,
                                        const SearchLimits &limits,
                                        bool fifo) {
    struct Entry {
        State state;
        std::optional<std::string> parent_key;
        std::optional<std::string> action;
    };

    const auto start_time = std::chrono::steady_clock::now();
    auto out_of_time = [&]() {
        if (!limits.max_seconds) return false;
        std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start_time;
        return elapsed.count() > *limits.max_seconds;
    };

    SearchOutcome<State> out;
    std::deque<Entry> frontier;
    frontier.push_back({problem.initial, std::nullopt, std::nullopt});
    std::unordered_map<std::string, ClosedEntry> closed;
    std::unordered_map<std::string, State> states;

    while (!frontier.empty()) {
        Entry entry = fifo ? std::move(frontier.front()) : std::move(frontier.back());
        if (fifo)
            frontier.pop_front();
        else
            frontier.pop_back();

        std::string key = problem.canonical_key(entry.state);
        if (closed.count(key)) continue;
        closed.emplace(key, ClosedEntry{std::move(entry.parent_key), std::move(entry.action)});
        states.emplace(key, entry.state);

        if (problem.is_goal(entry.state)) {
            out.status = SearchStatus::Solved;
            out.path = reconstruct_path(closed, key, states);
            return out;
        }
        if ((limits.max_expansions && out.expanded >= *limits.max_expansions) ||
            out_of_time()) {
            out.status = SearchStatus::Limit;
            return out;
        }
        ++out.expanded;
        for (auto &succ : problem.successors(entry.state)) {
            ++out.generated;
            frontier.push_back({std::move(succ.state), key, std::move(succ.action)});
        }
    }
    out.status = SearchStatus::Exhausted;
    return out;
}

}  // namespace detail

// Breadth-first search. On Solved the path is shortest in actions (unit
// edge costs); on Exhausted no reachable state satisfies the goal.
template <typename State>
SearchOutcome<State> bfs(const Problem<State> &problem, const SearchLimits &limits = {}) {
    return detail::closed_list_search(problem, limits, /*fifo=*/true);
}

// Depth-first search: pops the most recently pushed entry, so the
// last-emitted successor of a state is explored first. Complete on finite
// spaces, but the path is not necessarily shortest.
template <typename State>
SearchOutcome<State> dfs(const Problem<State> &problem, const SearchLimits &limits = {}) {
    return detail::closed_list_search(problem, limits, /*fifo=*/false);
}

// Independent soundness harness: replays a path against the problem
// definition alone. Deliberately shares no bookkeeping with the search:
// each step must be found among successors(previous state), matched by
// both action label and canonical key, and the final state must satisfy
// the goal test.
template <typename State>
bool validate_path(const Problem<State> &problem, const std::vector<PathStep<State>> &path) {
    if (path.empty()) return false;
    if (path.front().action.has_value()) return false;
    if (problem.canonical_key(path.front().state) !=
        problem.canonical_key(problem.initial))
        return false;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!path[i].action.has_value()) return false;
        const std::string key = problem.canonical_key(path[i].state);
        bool matched = false;
        for (const auto &succ : problem.successors(path[i - 1].state)) {
            if (succ.action == *path[i].action &&
                problem.canonical_key(succ.state) == key) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return problem.is_goal(path.back().state);
}

}  // namespace searchkit
