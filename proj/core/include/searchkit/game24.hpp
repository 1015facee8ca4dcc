#pragma once

#include <string>
#include <vector>

#include "searchkit/rational.hpp"
#include "searchkit/search.hpp"

namespace searchkit::game24 {

// A state is a multiset of exact rationals, kept in non-decreasing order
// so that permutations of the same numbers share one canonical key.
struct State {
    std::vector<Rational> values;
};

State make_state(std::vector<Rational> values);

// Canonical-order reduced-fraction rendering, e.g. "-1 2/3 24".
std::string canonical_key(const State &state);

// For every index pair i<j with values a<=b, combines the pair with each
// arithmetic operation and keeps the rest of the multiset: a+b, a*b, a-b,
// b-a, a/b (skipped when b=0), b/a (skipped when a=0). A single number has
// no successors. Labels render the operation, e.g. "3 + 5 = 8".
std::vector<LabeledSuccessor<State>> successors(const State &state);

bool is_goal(const State &state, const Rational &target);

// Four integers for the classic game; Countdown relaxes to 2-6 numbers
// and an arbitrary target.
struct Instance {
    std::vector<long long> numbers;
    long long target = 24;
};

// Throws std::invalid_argument when the number count is outside 2-6.
Problem<State> make_problem(const Instance &instance);

// BFS over the instance. Solved iff some formula using every number
// exactly once evaluates to the target; the path's action labels are a
// witness operation sequence.
SearchOutcome<State> solve(const Instance &instance, const SearchLimits &limits = {});

// One instance per line: four space-separated integers, or the Countdown
// form "target: n1 n2 ... nk" (2-6 numbers).
Instance parse_instance_line(const std::string &line, int line_number = 0);
std::vector<Instance> parse_instances(const std::string &text);
std::string format_instance(const Instance &instance);

}  // namespace searchkit::game24
