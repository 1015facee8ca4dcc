#include "searchkit/game24.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "searchkit/errors.hpp"

namespace searchkit::game24 {

State make_state(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    return State{std::move(values)};
}

std::string canonical_key(const State &state) {
    std::string key;
    for (std::size_t i = 0; i < state.values.size(); ++i) {
        if (i > 0) key += ' ';
        key += state.values[i].str();
    }
    return key;
}

namespace {

std::string op_label(const Rational &lhs, char op, const Rational &rhs,
                     const Rational &result) {
    std::string s = lhs.str();
    s += ' ';
    s += op;
    s += ' ';
    s += rhs.str();
    s += " = ";
    s += result.str();
    return s;
}

void emit(std::vector<LabeledSuccessor<State>> &out,
          const std::vector<Rational> &rest, const Rational &lhs, char op,
          const Rational &rhs, const Rational &result) {
    std::vector<Rational> values = rest;
    values.push_back(result);
    out.push_back({op_label(lhs, op, rhs, result), make_state(std::move(values))});
}

}  // namespace

std::vector<LabeledSuccessor<State>> successors(const State &state) {
    std::vector<LabeledSuccessor<State>> out;
    const std::size_t n = state.values.size();
    if (n <= 1) return out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational &a = state.values[i];
            const Rational &b = state.values[j];
            std::vector<Rational> rest;
            rest.reserve(n - 2);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) rest.push_back(state.values[k]);
            emit(out, rest, a, '+', b, a + b);
            emit(out, rest, a, '*', b, a * b);
            emit(out, rest, a, '-', b, a - b);
            emit(out, rest, b, '-', a, b - a);
            if (!b.is_zero()) emit(out, rest, a, '/', b, a / b);
            if (!a.is_zero()) emit(out, rest, b, '/', a, b / a);
        }
    }
    return out;
}

bool is_goal(const State &state, const Rational &target) {
    return state.values.size() == 1 && state.values[0] == target;
}

Problem<State> make_problem(const Instance &instance) {
    if (instance.numbers.size() < 2 || instance.numbers.size() > 6)
        throw std::invalid_argument("24-game instance needs 2-6 numbers, got " +
                                    std::to_string(instance.numbers.size()));
    std::vector<Rational> values(instance.numbers.begin(), instance.numbers.end());
    Rational target(instance.target);
    Problem<State> problem;
    problem.initial = make_state(std::move(values));
    problem.successors = [](const State &s) { return successors(s); };
    problem.is_goal = [target](const State &s) { return is_goal(s, target); };
    problem.canonical_key = [](const State &s) { return canonical_key(s); };
    return problem;
}

SearchOutcome<State> solve(const Instance &instance, const SearchLimits &limits) {
    return bfs(make_problem(instance), limits);
}

Instance parse_instance_line(const std::string &line, int line_number) {
    Instance instance;
    std::string numbers_part = line;
    bool countdown = false;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
        countdown = true;
        std::string target_text = line.substr(0, colon);
        std::istringstream ts(target_text);
        if (!(ts >> instance.target))
            throw ParseError("bad Countdown target '" + target_text + "'", line_number);
        std::string extra;
        if (ts >> extra)
            throw ParseError("bad Countdown target '" + target_text + "'", line_number);
        numbers_part = line.substr(colon + 1);
    }
    std::istringstream ns(numbers_part);
    long long value = 0;
    while (ns >> value) instance.numbers.push_back(value);
    if (!ns.eof())
        throw ParseError("non-numeric token in instance '" + line + "'", line_number);
    if (countdown) {
        if (instance.numbers.size() < 2 || instance.numbers.size() > 6)
            throw ParseError("Countdown instance needs 2-6 numbers", line_number);
    } else if (instance.numbers.size() != 4) {
        throw ParseError("24-game instance needs exactly 4 numbers, got " +
                             std::to_string(instance.numbers.size()),
                         line_number);
    }
    return instance;
}

std::vector<Instance> parse_instances(const std::string &text) {
    std::vector<Instance> instances;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        instances.push_back(parse_instance_line(line, line_number));
    }
    return instances;
}

std::string format_instance(const Instance &instance) {
    std::string s;
    if (instance.target != 24 || instance.numbers.size() != 4)
        s = std::to_string(instance.target) + ":";
    for (long long n : instance.numbers) {
        if (!s.empty()) s += ' ';
        s += std::to_string(n);
    }
    return s;
}

}  // namespace searchkit::game24
