#include "searchkit/prontoqa.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "searchkit/errors.hpp"

namespace searchkit::prontoqa {

Fact normalize_fact(const std::string &text, int line_number) {
    Fact fact;
    bool in_space = true;  // swallows leading whitespace
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !fact.empty()) fact += ' ';
        in_space = false;
        fact += c;
    }
    if (fact.empty()) throw ParseError("empty fact", line_number);
    if (fact.rfind("not not ", 0) == 0)
        throw ParseError("fact '" + fact + "' has a doubled negation prefix", line_number);
    return fact;
}

bool is_negative(const Fact &fact) { return fact.rfind("not ", 0) == 0; }

Fact negate(const Fact &fact) {
    return is_negative(fact) ? fact.substr(4) : "not " + fact;
}

std::string canonical_key(const FactSet &facts) {
    std::string key;
    for (const Fact &fact : facts) {
        if (!key.empty()) key += '\n';
        key += fact;
    }
    return key;
}

std::vector<LabeledSuccessor<FactSet>> successors(const FactSet &facts,
                                                  const std::vector<Rule> &rules) {
    std::vector<LabeledSuccessor<FactSet>> out;
    for (const Rule &rule : rules) {
        if (!facts.count(rule.antecedent) || facts.count(rule.consequent)) continue;
        FactSet next = facts;
        next.insert(rule.consequent);
        out.push_back({rule.label(), std::move(next)});
    }
    return out;
}

bool is_goal(const FactSet &facts, const Fact &target) { return facts.count(target) > 0; }

Problem<FactSet> make_problem(const Task &task, const Fact &target) {
    Problem<FactSet> problem;
    problem.initial = FactSet(task.initial_facts.begin(), task.initial_facts.end());
    problem.successors = [&rules = task.rules](const FactSet &s) {
        return successors(s, rules);
    };
    problem.is_goal = [target](const FactSet &s) { return is_goal(s, target); };
    problem.canonical_key = [](const FactSet &s) { return canonical_key(s); };
    return problem;
}

const char *to_string(Answer answer) {
    switch (answer) {
    case Answer::True: return "TRUE";
    case Answer::False: return "FALSE";
    case Answer::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

std::vector<Rule> proof_from_path(const Task &task,
                                  const std::vector<PathStep<FactSet>> &path) {
    std::vector<Rule> proof;
    for (const auto &step : path) {
        if (!step.action) continue;
        auto it = std::find_if(task.rules.begin(), task.rules.end(),
                               [&](const Rule &r) { return r.label() == *step.action; });
        if (it == task.rules.end())
            throw std::logic_error("proof step '" + *step.action + "' matches no rule");
        proof.push_back(*it);
    }
    return proof;
}

}  // namespace

Verdict prove(const Task &task, const SearchLimits &limits, ProveStats *stats) {
    ProveStats local;
    auto run = [&](const Fact &target) {
        ++local.searches;
        auto outcome = bfs(make_problem(task, target), limits);
        local.expanded += outcome.expanded;
        local.generated += outcome.generated;
        return outcome;
    };

    Verdict verdict;
    auto positive = run(task.query);
    if (positive.status == SearchStatus::Solved) {
        verdict.answer = Answer::True;
        verdict.proof = proof_from_path(task, positive.path);
    } else {
        auto negative = run(negate(task.query));
        if (negative.status == SearchStatus::Solved) {
            verdict.answer = Answer::False;
            verdict.proof = proof_from_path(task, negative.path);
        }
    }
    if (stats) *stats = local;
    return verdict;
}

bool validate_proof(const Task &task, const Verdict &verdict) {
    if (verdict.answer == Answer::Unknown) return verdict.proof.empty();
    FactSet facts(task.initial_facts.begin(), task.initial_facts.end());
    for (const Rule &rule : verdict.proof) {
        if (std::find(task.rules.begin(), task.rules.end(), rule) == task.rules.end())
            return false;
        if (!facts.count(rule.antecedent)) return false;
        if (!facts.insert(rule.consequent).second) return false;
    }
    const Fact proved = verdict.answer == Answer::True ? task.query : negate(task.query);
    return facts.count(proved) > 0;
}

namespace {

Rule parse_rule_line(const std::string &line, int line_number) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
        throw ParseError("rule line needs 'X -> Y', got '" + line + "'", line_number);
    if (line.find("->", arrow + 2) != std::string::npos)
        throw ParseError("rule line has more than one '->': '" + line + "'", line_number);
    return {normalize_fact(line.substr(0, arrow), line_number),
            normalize_fact(line.substr(arrow + 2), line_number)};
}

}  // namespace

std::vector<Task> parse_tasks(const std::string &text) {
    std::vector<Task> tasks;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;

    enum class Section { None, Facts, Rules };
    Section section = Section::None;
    std::optional<Task> current;
    bool saw_query = false;

    auto flush = [&]() {
        if (!current) return;
        if (!saw_query) throw ParseError("task without a 'query:' line", line_number);
        tasks.push_back(std::move(*current));
        current.reset();
        section = Section::None;
        saw_query = false;
    };

    while (std::getline(in, line)) {
        ++line_number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;
        if (!current) current.emplace();
        if (line == "facts:") {
            section = Section::Facts;
        } else if (line == "rules:") {
            section = Section::Rules;
        } else if (line.rfind("query:", 0) == 0) {
            current->query = normalize_fact(line.substr(6), line_number);
            saw_query = true;
            section = Section::None;
        } else if (line.rfind("gold:", 0) == 0) {
            std::string value = normalize_fact(line.substr(5), line_number);
            if (value == "true")
                current->gold = true;
            else if (value == "false")
                current->gold = false;
            else
                throw ParseError("gold must be 'true' or 'false', got '" + value + "'",
                                 line_number);
            section = Section::None;
        } else if (section == Section::Facts) {
            current->initial_facts.push_back(normalize_fact(line, line_number));
        } else if (section == Section::Rules) {
            current->rules.push_back(parse_rule_line(line, line_number));
        } else {
            throw ParseError("unexpected line '" + line + "'", line_number);
        }
    }
    flush();
    return tasks;
}

std::string serialize_task(const Task &task) {
    std::string out = "facts:\n";
    for (const Fact &fact : task.initial_facts) out += fact + "\n";
    out += "rules:\n";
    for (const Rule &rule : task.rules) out += rule.label() + "\n";
    out += "query: " + task.query + "\n";
    if (task.gold) out += std::string("gold: ") + (*task.gold ? "true" : "false") + "\n";
    return out;
}

std::string serialize_tasks(const std::vector<Task> &tasks) {
    std::string out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (i > 0) out += '\n';
        out += serialize_task(tasks[i]);
    }
    return out;
}

}  // namespace searchkit::prontoqa
