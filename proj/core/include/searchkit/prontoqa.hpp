#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "searchkit/search.hpp"

namespace searchkit::prontoqa {

// Facts are opaque normalized strings; a fact is negative iff it begins
// with the token "not " (purely lexical, no logical semantics).
using Fact = std::string;

// Trims and collapses internal whitespace. Throws ParseError on empty
// facts or a doubled "not not " prefix.
Fact normalize_fact(const std::string &text, int line_number = 0);
bool is_negative(const Fact &fact);
Fact negate(const Fact &fact);  // involution: negate(negate(f)) == f

struct Rule {
    Fact antecedent;
    Fact consequent;
    std::string label() const { return antecedent + " -> " + consequent; }
    bool operator==(const Rule &other) const = default;
};

using FactSet = std::set<Fact>;

std::string canonical_key(const FactSet &facts);

// One successor per rule whose antecedent is known and whose consequent is
// not yet known, in rule-list order; the new state adds the consequent.
std::vector<LabeledSuccessor<FactSet>> successors(const FactSet &facts,
                                                  const std::vector<Rule> &rules);

bool is_goal(const FactSet &facts, const Fact &target);

struct Task {
    std::vector<Fact> initial_facts;
    std::vector<Rule> rules;
    Fact query;
    std::optional<bool> gold;
};

// The problem holds references to task fields; task must outlive it.
Problem<FactSet> make_problem(const Task &task, const Fact &target);

enum class Answer { True, False, Unknown };
const char *to_string(Answer answer);

struct Verdict {
    Answer answer = Answer::Unknown;
    std::vector<Rule> proof;  // empty when Unknown
};

struct ProveStats {
    int searches = 0;  // number of BFS runs issued, at most 2
    std::uint64_t expanded = 0;
    std::uint64_t generated = 0;
};

// Two-phase prover: BFS toward the query; if that exhausts, BFS toward
// negate(query). The path's rule labels are the proof.
Verdict prove(const Task &task, const SearchLimits &limits = {},
              ProveStats *stats = nullptr);

// Independent replay: applies the proof rules from the initial facts
// without touching search bookkeeping and checks the proved fact is
// reached. Unknown verdicts validate iff the proof is empty.
bool validate_proof(const Task &task, const Verdict &verdict);

// Task file format, records separated by blank lines:
//   facts:        rules:                  query: <fact>
//   <fact>        <fact> -> <fact>        gold: true|false   (optional)
std::vector<Task> parse_tasks(const std::string &text);
std::string serialize_task(const Task &task);
std::string serialize_tasks(const std::vector<Task> &tasks);

}  // namespace searchkit::prontoqa
