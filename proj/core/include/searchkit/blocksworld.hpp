#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "searchkit/search.hpp"

namespace searchkit::blocksworld {

// Ground atoms over a fixed STRIPS domain. Atom grammar:
//   "arm-empty" | "clear B" | "on-table B" | "holding B" | "on A B"
// Block names are arbitrary non-whitespace tokens without '(' or ')'.
// Note "on A B" (A rests on B) is a different predicate than "on-table A".
struct Atom {
    enum class Kind { ArmEmpty, Clear, OnTable, Holding, On };
    Kind kind;
    std::string a;  // first argument, empty for arm-empty
    std::string b;  // second argument, only for on

    std::string str() const;
};

// Throws ParseError on unknown predicates, arity mismatches, or reserved
// characters in block names.
Atom parse_atom(const std::string &text, int line_number = 0);

// A set of atoms, validated at construction: exactly one of arm-empty or a
// single holding; every mentioned block rests in exactly one place (table,
// another block, or the arm); at most one block on any block and nothing on
// a held block; stacks ground out at the table (no cycles); "clear B" holds
// exactly when nothing is on B and B is not held.
struct State {
    std::set<std::string> atoms;
    bool contains(const std::string &atom) const { return atoms.count(atom) > 0; }
};

// Validates and constructs; malformed atoms and ill-formed states are
// rejected here, never inside successor generation.
State make_state(const std::vector<std::string> &atoms);

// Throws std::invalid_argument with a description when state is ill-formed.
void check_well_formed(const State &state);
bool is_well_formed(const State &state);

std::string canonical_key(const State &state);  // sorted ", "-joined atoms

// Goals are plain atom sets; satisfaction is subset containment, so goals
// need not describe a complete state.
struct Goal {
    std::set<std::string> atoms;
};

// Every applicable ground action, in schema order (pick-up, unstack,
// put-down, stack) with lexicographic arguments inside each schema.
// Labels are PDDL-style, e.g. "(unstack a b)".
std::vector<LabeledSuccessor<State>> successors(const State &state);

bool is_goal(const State &state, const Goal &goal);

struct Instance {
    std::string name;
    std::vector<std::string> objects;
    State init;
    Goal goal;
};

// PDDL-subset problem files:
//   (define (problem NAME) (:objects b1 b2 ...) (:init (atom) ...)
//           (:goal (and (atom) ...)))
// Keywords are case-insensitive, whitespace is free-form, a (:domain ...)
// entry is accepted and ignored, and a goal may omit the (and ...) wrapper.
Instance parse_problem(const std::string &text);
std::string serialize_problem(const Instance &instance);

Problem<State> make_problem(const Instance &instance);

// Size of the state set reachable from init (exhaustive closed-list crawl
// that does not go through the generic search code).
std::size_t count_reachable(const State &init);

}  // namespace searchkit::blocksworld
