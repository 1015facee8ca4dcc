#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "searchkit/search.hpp"

namespace searchkit::crossword {

inline constexpr int kSize = 5;
inline constexpr int kSlots = 10;  // slots 0-4 are rows R0-R4, 5-9 are columns C0-C4

// Candidate answers per slot. Loading silently drops words that are not
// exactly 5 letters; an empty candidate list after filtering is an error.
struct Spec {
    std::array<std::vector<std::string>, kSize> row_candidates;
    std::array<std::vector<std::string>, kSize> col_candidates;
};

const std::vector<std::string> &candidates(const Spec &spec, int slot);
std::string slot_name(int slot);  // "R0".."R4", "C0".."C4"

// Partial assignment of candidate indices to slots; -1 means unassigned.
// Consistency (crossing letters agree) is an invariant maintained by the
// successor function.
struct State {
    std::array<int, kSlots> assignment;
    State() { assignment.fill(-1); }
};

// Fixed-order rendering "R0=idx|...|C4=idx" with unassigned slots as ".".
std::string canonical_key(const State &state);

bool consistent_placement(const Spec &spec, const State &state, int slot,
                          const std::string &word);

// Extends the assignment by one slot: every unassigned slot x every
// candidate of that slot whose letters agree with all assigned crossing
// slots. Labels look like "R2 := motor". With fixed_slot_order only the
// lowest-index unassigned slot is considered, which shrinks branching
// without losing completeness (any prefix of a consistent full assignment
// is consistent in any slot order).
std::vector<LabeledSuccessor<State>> successors(const Spec &spec, const State &state,
                                                bool fixed_slot_order = false);

// All 10 slots assigned; additionally re-checks that every induced row and
// column word is a member of its candidate list.
bool is_goal(const Spec &spec, const State &state);

using Grid = std::array<std::array<std::optional<char>, kSize>, kSize>;

// Letters forced by the assigned slots; consistent states never conflict.
Grid grid_of(const Spec &spec, const State &state);

// 5 lines of 5 characters, '.' for empty cells.
std::string render_grid(const Grid &grid);

// The returned problem holds a reference to spec; spec must outlive it.
Problem<State> make_problem(const Spec &spec, bool fixed_slot_order = false);

// Spec file format: ten labeled blocks h0..h4, v0..v4, one candidate word
// per line. Blank lines and '#' comments are ignored.
Spec parse_spec(const std::string &text);
std::string serialize_spec(const Spec &spec);

}  // namespace searchkit::crossword
