#include "searchkit/crossword.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "searchkit/errors.hpp"

namespace searchkit::crossword {

const std::vector<std::string> &candidates(const Spec &spec, int slot) {
    return slot < kSize ? spec.row_candidates[slot] : spec.col_candidates[slot - kSize];
}

std::string slot_name(int slot) {
    return (slot < kSize ? "R" : "C") + std::to_string(slot % kSize);
}

std::string canonical_key(const State &state) {
    std::string key;
    for (int slot = 0; slot < kSlots; ++slot) {
        if (slot > 0) key += '|';
        key += slot_name(slot);
        key += '=';
        key += state.assignment[slot] < 0 ? "·" : std::to_string(state.assignment[slot]);
    }
    return key;
}

bool consistent_placement(const Spec &spec, const State &state, int slot,
                          const std::string &word) {
    // Row i crosses column j at letter positions (j, i).
    if (slot < kSize) {
        const int row = slot;
        for (int col = 0; col < kSize; ++col) {
            int assigned = state.assignment[kSize + col];
            if (assigned < 0) continue;
            if (word[col] != spec.col_candidates[col][assigned][row]) return false;
        }
    } else {
        const int col = slot - kSize;
        for (int row = 0; row < kSize; ++row) {
            int assigned = state.assignment[row];
            if (assigned < 0) continue;
            if (word[row] != spec.row_candidates[row][assigned][col]) return false;
        }
    }
    return true;
}

std::vector<LabeledSuccessor<State>> successors(const Spec &spec, const State &state,
                                                bool fixed_slot_order) {
    std::vector<LabeledSuccessor<State>> out;
    for (int slot = 0; slot < kSlots; ++slot) {
        if (state.assignment[slot] >= 0) continue;
        const auto &words = candidates(spec, slot);
        for (int idx = 0; idx < static_cast<int>(words.size()); ++idx) {
            if (!consistent_placement(spec, state, slot, words[idx])) continue;
            State next = state;
            next.assignment[slot] = idx;
            out.push_back({slot_name(slot) + " := " + words[idx], std::move(next)});
        }
        if (fixed_slot_order) break;
    }
    return out;
}

bool is_goal(const Spec &spec, const State &state) {
    // All ten slots assigned to in-range candidates.
    for (int slot = 0; slot < kSlots; ++slot) {
        const int idx = state.assignment[slot];
        if (idx < 0 || idx >= static_cast<int>(candidates(spec, slot).size())) return false;
    }
    // Defensive re-check that the induced grid is one word from each
    // candidate list: with index-based assignments that reduces to every
    // crossing cell agreeing between its row and column word. Total on
    // arbitrary states, consistent or not.
    for (int row = 0; row < kSize; ++row) {
        const std::string &row_word = spec.row_candidates[row][state.assignment[row]];
        for (int col = 0; col < kSize; ++col) {
            const std::string &col_word =
                spec.col_candidates[col][state.assignment[kSize + col]];
            if (row_word[col] != col_word[row]) return false;
        }
    }
    return true;
}

Grid grid_of(const Spec &spec, const State &state) {
    Grid grid{};
    for (int row = 0; row < kSize; ++row) {
        int idx = state.assignment[row];
        if (idx < 0) continue;
        const std::string &word = spec.row_candidates[row][idx];
        for (int col = 0; col < kSize; ++col) grid[row][col] = word[col];
    }
    for (int col = 0; col < kSize; ++col) {
        int idx = state.assignment[kSize + col];
        if (idx < 0) continue;
        const std::string &word = spec.col_candidates[col][idx];
        for (int row = 0; row < kSize; ++row) {
            if (grid[row][col] && *grid[row][col] != word[row])
                throw std::logic_error("grid_of: inconsistent state");
            grid[row][col] = word[row];
        }
    }
    return grid;
}

std::string render_grid(const Grid &grid) {
    std::string s;
    for (int row = 0; row < kSize; ++row) {
        for (int col = 0; col < kSize; ++col) s += grid[row][col].value_or('.');
        s += '\n';
    }
    return s;
}

Problem<State> make_problem(const Spec &spec, bool fixed_slot_order) {
    Problem<State> problem;
    problem.initial = State{};
    problem.successors = [&spec, fixed_slot_order](const State &s) {
        return successors(spec, s, fixed_slot_order);
    };
    problem.is_goal = [&spec](const State &s) { return is_goal(spec, s); };
    problem.canonical_key = [](const State &s) { return canonical_key(s); };
    return problem;
}

namespace {

int block_slot(const std::string &header) {
    if (header.size() != 2) return -1;
    int i = header[1] - '0';
    if (i < 0 || i >= kSize) return -1;
    if (header[0] == 'h') return i;
    if (header[0] == 'v') return kSize + i;
    return -1;
}

}  // namespace

Spec parse_spec(const std::string &text) {
    Spec spec;
    std::array<bool, kSlots> seen{};
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    int slot = -1;
    while (std::getline(in, line)) {
        ++line_number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        const std::size_t start = line.find_first_not_of(" \t");
        line.erase(0, start == std::string::npos ? line.size() : start);
        if (line.empty() || line[0] == '#') continue;
        if (line.back() == ':') {
            slot = block_slot(line.substr(0, line.size() - 1));
            if (slot < 0)
                throw ParseError("unknown block header '" + line + "' (expect h0:..h4:, v0:..v4:)",
                                 line_number);
            seen[slot] = true;
            continue;
        }
        if (slot < 0) throw ParseError("candidate word before any block header", line_number);
        std::string word;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c)))
                throw ParseError("expected one candidate word per line, got '" + line + "'",
                                 line_number);
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw ParseError("candidate words must be alphabetic, got '" + line + "'",
                                 line_number);
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (word.size() != kSize) continue;  // not exactly 5 letters: skip it
        auto &list = slot < kSize ? spec.row_candidates[slot]
                                  : spec.col_candidates[slot - kSize];
        list.push_back(word);
    }
    for (int s = 0; s < kSlots; ++s) {
        if (!seen[s]) throw ParseError("missing block '" + std::string(s < kSize ? "h" : "v") +
                                       std::to_string(s % kSize) + "'");
        if (candidates(spec, s).empty())
            throw ParseError("slot " + slot_name(s) + " has no 5-letter candidates");
    }
    return spec;
}

std::string serialize_spec(const Spec &spec) {
    std::string out;
    for (int slot = 0; slot < kSlots; ++slot) {
        out += slot < kSize ? "h" : "v";
        out += std::to_string(slot % kSize);
        out += ":\n";
        for (const auto &word : candidates(spec, slot)) {
            out += word;
            out += '\n';
        }
    }
    return out;
}

}  // namespace searchkit::crossword
