#include "searchkit/blocksworld.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "searchkit/errors.hpp"

namespace searchkit::blocksworld {

std::string Atom::str() const {
    switch (kind) {
    case Kind::ArmEmpty: return "arm-empty";
    case Kind::Clear: return "clear " + a;
    case Kind::OnTable: return "on-table " + a;
    case Kind::Holding: return "holding " + a;
    case Kind::On: return "on " + a + " " + b;
    }
    return "";
}

namespace {

std::vector<std::string> split_tokens(const std::string &text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

void check_block_name(const std::string &name, int line_number) {
    if (name.empty()) throw ParseError("empty block name", line_number);
    if (name.find_first_of("()") != std::string::npos)
        throw ParseError("block name '" + name + "' contains a reserved character", line_number);
}

}  // namespace

Atom parse_atom(const std::string &text, int line_number) {
    std::vector<std::string> tokens = split_tokens(text);
    if (tokens.empty()) throw ParseError("empty atom", line_number);
    // Predicate names are case-insensitive (PDDL style); block names are
    // kept verbatim.
    std::string &pred = tokens[0];
    std::transform(pred.begin(), pred.end(), pred.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    auto expect_arity = [&](std::size_t arity) {
        if (tokens.size() != arity + 1)
            throw ParseError("predicate '" + pred + "' expects " + std::to_string(arity) +
                                 " argument(s), got " + std::to_string(tokens.size() - 1) +
                                 " in '" + text + "'",
                             line_number);
        for (std::size_t i = 1; i < tokens.size(); ++i) check_block_name(tokens[i], line_number);
    };
    if (pred == "arm-empty") {
        expect_arity(0);
        return {Atom::Kind::ArmEmpty, "", ""};
    }
    if (pred == "clear") {
        expect_arity(1);
        return {Atom::Kind::Clear, tokens[1], ""};
    }
    if (pred == "on-table") {
        expect_arity(1);
        return {Atom::Kind::OnTable, tokens[1], ""};
    }
    if (pred == "holding") {
        expect_arity(1);
        return {Atom::Kind::Holding, tokens[1], ""};
    }
    if (pred == "on") {
        expect_arity(2);
        if (tokens[1] == tokens[2])
            throw ParseError("block '" + tokens[1] + "' cannot be on itself", line_number);
        return {Atom::Kind::On, tokens[1], tokens[2]};
    }
    throw ParseError("unknown predicate '" + pred + "' in '" + text + "'", line_number);
}

namespace {

// Structured view of a state, extracted once per successors() call.
struct StateView {
    std::optional<std::string> held;
    bool arm_empty = false;
    std::set<std::string> clear;
    std::set<std::string> on_table;
    std::map<std::string, std::string> below;  // top -> supporting block
    std::set<std::string> blocks;
};

StateView extract(const State &state, bool validate) {
    StateView v;
    std::map<std::string, int> position_count;  // table/arm/on placements per block
    std::map<std::string, int> load_count;      // blocks resting on a given block
    for (const std::string &text : state.atoms) {
        Atom atom = parse_atom(text);
        switch (atom.kind) {
        case Atom::Kind::ArmEmpty:
            v.arm_empty = true;
            break;
        case Atom::Kind::Clear:
            v.clear.insert(atom.a);
            v.blocks.insert(atom.a);
            break;
        case Atom::Kind::OnTable:
            v.on_table.insert(atom.a);
            v.blocks.insert(atom.a);
            ++position_count[atom.a];
            break;
        case Atom::Kind::Holding:
            if (v.held)
                throw std::invalid_argument("two blocks held at once: " + *v.held + ", " + atom.a);
            v.held = atom.a;
            v.blocks.insert(atom.a);
            ++position_count[atom.a];
            break;
        case Atom::Kind::On:
            if (!v.below.emplace(atom.a, atom.b).second)
                throw std::invalid_argument("block " + atom.a + " is on two blocks");
            v.blocks.insert(atom.a);
            v.blocks.insert(atom.b);
            ++position_count[atom.a];
            ++load_count[atom.b];
            break;
        }
    }
    if (!validate) return v;

    if (v.arm_empty == v.held.has_value())
        throw std::invalid_argument(v.arm_empty ? "state has both arm-empty and a held block"
                                                : "state has neither arm-empty nor a held block");
    for (const std::string &block : v.blocks) {
        int positions = position_count.count(block) ? position_count[block] : 0;
        if (positions != 1)
            throw std::invalid_argument("block " + block + " rests in " +
                                        std::to_string(positions) + " places, expected 1");
        if (load_count[block] > 1)
            throw std::invalid_argument("two blocks on top of " + block);
        bool covered = load_count.count(block) && load_count[block] > 0;
        bool held = v.held && *v.held == block;
        if (covered && held)
            throw std::invalid_argument("a block rests on held block " + block);
        bool should_be_clear = !covered && !held;
        if (should_be_clear != (v.clear.count(block) > 0))
            throw std::invalid_argument("block " + block + (should_be_clear
                                            ? " must be clear but is not"
                                            : " is marked clear but is covered or held"));
    }
    // Every stack must ground out at the table.
    for (const std::string &block : v.blocks) {
        std::string cur = block;
        std::size_t steps = 0;
        while (true) {
            if (v.on_table.count(cur) || (v.held && *v.held == cur)) break;
            auto it = v.below.find(cur);
            if (it == v.below.end())
                throw std::invalid_argument("block " + cur + " rests on nothing");
            cur = it->second;
            if (++steps > v.blocks.size())
                throw std::invalid_argument("cyclic on-chain involving block " + block);
        }
    }
    return v;
}

}  // namespace

State make_state(const std::vector<std::string> &atoms) {
    State state;
    for (const std::string &text : atoms) state.atoms.insert(parse_atom(text).str());
    check_well_formed(state);
    return state;
}

void check_well_formed(const State &state) { extract(state, /*validate=*/true); }

bool is_well_formed(const State &state) {
    try {
        check_well_formed(state);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

std::string canonical_key(const State &state) {
    std::string key;
    for (const std::string &atom : state.atoms) {
        if (!key.empty()) key += ", ";
        key += atom;
    }
    return key;
}

std::vector<LabeledSuccessor<State>> successors(const State &state) {
    const StateView v = extract(state, /*validate=*/false);
    std::vector<LabeledSuccessor<State>> out;
    auto derive = [&state](std::initializer_list<std::string> del,
                           std::initializer_list<std::string> add) {
        State next = state;
        for (const auto &atom : del) next.atoms.erase(atom);
        for (const auto &atom : add) next.atoms.insert(atom);
        return next;
    };

    if (v.arm_empty) {
        // pick-up(b): arm-empty, clear b, on-table b
        for (const std::string &b : v.on_table) {
            if (!v.clear.count(b)) continue;
            out.push_back({"(pick-up " + b + ")",
                           derive({"arm-empty", "clear " + b, "on-table " + b},
                                  {"holding " + b})});
        }
        // unstack(a,b): arm-empty, clear a, on a b
        for (const auto &[top, under] : v.below) {
            if (!v.clear.count(top)) continue;
            out.push_back({"(unstack " + top + " " + under + ")",
                           derive({"arm-empty", "clear " + top, "on " + top + " " + under},
                                  {"holding " + top, "clear " + under})});
        }
    } else if (v.held) {
        const std::string &held = *v.held;
        // put-down(b): holding b
        out.push_back({"(put-down " + held + ")",
                       derive({"holding " + held},
                              {"arm-empty", "clear " + held, "on-table " + held})});
        // stack(a,b): holding a, clear b, a != b
        for (const std::string &b : v.clear) {
            if (b == held) continue;
            out.push_back({"(stack " + held + " " + b + ")",
                           derive({"holding " + held, "clear " + b},
                                  {"on " + held + " " + b, "clear " + held, "arm-empty"})});
        }
    }
    return out;
}

bool is_goal(const State &state, const Goal &goal) {
    return std::includes(state.atoms.begin(), state.atoms.end(),
                         goal.atoms.begin(), goal.atoms.end());
}

namespace {

// Minimal s-expression reader with line tracking for error messages.
struct SExpr {
    std::string token;            // set when this node is an atom token
    std::vector<SExpr> children;  // set when this node is a list
    bool is_list = false;
    int line = 0;
};

struct Tokenizer {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;

    explicit Tokenizer(const std::string &t) : text(t) {}

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {  // comment to end of line
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line;
                ++pos;
            } else {
                break;
            }
        }
    }

    SExpr parse() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of input", line);
        if (text[pos] == ')') throw ParseError("unmatched ')'", line);
        if (text[pos] == '(') {
            SExpr list;
            list.is_list = true;
            list.line = line;
            ++pos;
            while (true) {
                skip_space();
                if (pos >= text.size()) throw ParseError("missing ')'", list.line);
                if (text[pos] == ')') {
                    ++pos;
                    return list;
                }
                list.children.push_back(parse());
            }
        }
        SExpr atom;
        atom.line = line;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')' && text[pos] != ';')
            atom.token += text[pos++];
        return atom;
    }
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string atom_text(const SExpr &expr) {
    if (!expr.is_list) throw ParseError("expected an atom list like (on a b)", expr.line);
    std::string text;
    for (const SExpr &child : expr.children) {
        if (child.is_list) throw ParseError("nested list inside an atom", child.line);
        if (!text.empty()) text += ' ';
        text += child.token;
    }
    return text;
}

}  // namespace

Instance parse_problem(const std::string &text) {
    Tokenizer tokenizer(text);
    SExpr root = tokenizer.parse();
    tokenizer.skip_space();
    if (tokenizer.pos != text.size())
        throw ParseError("trailing content after problem definition", tokenizer.line);
    if (!root.is_list || root.children.empty() || root.children[0].is_list ||
        lower(root.children[0].token) != "define")
        throw ParseError("expected (define (problem ...) ...)", root.line);

    Instance instance;
    bool saw_objects = false, saw_init = false, saw_goal = false;
    std::unordered_set<std::string> declared;
    std::vector<std::string> init_atoms;

    auto note_atom_blocks = [&](const Atom &atom, int line) {
        for (const std::string *name : {&atom.a, &atom.b}) {
            if (name->empty()) continue;
            if (!declared.count(*name))
                throw ParseError("block '" + *name + "' is not in (:objects ...)", line);
        }
    };

    for (std::size_t i = 1; i < root.children.size(); ++i) {
        const SExpr &section = root.children[i];
        if (!section.is_list || section.children.empty() || section.children[0].is_list)
            throw ParseError("expected a (...) section", section.line);
        const std::string head = lower(section.children[0].token);
        if (head == "problem") {
            if (section.children.size() == 2 && !section.children[1].is_list)
                instance.name = section.children[1].token;
        } else if (head == ":domain") {
            // accepted and ignored; the domain is fixed
        } else if (head == ":objects") {
            saw_objects = true;
            for (std::size_t j = 1; j < section.children.size(); ++j) {
                const SExpr &obj = section.children[j];
                if (obj.is_list) throw ParseError("object names must be plain tokens", obj.line);
                check_block_name(obj.token, obj.line);
                if (!declared.insert(obj.token).second)
                    throw ParseError("duplicate object '" + obj.token + "'", obj.line);
                instance.objects.push_back(obj.token);
            }
        } else if (head == ":init") {
            saw_init = true;
            for (std::size_t j = 1; j < section.children.size(); ++j) {
                Atom atom = parse_atom(atom_text(section.children[j]), section.children[j].line);
                note_atom_blocks(atom, section.children[j].line);
                init_atoms.push_back(atom.str());
            }
        } else if (head == ":goal") {
            saw_goal = true;
            if (section.children.size() != 2)
                throw ParseError("(:goal ...) expects exactly one condition", section.line);
            const SExpr &cond = section.children[1];
            std::vector<const SExpr *> goal_atoms;
            if (cond.is_list && !cond.children.empty() && !cond.children[0].is_list &&
                lower(cond.children[0].token) == "and") {
                for (std::size_t j = 1; j < cond.children.size(); ++j)
                    goal_atoms.push_back(&cond.children[j]);
            } else {
                goal_atoms.push_back(&cond);
            }
            for (const SExpr *expr : goal_atoms) {
                Atom atom = parse_atom(atom_text(*expr), expr->line);
                note_atom_blocks(atom, expr->line);
                instance.goal.atoms.insert(atom.str());
            }
        } else {
            throw ParseError("unknown section '" + section.children[0].token + "'", section.line);
        }
    }
    if (!saw_objects) throw ParseError("missing (:objects ...)");
    if (!saw_init) throw ParseError("missing (:init ...)");
    if (!saw_goal) throw ParseError("missing (:goal ...)");
    try {
        instance.init = make_state(init_atoms);
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("ill-formed initial state: ") + e.what());
    }
    return instance;
}

std::string serialize_problem(const Instance &instance) {
    std::ostringstream out;
    out << "(define (problem " << (instance.name.empty() ? "bw" : instance.name) << ")\n";
    out << "  (:domain blocksworld)\n";
    out << "  (:objects";
    for (const std::string &obj : instance.objects) out << ' ' << obj;
    out << ")\n  (:init";
    for (const std::string &atom : instance.init.atoms) out << " (" << atom << ")";
    out << ")\n  (:goal (and";
    for (const std::string &atom : instance.goal.atoms) out << " (" << atom << ")";
    out << ")))\n";
    return out.str();
}

Problem<State> make_problem(const Instance &instance) {
    Problem<State> problem;
    problem.initial = instance.init;
    problem.successors = [](const State &s) { return successors(s); };
    problem.is_goal = [goal = instance.goal](const State &s) { return is_goal(s, goal); };
    problem.canonical_key = [](const State &s) { return canonical_key(s); };
    return problem;
}

std::size_t count_reachable(const State &init) {
    std::unordered_set<std::string> seen;
    std::vector<State> worklist;
    seen.insert(canonical_key(init));
    worklist.push_back(init);
    while (!worklist.empty()) {
        State state = std::move(worklist.back());
        worklist.pop_back();
        for (auto &succ : successors(state)) {
            if (seen.insert(canonical_key(succ.state)).second)
                worklist.push_back(std::move(succ.state));
        }
    }
    return seen.size();
}

}  // namespace searchkit::blocksworld
