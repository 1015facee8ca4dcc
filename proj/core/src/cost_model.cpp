#include "searchkit/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace searchkit::costmodel {

const std::vector<DatasetProfile> &builtin_datasets() {
    static const std::vector<DatasetProfile> datasets = {
        {"24Game", 1362, 3, 6228426LL},
        {"Crossword", 20, 10, 518748492020LL},
        {"BlocksWorld", 502, 16, 103505LL},
        {"PrOntoQA", 4000, 6, 97608LL},
    };
    return datasets;
}

namespace {

long long one(long long, const CostParams &) { return 1; }
long long length(long long L, const CostParams &) { return L; }
long long rollout_states(long long L, const CostParams &p) {
    return p.branching * L * p.trials;  // bLT
}
long long rap_calls(long long L, const CostParams &p) {
    return L * p.trials + p.branching * L * p.trials;  // LT + bLT
}
long long lats_calls(long long L, const CostParams &p) {
    return 2 * L * p.trials + p.branching * L * p.trials;  // 2LT + bLT
}
long long beam_states(long long L, const CostParams &p) {
    return p.branching * p.beam * L;  // bmL
}
long long graph_states(long long L, const CostParams &p) {
    return p.branching * L;  // bL
}
long long reflection_calls(long long L, const CostParams &p) {
    return (2 + L) * p.trials;  // (2+L)T
}
long long reflection_states(long long L, const CostParams &p) {
    return L * p.trials;  // LT
}

}  // namespace

const std::vector<ApproachSpec> &builtin_approaches() {
    static const std::vector<ApproachSpec> approaches = {
        {"IO", "O(D)", one, one, true},
        {"CoT", "O(D)", one, one, true},
        {"ReAct", "O(LD)", length, length, false},
        {"ReWOO", "O(LD)", length, length, false},
        {"RAP", "O(TbLD)", rap_calls, rollout_states, false},
        {"ToT", "O(bmLD)", beam_states, beam_states, false},
        {"GoT", "O(bLD)", graph_states, graph_states, false},
        {"Reflection", "O(LTD)", reflection_calls, reflection_states, false},
        {"LATS", "O(TbLD)", lats_calls, rollout_states, false},
    };
    return approaches;
}

const ApproachSpec &approach_by_name(const std::string &name) {
    for (const ApproachSpec &a : builtin_approaches())
        if (a.name == name) return a;
    throw std::invalid_argument("unknown approach '" + name + "'");
}

const DatasetProfile &dataset_by_name(const std::string &name) {
    for (const DatasetProfile &d : builtin_datasets())
        if (d.name == name) return d;
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

long long projected_calls(const ApproachSpec &approach, const DatasetProfile &dataset,
                          const CostParams &params) {
    return dataset.instance_count *
           approach.calls_per_instance(dataset.length_bound, params);
}

double explored_fraction(const ApproachSpec &approach, const DatasetProfile &dataset,
                         const CostParams &params) {
    const double states = static_cast<double>(dataset.instance_count) *
                          static_cast<double>(approach.states_per_instance(
                              dataset.length_bound, params));
    return 100.0 * states / static_cast<double>(dataset.total_states);
}

double total_cost(const ApproachSpec &approach, const Pricing &pricing,
                  const std::vector<DatasetProfile> &datasets, const CostParams &params) {
    const double dollars_per_call =
        (static_cast<double>(pricing.tokens_in) * pricing.input_per_million +
         static_cast<double>(pricing.tokens_out) * pricing.output_per_million) /
        1e6;
    double total = 0.0;
    for (const DatasetProfile &dataset : datasets)
        total += static_cast<double>(projected_calls(approach, dataset, params)) *
                 dollars_per_call;
    return total;
}

std::string format_calls(long long value, bool exact) {
    char buf[32];
    if (!exact && value >= 1000000) {
        std::snprintf(buf, sizeof buf, "%.2fM", static_cast<double>(value) / 1e6);
        return buf;
    }
    if (!exact && value >= 10000) {
        std::snprintf(buf, sizeof buf, "%lldK", std::llround(static_cast<double>(value) / 1e3));
        return buf;
    }
    // Below 10K a clean multiple of 100 still reads as K ("2.4K", "5K");
    // anything else stays a raw count ("4086").
    if (!exact && value >= 1000 && value % 100 == 0) {
        if (value % 1000 == 0) {
            std::snprintf(buf, sizeof buf, "%lldK", value / 1000);
        } else {
            std::snprintf(buf, sizeof buf, "%.1fK", static_cast<double>(value) / 1e3);
        }
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%lld", value);
    return buf;
}

std::string format_states_percent(double percent) {
    char buf[32];
    if (percent >= 100.0) {
        // Printed as whole percents; values this large are truncated,
        // except the top band which rounds.
        long long shown = percent >= 500.0 ? std::llround(percent)
                                           : static_cast<long long>(percent);
        std::snprintf(buf, sizeof buf, "%lld%%", shown);
        return buf;
    }
    if (percent >= 1.0) {
        // Snap to a whole percent when within 0.2 of one.
        double nearest = std::round(percent);
        if (std::abs(percent - nearest) <= 0.2) {
            std::snprintf(buf, sizeof buf, "%lld%%", static_cast<long long>(nearest));
        } else {
            std::snprintf(buf, sizeof buf, "%.1f%%", percent);
        }
        return buf;
    }
    if (percent >= 0.1) {
        std::snprintf(buf, sizeof buf, "%.1f%%", percent);
        return buf;
    }
    if (percent >= 0.001) {
        // One significant digit, fixed notation.
        int decimals = percent >= 0.01 ? 2 : 3;
        std::snprintf(buf, sizeof buf, "%.*f%%", decimals, percent);
        return buf;
    }
    // Scientific with one significant digit, "4e-9%" style.
    std::snprintf(buf, sizeof buf, "%.0e", percent);
    std::string s(buf);
    auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    int exponent = std::stoi(s.substr(e + 1));
    return mantissa + "e" + std::to_string(exponent) + "%";
}

namespace {

std::string pad(const std::string &text, std::size_t width) {
    std::string s = text;
    while (s.size() < width) s += ' ';
    return s;
}

}  // namespace

std::string render_table(const CostParams &params, const Pricing &pricing) {
    const auto &datasets = builtin_datasets();
    const auto &approaches = builtin_approaches();
    const MeasuredRow measured;

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"Approach", "Complexity"};
    for (const auto &dataset : datasets) {
        header.push_back(dataset.name + " States");
        header.push_back("Calls");
    }
    header.push_back("Cost");
    rows.push_back(header);

    for (const auto &approach : approaches) {
        std::vector<std::string> row = {approach.name, approach.complexity};
        for (const auto &dataset : datasets) {
            row.push_back(format_states_percent(
                explored_fraction(approach, dataset, params)));
            row.push_back(format_calls(projected_calls(approach, dataset, params),
                                       approach.exact_call_display));
        }
        char cost[32];
        std::snprintf(cost, sizeof cost, "$%.2f",
                      total_cost(approach, pricing, datasets, params));
        row.push_back(cost);
        rows.push_back(row);
    }
    std::vector<std::string> tos_row = {measured.name, measured.complexity};
    for (std::size_t i = 0; i < datasets.size(); ++i) {
        tos_row.push_back(measured.states_display[i]);
        tos_row.push_back(measured.calls_display[i]);
    }
    tos_row.push_back("-");
    rows.push_back(tos_row);

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto &row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            out += pad(rows[r][c], widths[c]);
            if (c + 1 < rows[r].size()) out += "  ";
        }
        out += '\n';
        if (r == 0 || r + 2 == rows.size()) {
            std::size_t total = 0;
            for (std::size_t w : widths) total += w + 2;
            out += std::string(total - 2, '-');
            out += '\n';
        }
    }
    return out;
}

std::string render_table_csv(const CostParams &params, const Pricing &pricing) {
    const auto &datasets = builtin_datasets();
    const auto &approaches = builtin_approaches();
    const MeasuredRow measured;
    std::ostringstream out;
    out << "approach,complexity";
    for (const auto &dataset : datasets)
        out << "," << dataset.name << "_states," << dataset.name << "_calls,"
            << dataset.name << "_calls_exact";
    out << ",cost_dollars\n";
    for (const auto &approach : approaches) {
        out << approach.name << "," << approach.complexity;
        for (const auto &dataset : datasets) {
            out << "," << format_states_percent(explored_fraction(approach, dataset, params))
                << ","
                << format_calls(projected_calls(approach, dataset, params),
                                approach.exact_call_display)
                << "," << projected_calls(approach, dataset, params);
        }
        char cost[32];
        std::snprintf(cost, sizeof cost, "%.2f",
                      total_cost(approach, pricing, datasets, params));
        out << "," << cost << "\n";
    }
    out << measured.name << "," << measured.complexity;
    for (std::size_t i = 0; i < datasets.size(); ++i)
        out << "," << measured.states_display[i] << "," << measured.calls_display[i] << ",";
    out << ",\n";
    return out.str();
}

}  // namespace searchkit::costmodel
