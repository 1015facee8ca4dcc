#include "searchkit/datasets.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "searchkit/errors.hpp"

namespace searchkit::datasets {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    // Rejection sampling keeps the draw unbiased and reproducible.
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

long long Rng::range(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::range with lo > hi");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

char Rng::lowercase_letter() { return static_cast<char>('a' + below(26)); }

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[value & 0xf];
        value >>= 4;
    }
    return s;
}

std::string dataset_digest(const Dataset &dataset) {
    std::string buffer;
    for (const GeneratedFile &file : dataset.files) {
        buffer += file.name;
        buffer += '\0';
        buffer += file.contents;
        buffer += '\0';
    }
    return hex64(fnv1a64(buffer));
}

std::string make_manifest(const Dataset &dataset) {
    std::ostringstream out;
    out << "domain: " << dataset.domain << "\n";
    out << "count: " << dataset.count << "\n";
    out << "seed: " << dataset.seed << "\n";
    out << "params: " << dataset.params << "\n";
    out << "files: " << dataset.files.size() << "\n";
    out << "digest: " << dataset_digest(dataset) << "\n";
    return out.str();
}

Manifest parse_manifest(const std::string &text) {
    Manifest manifest;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        auto colon = line.find(": ");
        if (colon == std::string::npos)
            throw ParseError("manifest line without 'key: value'", line_number);
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        if (key == "domain")
            manifest.domain = value;
        else if (key == "params")
            manifest.params = value;
        else if (key == "seed")
            manifest.seed = std::stoull(value);
        else if (key == "count")
            manifest.count = std::stoll(value);
        else if (key == "files")
            manifest.file_count = std::stoll(value);
        else if (key == "digest")
            manifest.digest = value;
        else
            throw ParseError("unknown manifest key '" + key + "'", line_number);
    }
    return manifest;
}

void write_dataset(const Dataset &dataset, const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    for (const GeneratedFile &file : dataset.files) {
        std::ofstream out(dir / file.name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / file.name).string());
        out << file.contents;
    }
    std::ofstream manifest(dir / "manifest.txt", std::ios::binary);
    manifest << make_manifest(dataset);
}

Dataset gen_game24(long long count, std::uint64_t seed, long long lo, long long hi) {
    if (count < 1) throw std::invalid_argument("gen_game24: count must be >= 1");
    if (lo > hi || lo < -1000000 || hi > 1000000)
        throw std::invalid_argument("gen_game24: invalid value range");
    Rng rng(seed);
    std::string instances;
    std::string answers;
    for (long long i = 0; i < count; ++i) {
        game24::Instance instance;
        for (int k = 0; k < 4; ++k) instance.numbers.push_back(rng.range(lo, hi));
        instances += game24::format_instance(instance);
        instances += '\n';
        answers += oracle_game24(instance) ? '1' : '0';
        answers += '\n';
    }
    Dataset dataset;
    dataset.domain = "game24";
    dataset.seed = seed;
    dataset.count = count;
    dataset.params = "range=" + std::to_string(lo) + ".." + std::to_string(hi);
    dataset.files.push_back({"instances.txt", std::move(instances)});
    dataset.files.push_back({"instances.answers", std::move(answers)});
    return dataset;
}

bool oracle_game24(const game24::Instance &instance) {
    const std::size_t n = instance.numbers.size();
    if (n == 0 || n > 6) throw std::invalid_argument("oracle_game24: need 1-6 numbers");
    const Rational target(instance.target);
    // reachable[mask] = every value computable from exactly the numbers in
    // mask, combining disjoint submask results with the four operations.
    std::vector<std::vector<Rational>> reachable(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i)
        reachable[std::size_t{1} << i] = {Rational(instance.numbers[i])};
    for (std::size_t mask = 1; mask < reachable.size(); ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // single number
        std::vector<Rational> values;
        for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            const std::size_t rest = mask ^ sub;
            if (sub < rest) continue;  // each unordered split once
            for (const Rational &a : reachable[sub]) {
                for (const Rational &b : reachable[rest]) {
                    values.push_back(a + b);
                    values.push_back(a * b);
                    values.push_back(a - b);
                    values.push_back(b - a);
                    if (!b.is_zero()) values.push_back(a / b);
                    if (!a.is_zero()) values.push_back(b / a);
                }
            }
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        reachable[mask] = std::move(values);
    }
    const auto &full = reachable[reachable.size() - 1];
    return std::binary_search(full.begin(), full.end(), target);
}

Dataset gen_crossword(long long count, std::uint64_t seed, int distractors_per_slot) {
    if (count < 1) throw std::invalid_argument("gen_crossword: count must be >= 1");
    if (distractors_per_slot < 0)
        throw std::invalid_argument("gen_crossword: negative distractor count");
    Rng rng(seed);
    Dataset dataset;
    dataset.domain = "crossword";
    dataset.seed = seed;
    dataset.count = count;
    dataset.params = "distractors=" + std::to_string(distractors_per_slot);

    for (long long game = 0; game < count; ++game) {
        std::array<std::string, crossword::kSize> rows;
        for (auto &row : rows) {
            row.resize(crossword::kSize);
            for (char &c : row) c = rng.lowercase_letter();
        }
        crossword::Spec spec;
        for (int slot = 0; slot < crossword::kSlots; ++slot) {
            std::string planted;
            if (slot < crossword::kSize) {
                planted = rows[slot];
            } else {
                for (int r = 0; r < crossword::kSize; ++r)
                    planted += rows[r][slot - crossword::kSize];
            }
            std::vector<std::string> words = {planted};
            while (static_cast<int>(words.size()) < distractors_per_slot + 1) {
                std::string w(crossword::kSize, 'a');
                for (char &c : w) c = rng.lowercase_letter();
                // Share one letter position with the planted word so the
                // distractor survives some crossing checks.
                std::size_t keep = rng.below(crossword::kSize);
                w[keep] = planted[keep];
                if (std::find(words.begin(), words.end(), w) == words.end())
                    words.push_back(std::move(w));
            }
            rng.shuffle(words);
            if (slot < crossword::kSize)
                spec.row_candidates[slot] = std::move(words);
            else
                spec.col_candidates[slot - crossword::kSize] = std::move(words);
        }

        char name[32];
        std::snprintf(name, sizeof name, "game-%03lld", game);
        dataset.files.push_back({std::string(name) + ".xw", crossword::serialize_spec(spec)});
        std::string solution;
        for (const auto &row : rows) solution += row + "\n";
        dataset.files.push_back({std::string(name) + ".solution", std::move(solution)});
    }
    return dataset;
}

namespace {

// Unordered sets of ordered stacks over n labeled blocks ("sets of lists",
// A000262): a(n) = sum_k lah(n,k) with lah(n,k) = C(n-1,k-1) * n!/k!.
long long lah_number(int n, int k) {
    auto binomial = [](long long m, long long r) {
        long long result = 1;
        for (long long i = 1; i <= r; ++i) result = result * (m - r + i) / i;
        return result;
    };
    long long factorial_ratio = 1;  // n! / k!
    for (long long i = k + 1; i <= n; ++i) factorial_ratio *= i;
    return binomial(n - 1, k - 1) * factorial_ratio;
}

// Uniform ground (arm-empty) state: pick the stack count k with weight
// lah(n,k), then a uniform sequence of k stacks via a random permutation
// cut at a random (k-1)-subset of the n-1 gaps; forgetting the sequence
// order is uniform over unordered configurations because every
// configuration of k distinct stacks arises from exactly k! sequences.
blocksworld::State sample_ground_state(Rng &rng, const std::vector<std::string> &blocks) {
    const int n = static_cast<int>(blocks.size());
    long long total = 0;
    for (int k = 1; k <= n; ++k) total += lah_number(n, k);
    long long draw = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total)));
    int stack_count = n;
    for (int k = 1; k <= n; ++k) {
        draw -= lah_number(n, k);
        if (draw < 0) {
            stack_count = k;
            break;
        }
    }

    std::vector<std::string> order = blocks;
    rng.shuffle(order);
    std::vector<int> gaps(n - 1);
    for (int i = 0; i < n - 1; ++i) gaps[i] = i + 1;
    rng.shuffle(gaps);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (stack_count - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::vector<std::string> atoms = {"arm-empty"};
    int start = 0;
    for (int cut : cuts) {
        // order[start..cut) is one stack, bottom first
        atoms.push_back("on-table " + order[start]);
        for (int i = start + 1; i < cut; ++i)
            atoms.push_back("on " + order[i] + " " + order[i - 1]);
        atoms.push_back("clear " + order[cut - 1]);
        start = cut;
    }
    return blocksworld::make_state(atoms);
}

}  // namespace

Dataset gen_blocksworld(long long count, int n_blocks, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("gen_blocksworld: count must be >= 1");
    if (n_blocks < 1 || n_blocks > 8)
        throw std::invalid_argument("gen_blocksworld: n_blocks must be in 1..8");
    Rng rng(seed);
    std::vector<std::string> blocks;
    for (int i = 1; i <= n_blocks; ++i) blocks.push_back("b" + std::to_string(i));

    Dataset dataset;
    dataset.domain = "blocksworld";
    dataset.seed = seed;
    dataset.count = count;
    dataset.params = "blocks=" + std::to_string(n_blocks);
    for (long long i = 0; i < count; ++i) {
        blocksworld::Instance instance;
        instance.name = "bw-" + std::to_string(n_blocks) + "-" + std::to_string(i);
        instance.objects = blocks;
        instance.init = sample_ground_state(rng, blocks);
        instance.goal.atoms = sample_ground_state(rng, blocks).atoms;
        char name[40];
        std::snprintf(name, sizeof name, "instance-%03lld.pddl", i);
        dataset.files.push_back({name, blocksworld::serialize_problem(instance)});
    }
    return dataset;
}

namespace {

const std::vector<std::string> &noun_pool() {
    static const std::vector<std::string> nouns = {
        "wumpus", "numpus", "tumpus", "vumpus", "yumpus", "zumpus", "rompus",
        "dumpus", "impus",  "jompus", "grimpus", "lempus", "shumpus", "sterpus"};
    return nouns;
}

const std::vector<std::string> &adjective_pool() {
    static const std::vector<std::string> adjectives = {
        "red",     "blue",  "amber",  "feisty", "small", "large", "bitter",
        "mean",    "kind",  "shy",    "bright", "dull",  "loud",  "quiet",
        "earthy",  "fruity", "opaque", "sweet", "wooden", "brave"};
    return adjectives;
}

}  // namespace

Dataset gen_prontoqa(long long count, int depth, int distractor_rules, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("gen_prontoqa: count must be >= 1");
    if (depth < 1) throw std::invalid_argument("gen_prontoqa: depth must be >= 1");
    if (distractor_rules < 0)
        throw std::invalid_argument("gen_prontoqa: negative distractor count");
    Rng rng(seed);
    std::vector<prontoqa::Task> tasks;
    tasks.reserve(static_cast<std::size_t>(count));

    for (long long i = 0; i < count; ++i) {
        std::set<std::string> used;
        auto fresh_fact = [&]() {
            while (true) {
                const auto &nouns = noun_pool();
                const auto &adjectives = adjective_pool();
                std::string fact = "the " + nouns[rng.below(nouns.size())] + " is " +
                                   adjectives[rng.below(adjectives.size())];
                if (used.insert(fact).second) return fact;
            }
        };

        const bool gold = i % 2 == 0;  // half TRUE, half FALSE
        prontoqa::Task task;
        task.gold = gold;
        task.query = fresh_fact();
        used.insert(prontoqa::negate(task.query));
        const std::string final_fact = gold ? task.query : prontoqa::negate(task.query);

        std::vector<std::string> chain;
        chain.push_back(fresh_fact());
        for (int step = 1; step < depth; ++step) chain.push_back(fresh_fact());
        chain.push_back(final_fact);

        task.initial_facts.push_back(chain.front());
        for (std::size_t step = 0; step + 1 < chain.size(); ++step)
            task.rules.push_back({chain[step], chain[step + 1]});
        for (int d = 0; d < distractor_rules; ++d) {
            const std::string &from = chain[rng.below(chain.size())];
            task.rules.push_back({from, fresh_fact()});
        }
        rng.shuffle(task.rules);
        tasks.push_back(std::move(task));
    }

    Dataset dataset;
    dataset.domain = "prontoqa";
    dataset.seed = seed;
    dataset.count = count;
    dataset.params = "depth=" + std::to_string(depth) +
                     " distractors=" + std::to_string(distractor_rules);
    dataset.files.push_back({"tasks.txt", prontoqa::serialize_tasks(tasks)});
    return dataset;
}

}  // namespace searchkit::datasets
