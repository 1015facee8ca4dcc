#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "searchkit/blocksworld.hpp"
#include "searchkit/crossword.hpp"
#include "searchkit/game24.hpp"
#include "searchkit/prontoqa.hpp"

namespace searchkit::datasets {

// Deterministic sampling on top of mt19937_64. The derived draws (below,
// range, shuffle) are implemented here rather than with std::distributions
// so generated bytes do not depend on the standard library build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n);                 // uniform in [0, n)
    long long range(long long lo, long long hi);          // uniform in [lo, hi]
    char lowercase_letter();
    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct GeneratedFile {
    std::string name;  // relative to the dataset root
    std::string contents;
};

struct Dataset {
    std::string domain;
    std::string params;  // human-readable generator parameters
    std::uint64_t seed = 0;
    long long count = 0;
    std::vector<GeneratedFile> files;
};

// Digest over every generated file (name and bytes), in emission order.
// The manifest itself is not part of the digest.
std::string dataset_digest(const Dataset &dataset);
std::string make_manifest(const Dataset &dataset);

struct Manifest {
    std::string domain;
    std::string params;
    std::uint64_t seed = 0;
    long long count = 0;
    long long file_count = 0;
    std::string digest;
};
Manifest parse_manifest(const std::string &text);

// Writes the dataset files under dir plus a "manifest.txt" sidecar.
void write_dataset(const Dataset &dataset, const std::filesystem::path &dir);

// --- generators (pure functions of seed and parameters) ---

// count instances of 4 integers uniform in [lo, hi]; emits instances.txt
// plus instances.answers with the oracle's solvable bit per line.
Dataset gen_game24(long long count, std::uint64_t seed, long long lo = 1, long long hi = 13);

// Exhaustive expression-tree oracle: true iff some formula over all the
// instance's numbers (each used exactly once, exact rational arithmetic)
// evaluates to the target. Independent of the successor-function path.
bool oracle_game24(const game24::Instance &instance);

// Each game plants a random 5x5 letter grid; every slot's candidate list is
// the planted word plus distractors (random 5-letter strings sharing one
// letter position with the planted word), shuffled. Emits game-XXX.xw and
// game-XXX.solution files.
Dataset gen_crossword(long long count, std::uint64_t seed, int distractors_per_slot = 9);

// init and goal sampled uniformly from the ground (arm-empty) states via
// random ordered stack partitions; emits instance-XXX.pddl files. n_blocks
// must stay in 1..8 so exhaustive enumeration stays desk-scale.
Dataset gen_blocksworld(long long count, int n_blocks, std::uint64_t seed);

// Half TRUE, half FALSE tasks: an implication chain of the given depth
// from a start fact to the query (or to its negation), plus distractor
// rules from chain facts to fresh atoms. Emits tasks.txt with gold labels.
Dataset gen_prontoqa(long long count, int depth, int distractor_rules, std::uint64_t seed);

}  // namespace searchkit::datasets
