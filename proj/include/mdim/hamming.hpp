#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

namespace mdim {

// Implicit graph on the a^k length-k strings over an a-letter alphabet;
// distance is the number of mismatching positions. Never materialized.
struct HammingSpace {
    int k = 1;
    int a = 2;
    std::string alphabet;  // a distinct symbols, index order fixed

    // Alphabet 0-9 then a-z then A-Z; a <= 62.
    static HammingSpace canonical(int k, int a);
    static HammingSpace with_alphabet(int k, std::string alphabet);

    std::uint64_t vertex_count() const;  // a^k, throws if it overflows
    int symbol_index(char c) const;      // -1 for foreign symbols
    std::string label_of(std::uint64_t index) const;  // base-a digits, most significant first
    std::uint64_t index_of(std::string_view label) const;
    void check_vertex(std::string_view label) const;  // length + alphabet
};

// Mismatch count. Throws on length mismatch; the space-checked overload also
// rejects foreign symbols.
int hamming_distance(std::string_view u, std::string_view v);
int hamming_distance(const HammingSpace& space, std::string_view u, std::string_view v);

// beta(H_{2,a}) = floor((2/3)(2a - 1)), a >= 2.
int beta_h2(int a);

// Known beta(Q_k): exact for k <= 10, upper bound for 11 <= k <= 17.
struct HypercubeReference {
    int value;
    bool exact;
};
HypercubeReference hypercube_reference(int k);

enum class HammingVerifiedMode { unverified, exhaustive, sampled };

struct HammingResolvingSet {
    HammingSpace space;
    std::vector<std::string> vertices;
    HammingVerifiedMode mode = HammingVerifiedMode::unverified;
    std::uint64_t sampled_pairs = 0;  // set when mode == sampled
    RngSeed sampled_seed;
};

struct HammingVerifyOptions {
    std::uint64_t exhaustive_cap = 1'000'000;  // max a^k streamed exhaustively
    std::uint64_t sample_pairs = 1'000'000;
    RngSeed seed;
};

struct HammingVerdict {
    enum class Result { resolving, not_resolving, sampled_pass };
    Result result;
    // Lexicographically smallest colliding pair when exhaustive; the
    // lowest-index colliding sample otherwise.
    std::optional<std::pair<std::string, std::string>> counterexample;
    std::uint64_t pairs_checked = 0;
};

// Exhaustive mode streams all a^k signatures (throws above the cap) and is
// definitive; sampled mode draws uniformly random distinct vertex pairs and
// can only report sampled_pass or a definitive counterexample. Signature
// filling is split across OpenMP threads; the verdict is deterministic.
HammingVerdict verify_hamming_resolving(const HammingSpace& space,
                                        const std::vector<std::string>& set,
                                        bool exhaustive,
                                        const HammingVerifyOptions& opts = {});
HammingVerdict verify_hamming_resolving_serial(const HammingSpace& space,
                                               const std::vector<std::string>& set,
                                               bool exhaustive,
                                               const HammingVerifyOptions& opts = {});

// Lift a verified resolving set on H_{k,a} to one on H_{k+1,a} of size at
// most s + floor(a/2): extend every member with the first symbol, then
// greedily add candidates z.c (z from the extended members' length-k prefixes
// plus the all-first-symbol string, c over the alphabet) by entropy gain over
// the currently colliding signature classes. Throws if more than floor(a/2)
// additions would be needed or if the input is unverified; the output is
// exhaustively verified, so the target space must fit under the cap.
HammingResolvingSet augment(const HammingResolvingSet& base,
                            const HammingVerifyOptions& opts = {});

// Set file format: comment/blank lines ignored; first significant line is
// "k a alphabet"; then one vertex label per line.
HammingResolvingSet read_hamming_set(std::istream& in, const std::string& filename);
void write_hamming_set(std::ostream& out, const HammingResolvingSet& set);

}  // namespace mdim
