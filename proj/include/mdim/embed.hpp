#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mdim/hamming.hpp"

namespace mdim {

struct SequenceAlphabet {
    std::string name;     // dna | protein | custom
    std::string symbols;  // distinct, index order fixed

    static SequenceAlphabet dna();      // ACGT
    static SequenceAlphabet protein();  // 20 canonical amino acids, alphabetical one-letter codes
    static SequenceAlphabet custom(std::string symbols);

    int index_of(char c) const;  // -1 for foreign symbols
};

// Sliding windows of length k, stride 1, in order. Throws on sequences
// shorter than k or containing foreign symbols (no imputation).
std::vector<std::string> kmers(std::string_view sequence, int k, const SequenceAlphabet& alphabet);

struct EmbeddedSequence {
    std::string source_id;
    int k = 0;
    // vectors[i][j] = Hamming distance of the i-th k-mer to the j-th member
    // of the resolving set; offsets are implicit (stride 1 from 0).
    std::vector<std::vector<int>> vectors;
};

// Map each k-mer of the sequence to its distance vector against R. R must
// belong to H_{k,a} for this alphabet and be verified (or sampled-pass).
EmbeddedSequence embed_sequence(std::string_view sequence, const std::string& source_id, int k,
                                const SequenceAlphabet& alphabet, const HammingResolvingSet& r);

struct SequenceRecord {
    std::string id;
    std::string sequence;
};

// FASTA-like when the first significant character is '>': header lines start
// records, sequence lines concatenate. Otherwise each non-blank line is one
// sequence with ids seq1, seq2, ...
std::vector<SequenceRecord> read_sequences(std::istream& in);

// One row per k-mer: source id, offset, |R| integer coordinates.
void write_embedding_csv(std::ostream& out, const std::vector<EmbeddedSequence>& embeddings);

}  // namespace mdim
