#include "mdim/embed.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace mdim {

SequenceAlphabet SequenceAlphabet::dna() { return {"dna", "ACGT"}; }

SequenceAlphabet SequenceAlphabet::protein() { return {"protein", "ACDEFGHIKLMNPQRSTVWY"}; }

SequenceAlphabet SequenceAlphabet::custom(std::string symbols) {
    if (symbols.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    for (std::size_t i = 0; i < symbols.size(); ++i)
        for (std::size_t j = i + 1; j < symbols.size(); ++j)
            if (symbols[i] == symbols[j])
                throw std::invalid_argument("alphabet symbols must be distinct");
    return {"custom", std::move(symbols)};
}

int SequenceAlphabet::index_of(char c) const {
    const auto pos = symbols.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::vector<std::string> kmers(std::string_view sequence, int k, const SequenceAlphabet& alphabet) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(sequence.size()) < k)
        throw std::invalid_argument("sequence shorter than k");
    for (char c : sequence)
        if (alphabet.index_of(c) < 0)
            throw std::invalid_argument(std::string("symbol not in alphabet: '") + c + "'");
    std::vector<std::string> out;
    out.reserve(sequence.size() - k + 1);
    for (std::size_t i = 0; i + k <= sequence.size(); ++i)
        out.emplace_back(sequence.substr(i, k));
    return out;
}

EmbeddedSequence embed_sequence(std::string_view sequence, const std::string& source_id, int k,
                                const SequenceAlphabet& alphabet, const HammingResolvingSet& r) {
    if (r.space.k != k || r.space.alphabet != alphabet.symbols)
        throw std::invalid_argument("resolving set belongs to a different Hamming space");
    if (r.mode == HammingVerifiedMode::unverified)
        throw std::invalid_argument("resolving set is unverified; verify it first");

    EmbeddedSequence out;
    out.source_id = source_id;
    out.k = k;
    const auto windows = kmers(sequence, k, alphabet);
    out.vectors.resize(windows.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < windows.size(); ++i) {
        std::vector<int> coords;
        coords.reserve(r.vertices.size());
        for (const auto& member : r.vertices)
            coords.push_back(hamming_distance(windows[i], member));
        out.vectors[i] = std::move(coords);
    }
    return out;
}

std::vector<SequenceRecord> read_sequences(std::istream& in) {
    std::vector<SequenceRecord> records;
    std::string line;
    bool fasta = false;
    bool decided = false;
    int plain_count = 0;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!decided) {
            fasta = line[0] == '>';
            decided = true;
        }
        if (fasta) {
            if (line[0] == '>') {
                std::string id = line.substr(1);
                const auto space = id.find_first_of(" \t");
                if (space != std::string::npos) id.resize(space);
                records.push_back({id.empty() ? "seq" + std::to_string(records.size() + 1) : id, ""});
            } else {
                if (records.empty()) throw std::runtime_error("sequence data before FASTA header");
                records.back().sequence += line;
            }
        } else {
            ++plain_count;
            records.push_back({"seq" + std::to_string(plain_count), line});
        }
    }
    return records;
}

void write_embedding_csv(std::ostream& out, const std::vector<EmbeddedSequence>& embeddings) {
    std::size_t width = 0;
    for (const auto& e : embeddings)
        if (!e.vectors.empty()) width = std::max(width, e.vectors[0].size());
    out << "source,offset";
    for (std::size_t j = 0; j < width; ++j) out << ",d" << j;
    out << "\n";
    for (const auto& e : embeddings)
        for (std::size_t i = 0; i < e.vectors.size(); ++i) {
            out << e.source_id << "," << i;
            for (int c : e.vectors[i]) out << "," << c;
            out << "\n";
        }
}

}  // namespace mdim
