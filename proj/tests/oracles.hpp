#pragma once

// Definitional reference implementations for tests. These deliberately avoid
// the library's optimized code paths (hashing, partition refinement,
// unranking) so the two can be checked against each other.

#include <cmath>
#include <map>
#include <vector>

#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "mdim/hamming.hpp"
#include "mdim/rng.hpp"

namespace oracle {

inline std::vector<mdim::Dist> signature_of(const mdim::DistanceMatrix& d, int u,
                                            const std::vector<int>& r) {
    std::vector<mdim::Dist> sig;
    sig.reserve(r.size());
    for (int ri : r) sig.push_back(d(u, ri));
    return sig;
}

// Pairwise comparison straight from the definition.
inline bool is_resolving_naive(const mdim::DistanceMatrix& d, const std::vector<int>& r) {
    const int n = d.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool separated = false;
            for (int ri : r)
                if (d(u, ri) != d(v, ri)) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

inline bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> min_resolving_naive(const mdim::DistanceMatrix& d) {
    const int n = d.num_vertices();
    if (n == 1) return {};
    for (int k = 1; k < n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (is_resolving_naive(d, comb)) return comb;
        } while (next_combination(comb, n));
    }
    return {};  // only reachable with distance-0 twins
}

// Existence of r1, r2 with different distance differences, straight from the
// definition.
inline bool is_doubly_resolving_naive(const mdim::DistanceMatrix& d, const std::vector<int>& s) {
    const int n = d.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool separated = false;
            for (int r1 : s) {
                for (int r2 : s) {
                    const auto du = static_cast<std::int64_t>(d(u, r1)) -
                                    static_cast<std::int64_t>(d(u, r2));
                    const auto dv = static_cast<std::int64_t>(d(v, r1)) -
                                    static_cast<std::int64_t>(d(v, r2));
                    if (du != dv) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            if (!separated) return false;
        }
    return true;
}

inline std::vector<int> min_doubly_naive(const mdim::DistanceMatrix& d) {
    const int n = d.num_vertices();
    for (int k = 2; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (is_doubly_resolving_naive(d, comb)) return comb;
        } while (next_combination(comb, n));
    }
    return {};
}

// -sum(p log2 p), the textbook arrangement (the library computes
// log2(n) - sum(c log2 c)/n instead).
inline double entropy_naive(const mdim::DistanceMatrix& d, const std::vector<int>& r) {
    const int n = d.num_vertices();
    std::map<std::vector<mdim::Dist>, int> counts;
    for (int u = 0; u < n; ++u) ++counts[signature_of(d, u, r)];
    double h = 0.0;
    for (const auto& [sig, c] : counts) {
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

// Explicit Hamming graph: one vertex per label, edges between labels that
// differ in exactly one position.
inline mdim::Graph materialize_hamming(const mdim::HammingSpace& space) {
    const auto count = space.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) labels.push_back(space.label_of(i));
    std::vector<mdim::EdgeInput> edges;
    for (std::uint64_t i = 0; i < count; ++i)
        for (std::uint64_t j = i + 1; j < count; ++j)
            if (mdim::hamming_distance(labels[i], labels[j]) == 1)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return mdim::Graph::build(static_cast<int>(count), edges);
}

inline mdim::Graph random_graph(int n, double p, std::uint64_t seed) {
    return mdim::erdos_renyi(n, p, mdim::RngSeed{seed});
}

}  // namespace oracle
