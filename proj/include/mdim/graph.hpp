#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace mdim {

// Extended geodesic distance. kUnreachable marks vertex pairs in different
// components; it compares equal only to itself and never enters arithmetic.
using Dist = std::uint64_t;
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

struct EdgeInput {
    int u;
    int v;
    std::uint64_t w = 1;
};

struct Edge {
    int u;  // u <= v in canonical form
    int v;
    std::uint64_t w;
};

// Undirected graph on vertices 0..n-1 with non-negative integer weights.
// Parallel edges collapse to the minimum weight at build time; self-loops are
// stored but ignored by distance computation. Immutable once built, so shared
// concurrent reads are safe.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints.
    static Graph build(int n, std::span<const EdgeInput> edges);

    int num_vertices() const { return n_; }
    // Canonical order: sorted by (min(u,v), max(u,v)), one edge per pair.
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const std::pair<int, std::uint64_t>> neighbors(int u) const {
        return {adj_.data() + adj_offset_[u], adj_.data() + adj_offset_[u + 1]};
    }
    int degree(int u) const { return adj_offset_[u + 1] - adj_offset_[u]; }
    bool unit_weights() const { return unit_weights_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_offset_;  // CSR over non-loop edges
    std::vector<std::pair<int, std::uint64_t>> adj_;
    bool unit_weights_ = true;
};

// Symmetric n x n table of geodesic distances with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int num_vertices() const { return n_; }
    Dist operator()(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::span<const Dist> row(int u) const {
        return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }
    std::span<Dist> row(int u) {
        return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }

private:
    int n_ = 0;
    std::vector<Dist> d_;
};

// Single-source geodesic distances: BFS when all weights are 1, Dijkstra
// otherwise. out must have size n.
void shortest_paths_from(const Graph& g, int source, std::span<Dist> out);

// All-pairs shortest paths. apsp() runs one search per source across OpenMP
// threads; rows are independent, so the result is identical to apsp_serial().
DistanceMatrix apsp(const Graph& g);
DistanceMatrix apsp_serial(const Graph& g);

// Distance rows from selected sources only; avoids the full n x n matrix when
// verifying resolving sets on large sparse graphs.
std::vector<std::vector<Dist>> distance_rows(const Graph& g, std::span<const int> sources);

bool is_connected(const Graph& g);

}  // namespace mdim
