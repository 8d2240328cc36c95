#pragma once

#include <span>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

namespace mdim {

Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph empty_graph(int n);

// Vertices of b are shifted by a.num_vertices(); no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union plus every cross edge.
Graph join(const Graph& a, const Graph& b);

// Q_k: vertices are the 2^k bit strings, adjacent iff they differ in one bit.
Graph hypercube(int k);

// G(n, p): each unordered pair independently with probability p, iterated in
// row-major upper-triangle order.
Graph erdos_renyi(int n, double p, RngSeed seed);

// block_of[v] is the community of vertex v; probs is the symmetric block
// adjacency matrix. Every block index up to max(block_of) must be non-empty.
Graph stochastic_block_model(std::span<const int> block_of,
                             const std::vector<std::vector<double>>& probs,
                             RngSeed seed);

// Uniform over the n^(n-2) labeled trees, by decoding a uniform Prufer
// sequence.
Graph uniform_random_tree(int n, RngSeed seed);

}  // namespace mdim
