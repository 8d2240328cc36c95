#include "mdim/generators.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace mdim {

namespace {

void require_size(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " requires size >= 1");
}

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + ": probability outside [0, 1]");
}

}  // namespace

Graph path_graph(int n) {
    require_size(n, "path");
    std::vector<EdgeInput> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::build(n, edges);
}

Graph complete_graph(int n) {
    require_size(n, "complete");
    std::vector<EdgeInput> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::build(n, edges);
}

Graph complete_bipartite(int s, int t) {
    require_size(s, "complete_bipartite");
    require_size(t, "complete_bipartite");
    std::vector<EdgeInput> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.push_back({i, s + j});
    return Graph::build(s + t, edges);
}

Graph empty_graph(int n) {
    require_size(n, "empty");
    return Graph::build(n, {});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.num_vertices();
    std::vector<EdgeInput> edges;
    for (const Edge& e : a.edges()) edges.push_back({e.u, e.v, e.w});
    for (const Edge& e : b.edges()) edges.push_back({e.u + na, e.v + na, e.w});
    return Graph::build(na + b.num_vertices(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.num_vertices();
    const int nb = b.num_vertices();
    std::vector<EdgeInput> edges;
    for (const Edge& e : a.edges()) edges.push_back({e.u, e.v, e.w});
    for (const Edge& e : b.edges()) edges.push_back({e.u + na, e.v + na, e.w});
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) edges.push_back({i, na + j});
    return Graph::build(na + nb, edges);
}

Graph hypercube(int k) {
    if (k < 0 || k > 24) throw std::invalid_argument("hypercube dimension must be in 0..24");
    const int n = 1 << k;
    std::vector<EdgeInput> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b) {
            const int w = v ^ (1 << b);
            if (v < w) edges.push_back({v, w});
        }
    return Graph::build(n, edges);
}

Graph erdos_renyi(int n, double p, RngSeed seed) {
    require_size(n, "er");
    require_probability(p, "er");
    Rng rng(seed);
    std::vector<EdgeInput> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.push_back({i, j});
    return Graph::build(n, edges);
}

Graph stochastic_block_model(std::span<const int> block_of,
                             const std::vector<std::vector<double>>& probs, RngSeed seed) {
    const int n = static_cast<int>(block_of.size());
    require_size(n, "sbm");
    int num_blocks = 0;
    for (int b : block_of) {
        if (b < 0) throw std::invalid_argument("sbm: negative block index");
        num_blocks = std::max(num_blocks, b + 1);
    }
    std::vector<int> block_count(num_blocks, 0);
    for (int b : block_of) ++block_count[b];
    for (int b = 0; b < num_blocks; ++b)
        if (block_count[b] == 0)
            throw std::invalid_argument("sbm: empty partition block " + std::to_string(b));
    if (static_cast<int>(probs.size()) != num_blocks)
        throw std::invalid_argument("sbm: probability matrix size does not match block count");
    for (int i = 0; i < num_blocks; ++i) {
        if (static_cast<int>(probs[i].size()) != num_blocks)
            throw std::invalid_argument("sbm: probability matrix is not square");
        for (int j = 0; j < num_blocks; ++j) {
            require_probability(probs[i][j], "sbm");
            if (probs[i][j] != probs[j][i])
                throw std::invalid_argument("sbm: probability matrix must be symmetric");
        }
    }

    Rng rng(seed);
    std::vector<EdgeInput> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(probs[block_of[i]][block_of[j]])) edges.push_back({i, j});
    return Graph::build(n, edges);
}

Graph uniform_random_tree(int n, RngSeed seed) {
    require_size(n, "tree");
    if (n == 1) return Graph::build(1, {});
    if (n == 2) {
        const EdgeInput e{0, 1};
        return Graph::build(2, {&e, 1});
    }

    Rng rng(seed);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    std::vector<EdgeInput> edges;
    edges.reserve(n - 1);
    for (int x : prufer) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, x});
        if (--degree[x] == 1) leaves.push(x);
    }
    const int u = leaves.top();
    leaves.pop();
    const int v = leaves.top();
    edges.push_back({u, v});
    return Graph::build(n, edges);
}

}  // namespace mdim
