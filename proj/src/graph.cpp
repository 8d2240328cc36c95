#include "mdim/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace mdim {

Graph Graph::build(int n, std::span<const EdgeInput> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::map<std::pair<int, int>, std::uint64_t> collapsed;
    for (const EdgeInput& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                        ", " + std::to_string(e.v) + ") with n=" + std::to_string(n));
        const auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = collapsed.emplace(key, e.w);
        if (!inserted) it->second = std::min(it->second, e.w);
    }

    Graph g;
    g.n_ = n;
    g.edges_.reserve(collapsed.size());
    for (const auto& [key, w] : collapsed) {
        g.edges_.push_back({key.first, key.second, w});
        if (w != 1) g.unit_weights_ = false;
    }

    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges_) {
        if (e.u == e.v) continue;  // stored, but never walked
        ++deg[e.u];
        ++deg[e.v];
    }
    g.adj_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.adj_offset_[v + 1] = g.adj_offset_[v] + deg[v];
    g.adj_.resize(g.adj_offset_[n]);
    std::vector<int> cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
    for (const Edge& e : g.edges_) {
        if (e.u == e.v) continue;
        g.adj_[cursor[e.u]++] = {e.v, e.w};
        g.adj_[cursor[e.v]++] = {e.u, e.w};
    }
    return g;
}

namespace {

void bfs_from(const Graph& g, int source, std::span<Dist> out) {
    std::fill(out.begin(), out.end(), kUnreachable);
    out[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const auto& [v, w] : g.neighbors(u)) {
            if (out[v] == kUnreachable) {
                out[v] = out[u] + 1;
                q.push(v);
            }
        }
    }
}

void dijkstra_from(const Graph& g, int source, std::span<Dist> out) {
    std::fill(out.begin(), out.end(), kUnreachable);
    out[source] = 0;
    using Item = std::pair<Dist, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, source});
    while (!pq.empty()) {
        const auto [du, u] = pq.top();
        pq.pop();
        if (du > out[u]) continue;
        for (const auto& [v, w] : g.neighbors(u)) {
            const Dist dv = du + w;
            if (out[v] == kUnreachable || dv < out[v]) {
                out[v] = dv;
                pq.push({dv, v});
            }
        }
    }
}

}  // namespace

void shortest_paths_from(const Graph& g, int source, std::span<Dist> out) {
    if (g.unit_weights())
        bfs_from(g, source, out);
    else
        dijkstra_from(g, source, out);
}

DistanceMatrix apsp_serial(const Graph& g) {
    const int n = g.num_vertices();
    DistanceMatrix d(n);
    for (int s = 0; s < n; ++s) shortest_paths_from(g, s, d.row(s));
    return d;
}

DistanceMatrix apsp(const Graph& g) {
    const int n = g.num_vertices();
    DistanceMatrix d(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int s = 0; s < n; ++s) shortest_paths_from(g, s, d.row(s));
    return d;
}

std::vector<std::vector<Dist>> distance_rows(const Graph& g, std::span<const int> sources) {
    std::vector<std::vector<Dist>> rows(sources.size(),
                                        std::vector<Dist>(g.num_vertices(), kUnreachable));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < sources.size(); ++i)
        shortest_paths_from(g, sources[i], rows[i]);
    return rows;
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const auto& [v, w] : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

}  // namespace mdim
