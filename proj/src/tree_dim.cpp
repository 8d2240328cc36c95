#include "mdim/tree_dim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mdim {

namespace {

void require_tree(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 1) throw std::invalid_argument("tree operations require n >= 1");
    if (static_cast<int>(g.edges().size()) != n - 1 || !is_connected(g))
        throw std::runtime_error("graph is not a tree");
    for (const Edge& e : g.edges())
        if (e.u == e.v) throw std::runtime_error("graph is not a tree");
}

}  // namespace

TreeClassification classify_tree(const Graph& g) {
    require_tree(g);
    const int n = g.num_vertices();
    TreeClassification out;

    std::map<int, std::vector<int>> assignment;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        out.leaves.push_back(v);
        // Walk the unique degree-2 chain from this leaf; the first vertex of
        // degree >= 3 claims it. A pure path has none.
        int prev = v;
        int cur = g.neighbors(v)[0].first;
        while (g.degree(cur) == 2) {
            const auto nb = g.neighbors(cur);
            const int next = (nb[0].first == prev) ? nb[1].first : nb[0].first;
            prev = cur;
            cur = next;
        }
        if (g.degree(cur) >= 3) assignment[cur].push_back(v);
    }
    for (auto& [major, leaves] : assignment) {
        std::sort(leaves.begin(), leaves.end());
        out.exterior_major.push_back(major);
        out.leaf_assignment.emplace_back(major, leaves);
    }
    return out;
}

ResolvingSet tree_metric_dimension(const Graph& g) {
    require_tree(g);
    const int n = g.num_vertices();
    ResolvingSet out;
    out.method = Method::tree_formula;

    if (n == 1) {
        out.verified = true;
        return out;
    }

    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    if (max_degree <= 2) {
        // Path: one endpoint suffices, and the leaf formula would say 2.
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) {
                out.vertices.push_back(v);
                break;
            }
    } else {
        const TreeClassification cls = classify_tree(g);
        std::vector<char> drop(n, 0);
        for (const auto& [major, leaves] : cls.leaf_assignment) drop[leaves.front()] = 1;
        for (int leaf : cls.leaves)
            if (!drop[leaf]) out.vertices.push_back(leaf);
    }

    const auto rows = distance_rows(g, out.vertices);
    out.verified = is_resolving_rows(rows, n);
    if (!out.verified) throw std::logic_error("tree formula produced a non-resolving set");
    return out;
}

}  // namespace mdim
