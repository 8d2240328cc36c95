#pragma once

#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

struct TreeClassification {
    std::vector<int> leaves;          // degree-1 vertices, ascending
    std::vector<int> exterior_major;  // degree >= 3, reaching a leaf through degree-2 vertices
    // exterior major vertex -> its associated leaves, both ascending. The
    // path from a leaf to its major vertex is unique in a tree, so the
    // assignment is well defined.
    std::vector<std::pair<int, std::vector<int>>> leaf_assignment;
};

// O(n) classification. Throws if g is not a tree (connected, |E| = n-1).
TreeClassification classify_tree(const Graph& g);

// beta(T) = #leaves - #exterior major vertices, witness built by dropping the
// lowest-id associated leaf of each exterior major vertex. Paths (max degree
// <= 2) return a single endpoint; the 1-vertex tree returns the empty set.
// The witness is verified before being returned.
ResolvingSet tree_metric_dimension(const Graph& g);

}  // namespace mdim
