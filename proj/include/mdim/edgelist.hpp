#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Graph plus the external vertex names used in its source file. Generated
// graphs use decimal ids as labels.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[id] = external name

    int id_of(const std::string& label) const;  // throws on unknown labels
};

// Text edge-list format: '#' lines and blank lines ignored; first significant
// line is the vertex count n; each following line is "u v" or "u v w" with
// integer w >= 0. Endpoints are 0-based ids when every endpoint token is a
// decimal integer below n, arbitrary labels mapped by first appearance
// otherwise. Parse errors report filename:line.
LabeledGraph read_edge_list(std::istream& in, const std::string& filename);
LabeledGraph read_edge_list_file(const std::string& path);

// Canonical emission: n, then edges sorted by (min,max) endpoint ids, weight
// printed only when != 1. Re-parsing reproduces the same graph byte-for-byte
// on re-emission.
void write_edge_list(std::ostream& out, const LabeledGraph& g);
void write_edge_list(std::ostream& out, const Graph& g);

LabeledGraph with_default_labels(Graph g);

}  // namespace mdim
