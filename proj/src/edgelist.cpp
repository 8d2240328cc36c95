#include "mdim/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mdim {

namespace {

[[noreturn]] void parse_fail(const std::string& file, int line, const std::string& msg) {
    throw std::runtime_error(file + ":" + std::to_string(line) + ": " + msg);
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

struct RawLine {
    int line_no;
    std::vector<std::string> tokens;
};

}  // namespace

int LabeledGraph::id_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex label: " + label);
}

LabeledGraph read_edge_list(std::istream& in, const std::string& filename) {
    std::vector<RawLine> lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        lines.push_back({line_no, std::move(tokens)});
    }
    if (lines.empty()) throw std::runtime_error(filename + ": empty edge list (missing vertex count)");

    std::uint64_t n64 = 0;
    if (lines[0].tokens.size() != 1 || !parse_u64(lines[0].tokens[0], n64) || n64 > (1u << 30))
        parse_fail(filename, lines[0].line_no, "expected a single integer vertex count");
    const int n = static_cast<int>(n64);

    // Numeric mode: every endpoint token is a decimal id below n. Otherwise
    // tokens are labels, mapped by first appearance.
    bool numeric = true;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        if (t.size() < 2 || t.size() > 3)
            parse_fail(filename, lines[i].line_no, "expected \"u v\" or \"u v w\"");
        for (int j = 0; j < 2; ++j) {
            std::uint64_t id;
            if (!parse_u64(t[j], id) || id >= n64) numeric = false;
        }
    }

    std::vector<std::string> labels;
    std::unordered_map<std::string, int> label_id;
    auto intern = [&](const std::string& tok, int line) {
        if (numeric) {
            std::uint64_t id;
            parse_u64(tok, id);
            return static_cast<int>(id);
        }
        auto it = label_id.find(tok);
        if (it != label_id.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        if (id >= n) parse_fail(filename, line, "more distinct labels than the declared vertex count");
        labels.push_back(tok);
        label_id.emplace(tok, id);
        return id;
    };

    std::vector<EdgeInput> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        EdgeInput e;
        e.u = intern(t[0], lines[i].line_no);
        e.v = intern(t[1], lines[i].line_no);
        if (t.size() == 3) {
            if (!parse_u64(t[2], e.w))
                parse_fail(filename, lines[i].line_no, "weight must be a non-negative integer");
        }
        edges.push_back(e);
    }

    LabeledGraph out;
    out.graph = Graph::build(n, edges);
    if (numeric) {
        out.labels.reserve(n);
        for (int v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
    } else {
        // Unmentioned vertices keep their numeric name.
        for (int v = static_cast<int>(labels.size()); v < n; ++v) labels.push_back(std::to_string(v));
        out.labels = std::move(labels);
    }
    return out;
}

LabeledGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
    out << g.graph.num_vertices() << "\n";
    for (const Edge& e : g.graph.edges()) {
        out << g.labels[e.u] << " " << g.labels[e.v];
        if (e.w != 1) out << " " << e.w;
        out << "\n";
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v;
        if (e.w != 1) out << " " << e.w;
        out << "\n";
    }
}

LabeledGraph with_default_labels(Graph g) {
    LabeledGraph out;
    out.labels.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) out.labels.push_back(std::to_string(v));
    out.graph = std::move(g);
    return out;
}

}  // namespace mdim
