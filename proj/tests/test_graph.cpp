#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

Graph fig1() {
    const std::vector<EdgeInput> edges = {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 5}};
    return Graph::build(6, edges);
}

}  // namespace

TEST_CASE("build: smallest nontrivial graph") {
    const std::vector<EdgeInput> edges = {{0, 1}};
    const Graph g = Graph::build(2, edges);
    CHECK(g.num_vertices() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].w == 1);
}

TEST_CASE("build: parallel edges collapse to the minimum weight") {
    const std::vector<EdgeInput> edges = {{0, 1, 2}, {1, 0, 5}};
    const Graph g = Graph::build(3, edges);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.edges()[0].w == 2);
}

TEST_CASE("build: canonical edge order is sorted by (min, max)") {
    const std::vector<EdgeInput> edges = {{5, 2}, {1, 0}, {3, 1}};
    const Graph g = Graph::build(6, edges);
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[1].u == 1);
    CHECK(g.edges()[1].v == 3);
    CHECK(g.edges()[2].u == 2);
    CHECK(g.edges()[2].v == 5);
}

TEST_CASE("build: rejects out-of-range endpoints") {
    const std::vector<EdgeInput> edges = {{0, 7}};
    CHECK_THROWS_AS((void)Graph::build(3, edges), std::invalid_argument);
}

TEST_CASE("build: self-loops are stored but ignored by distances") {
    const std::vector<EdgeInput> edges = {{0, 0}, {0, 1}};
    const Graph g = Graph::build(2, edges);
    CHECK(g.edges().size() == 2);
    CHECK(g.degree(0) == 1);
    const DistanceMatrix d = apsp(g);
    CHECK(d(0, 0) == 0);
    CHECK(d(0, 1) == 1);
}

TEST_CASE("apsp: path distances") {
    const DistanceMatrix d = apsp(path_graph(6));
    CHECK(d(0, 5) == 5);
    for (int k = 0; k < 6; ++k) CHECK(d(0, k) == static_cast<Dist>(k));
}

TEST_CASE("apsp: six-vertex example graph") {
    const DistanceMatrix d = apsp(fig1());
    CHECK(d(0, 2) == 2);  // A..C
    CHECK(d(5, 0) == 3);  // F..A
    CHECK(d(5, 2) == 1);  // F..C
}

TEST_CASE("apsp: complete graph has unit off-diagonal distances") {
    const DistanceMatrix d = apsp(complete_graph(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(d(u, v) == static_cast<Dist>(u == v ? 0 : 1));
}

TEST_CASE("apsp: weighted graphs go through dijkstra") {
    const std::vector<EdgeInput> edges = {{0, 1, 10}, {0, 2, 1}, {2, 1, 2}, {1, 3, 0}};
    const Graph g = Graph::build(4, edges);
    CHECK_FALSE(g.unit_weights());
    const DistanceMatrix d = apsp(g);
    CHECK(d(0, 1) == 3);  // via the weight-1 + weight-2 detour
    CHECK(d(0, 3) == 3);  // zero-weight edge
    CHECK(d(1, 3) == 0);
}

TEST_CASE("apsp: symmetric, zero diagonal, triangle inequality on random graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = oracle::random_graph(40, 0.08, seed);
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        for (int u = 0; u < n; ++u) {
            CHECK(d(u, u) == 0);
            for (int v = 0; v < n; ++v) CHECK(d(u, v) == d(v, u));
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w) {
                    if (d(u, v) == kUnreachable || d(v, w) == kUnreachable ||
                        d(u, w) == kUnreachable)
                        continue;
                    CHECK(d(u, w) <= d(u, v) + d(v, w));
                }
    }
}

TEST_CASE("apsp: parallel equals serial") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Graph g = oracle::random_graph(60, 0.1, seed);
        const DistanceMatrix a = apsp(g);
        const DistanceMatrix b = apsp_serial(g);
        for (int u = 0; u < 60; ++u)
            for (int v = 0; v < 60; ++v) CHECK(a(u, v) == b(u, v));
    }
}

TEST_CASE("disjoint union is unreachable exactly across parts; join never is") {
    const Graph a = path_graph(3);
    const Graph b = complete_graph(2);
    const DistanceMatrix du = apsp(disjoint_union(a, b));
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
            const bool crosses = (u < 3) != (v < 3);
            CHECK((du(u, v) == kUnreachable) == crosses);
        }
    const DistanceMatrix dj = apsp(join(a, b));
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(dj(u, v) != kUnreachable);
}

TEST_CASE("join of K_1 with (K_1 u K_2) has 4 vertices and the cross edges") {
    const Graph g = join(complete_graph(1), disjoint_union(complete_graph(1), complete_graph(2)));
    CHECK(g.num_vertices() == 4);
    CHECK(g.degree(0) == 3);
}

TEST_CASE("hypercube generator") {
    const Graph q3 = hypercube(3);
    CHECK(q3.num_vertices() == 8);
    CHECK(q3.edges().size() == 12);
    const DistanceMatrix d = apsp(q3);
    CHECK(d(0, 7) == 3);  // 000 to 111
}

TEST_CASE("random tree: connected, acyclic, deterministic under seed") {
    for (int n : {2, 3, 5, 17, 100}) {
        const Graph t = uniform_random_tree(n, RngSeed{42});
        CHECK(t.num_vertices() == n);
        CHECK(static_cast<int>(t.edges().size()) == n - 1);
        CHECK(is_connected(t));
    }
    const Graph a = uniform_random_tree(5, RngSeed{7});
    const Graph b = uniform_random_tree(5, RngSeed{7});
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].u == b.edges()[i].u);
        CHECK(a.edges()[i].v == b.edges()[i].v);
    }
}

TEST_CASE("random tree sampling is near-uniform over the 16 labeled trees on 4 vertices") {
    std::map<std::vector<std::pair<int, int>>, int> counts;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        const Graph t = uniform_random_tree(4, RngSeed{static_cast<std::uint64_t>(s)});
        std::vector<std::pair<int, int>> key;
        for (const Edge& e : t.edges()) key.emplace_back(e.u, e.v);
        ++counts[key];
    }
    CHECK(counts.size() == 16);
    for (const auto& [key, c] : counts) {
        const double freq = static_cast<double>(c) / samples;
        CHECK(std::abs(freq - 1.0 / 16) < 0.02);
    }
}

TEST_CASE("er generator: determinism and probability edges") {
    const Graph a = erdos_renyi(30, 0.3, RngSeed{5});
    const Graph b = erdos_renyi(30, 0.3, RngSeed{5});
    CHECK(a.edges().size() == b.edges().size());
    CHECK(erdos_renyi(10, 0.0, RngSeed{1}).edges().empty());
    CHECK(erdos_renyi(10, 1.0, RngSeed{1}).edges().size() == 45);
    CHECK_THROWS_AS((void)erdos_renyi(10, 1.5, RngSeed{1}), std::invalid_argument);
}

TEST_CASE("sbm generator validates the partition and matrix") {
    const std::vector<int> block_of = {0, 0, 1, 1};
    const std::vector<std::vector<double>> probs = {{1.0, 0.0}, {0.0, 1.0}};
    const Graph g = stochastic_block_model(block_of, probs, RngSeed{3});
    CHECK(g.num_vertices() == 4);
    CHECK(g.edges().size() == 2);  // one inside each block, none across

    const std::vector<int> gap = {0, 0, 2, 2};  // block 1 empty
    CHECK_THROWS_AS((void)stochastic_block_model(gap, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
                                                 RngSeed{0}),
                    std::invalid_argument);
    const std::vector<std::vector<double>> asym = {{0.5, 0.1}, {0.2, 0.5}};
    CHECK_THROWS_AS((void)stochastic_block_model(block_of, asym, RngSeed{0}),
                    std::invalid_argument);
}

TEST_CASE("distance_rows matches full apsp") {
    const Graph g = oracle::random_graph(30, 0.15, 9);
    const DistanceMatrix d = apsp(g);
    const std::vector<int> sources = {0, 7, 29};
    const auto rows = distance_rows(g, sources);
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (int v = 0; v < 30; ++v) CHECK(rows[i][v] == d(sources[i], v));
}
