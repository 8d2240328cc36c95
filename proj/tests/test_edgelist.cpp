#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mdim/edgelist.hpp"

using namespace mdim;

namespace {

LabeledGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in, "test.edges");
}

std::string emit(const LabeledGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace

TEST_CASE("numeric edge lists use ids directly") {
    const LabeledGraph g = parse("# comment\n\n3\n0 1\n1 2 4\n");
    CHECK(g.graph.num_vertices() == 3);
    REQUIRE(g.graph.edges().size() == 2);
    CHECK(g.graph.edges()[1].w == 4);
    CHECK(g.labels[2] == "2");
}

TEST_CASE("string labels map by first appearance") {
    const LabeledGraph g = parse("3\nB A\nA C\n");
    CHECK(g.labels == std::vector<std::string>{"B", "A", "C"});
    CHECK(g.id_of("A") == 1);
    CHECK_THROWS_AS((void)g.id_of("Z"), std::invalid_argument);
}

TEST_CASE("tokens that look numeric but exceed n force label mode") {
    const LabeledGraph g = parse("2\n7 8\n");
    CHECK(g.labels == std::vector<std::string>{"7", "8"});
    CHECK(g.graph.edges()[0].u == 0);
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse("3\n0 1\n0 1 2 3\n");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("test.edges:3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse(""), std::runtime_error);
    CHECK_THROWS_AS(parse("2\n0 1 -3\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("not_a_number\n"), std::runtime_error);
}

TEST_CASE("label mode rejects more labels than declared vertices") {
    CHECK_THROWS_AS(parse("2\nA B\nB C\n"), std::runtime_error);
}

TEST_CASE("canonical emission is a fixed point") {
    const LabeledGraph g = parse("4\nD C 2\nA B\nB C\nB A 1\n");
    const std::string once = emit(g);
    std::istringstream in(once);
    const LabeledGraph reparsed = read_edge_list(in, "roundtrip");
    CHECK(emit(reparsed) == once);
    CHECK(reparsed.graph.num_vertices() == g.graph.num_vertices());
    CHECK(reparsed.graph.edges().size() == g.graph.edges().size());
}

TEST_CASE("weights of 1 are omitted on output") {
    const LabeledGraph g = parse("2\n0 1 1\n");
    CHECK(emit(g) == "2\n0 1\n");
}

TEST_CASE("isolated vertices survive a round trip") {
    const LabeledGraph g = parse("5\n0 1\n");
    std::istringstream in(emit(g));
    CHECK(read_edge_list(in, "x").graph.num_vertices() == 5);
}
