#include <doctest.h>

#include <random>

#include <json.hpp>

#include "cgraphs/construct.hpp"
#include "cgraphs/graph_io.hpp"

using namespace cgraphs;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 golden encodings") {
    CHECK(emit_graph6(Graph::complete(2)) == "A_");
    CHECK(emit_graph6(Graph::empty_graph(0)) == "?");
    CHECK(emit_graph6(Graph::empty_graph(2)) == "A?");
    CHECK(parse_graph6("A_") == Graph::complete(2));
    CHECK(parse_graph6("?").order() == 0);

    Graph fig1 = build_cgraph(Composition({3, 2, 2, 3})).first;
    CHECK(parse_graph6(emit_graph6(fig1)) == fig1);
}

TEST_CASE("graph6 round trips") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& c : even_compositions_of(n)) {
            Graph g = build_cgraph(c).first;
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
        }

    std::mt19937 rng(8686);
    for (int n = 0; n <= 20; ++n)
        for (int it = 0; it < 100; ++it) {
            Graph g = random_graph(rng, n, 0.4);
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
        }

    SUBCASE("multi-byte order header") {
        std::mt19937 rng2(99);
        for (int n : {63, 64, 100}) {
            Graph g = random_graph(rng2, n, 0.1);
            std::string enc = emit_graph6(g);
            CHECK(enc[0] == '~');
            CHECK(parse_graph6(enc) == g);
        }
    }
}

TEST_CASE("graph6 parse errors carry kind and offset") {
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    }
    SUBCASE("out-of-range byte") {
        try {
            parse_graph6("A\x20");
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::OutOfRange);
            CHECK(e.offset() == 1);
        }
    }
    SUBCASE("truncated payload") {
        try {
            parse_graph6("B");  // n = 3 needs one payload byte
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::Truncated);
            CHECK(e.offset() == 1);
        }
    }
    SUBCASE("trailing bytes") {
        try {
            parse_graph6("A_?");
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::TrailingBytes);
            CHECK(e.offset() == 2);
        }
    }
    SUBCASE("nonzero padding") {
        try {
            parse_graph6("A@");  // only the leading bit of the byte is real
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::BadPadding);
            CHECK(e.offset() == 1);
        }
    }
    SUBCASE("non-minimal size header") {
        try {
            parse_graph6("~??B");  // n = 3 must use the short form
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::BadHeader);
        }
        try {
            parse_graph6("~~??????");  // n = 0 in the 36-bit form
            FAIL("expected error");
        } catch (const Graph6Error& e) {
            CHECK(e.kind() == Graph6Error::Kind::BadHeader);
        }
    }
    SUBCASE("oversized order is rejected") {
        // n = 2^18 - 1 = 262143 parses in the long form but exceeds the guard
        try {
            parse_graph6("~~??????");
            FAIL("expected error");
        } catch (const Graph6Error&) {
        }
        CHECK_THROWS_AS(parse_graph6("~~?~????"), Graph6Error);
    }
}

TEST_CASE("edge list format") {
    Graph g = build_cgraph(Composition({2, 2})).first;
    CHECK(parse_edgelist(emit_edgelist(g)) == g);
    CHECK(parse_edgelist("3\n") == Graph::empty_graph(3));
    CHECK(parse_edgelist(emit_edgelist(Graph::empty_graph(0))).order() == 0);
    CHECK(parse_edgelist("2\n0 1\n") == Graph::complete(2));

    CHECK_THROWS_AS(parse_edgelist(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("2\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("2\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("2\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("2\n0 x\n"), std::invalid_argument);
}

TEST_CASE("json format") {
    Graph g = build_cgraph(Composition({1, 2})).first;
    CHECK(parse_graph_json(emit_graph_json(g)) == g);
    CHECK(parse_graph_json(R"({"n": 2, "adj": [[1], [0]]})") == Graph::complete(2));

    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "adj": [[1], []]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "adj": [[0], [1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json("not json"), nlohmann::json::exception);
}

TEST_CASE("format dispatch") {
    CHECK(parse_format_name("graph6") == GraphFormat::Graph6);
    CHECK(parse_format_name("edgelist") == GraphFormat::EdgeList);
    CHECK(parse_format_name("json") == GraphFormat::Json);
    CHECK_FALSE(parse_format_name("dot").has_value());

    std::mt19937 rng(11);
    Graph g = random_graph(rng, 9, 0.5);
    for (GraphFormat f : {GraphFormat::Graph6, GraphFormat::EdgeList, GraphFormat::Json})
        CHECK(parse_graph(emit_graph(g, f), f) == g);
}
