#include <doctest.h>

#include <random>
#include <sstream>

#include "iwg/errors.hpp"
#include "iwg/graph.hpp"
#include "iwg/matrix.hpp"
#include "test_helpers.hpp"

using namespace iwg;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);       // loop
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), input_error);  // duplicate after normalization
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), input_error);
    CHECK_THROWS_AS(Graph(0, {}), input_error);

    Graph g(4, {{3, 1}, {1, 2}});  // normalized and sorted
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(4) == 0);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(2, 3));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_graph(3)));
    CHECK(is_connected(Graph(2, {{1, 2}})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(component_count(Graph(5, {{1, 2}, {3, 4}})) == 3);
    CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("graph file parsing") {
    Graph g = parse_graph_string("# a triangle\n3\n1 2\n1 3 # trailing comment\n2 3\n");
    CHECK(g == complete_graph(3));

    auto fails_with = [](const std::string& text, const std::string& fragment) {
        try {
            parse_graph_string(text);
            return false;
        } catch (const input_error& e) {
            return std::string(e.what()).find(fragment) != std::string::npos;
        }
    };
    CHECK(fails_with("", "missing vertex count"));
    CHECK(fails_with("3\n1 2\n1 2\n", "line 3"));
    CHECK(fails_with("3\n2 1\n", "i < j"));
    CHECK(fails_with("3\n1 4\n", "out of range"));
    CHECK(fails_with("3\n1\n", "expected an edge"));
    CHECK(fails_with("x\n", "vertex count"));
    CHECK(fails_with("3\n1 2 9\n", "unexpected token"));
}

TEST_CASE("format/parse round trip") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = iwg_test::random_graph(rng, 1, 8, 0.5);
        CHECK(parse_graph_string(format_graph(g)) == g);
    }
}

TEST_CASE("laplacian examples") {
    IntMatrix k3 = laplacian(complete_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 2 : -1));

    IntMatrix p2 = laplacian(Graph(2, {{1, 2}}));
    CHECK(p2(0, 0) == 1);
    CHECK(p2(0, 1) == -1);
    CHECK(p2(1, 0) == -1);
    CHECK(p2(1, 1) == 1);

    IntMatrix edgeless = laplacian(Graph(3, {}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(edgeless(i, j) == 0);
}

TEST_CASE("laplacian is symmetric with zero row sums") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = iwg_test::random_graph(rng, 2, 8, 0.5);
        IntMatrix L = laplacian(g);
        for (int i = 0; i < L.rows(); ++i) {
            mpz_class sum = 0;
            for (int j = 0; j < L.cols(); ++j) {
                sum += L(i, j);
                CHECK(L(i, j) == L(j, i));
            }
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("reduced laplacian examples") {
    IntMatrix r = reduced_laplacian(complete_graph(3), 3);
    CHECK(r.rows() == 2);
    CHECK(r(0, 0) == 2);
    CHECK(r(0, 1) == -1);
    CHECK(r(1, 0) == -1);
    CHECK(r(1, 1) == 2);

    IntMatrix rp2 = reduced_laplacian(Graph(2, {{1, 2}}), 2);
    CHECK(rp2.rows() == 1);
    CHECK(rp2(0, 0) == 1);

    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    IntMatrix rc4 = reduced_laplacian(c4, 1);
    const int expected[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rc4(i, j) == expected[i][j]);

    CHECK_THROWS_AS(reduced_laplacian(c4, 0), input_error);
    CHECK_THROWS_AS(reduced_laplacian(c4, 5), input_error);
}
