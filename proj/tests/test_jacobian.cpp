#include <doctest.h>

#include <random>

#include "iwg/errors.hpp"
#include "iwg/graph.hpp"
#include "iwg/jacobian.hpp"
#include "test_helpers.hpp"

using namespace iwg;

TEST_CASE("jacobian examples") {
    CHECK(jacobian(complete_graph(3)).factors == std::vector<mpz_class>{3});

    // trees present the trivial group as an empty factor list
    CHECK(jacobian(Graph(3, {{1, 2}, {2, 3}})).factors.empty());
    CHECK(jacobian(Graph(1, {})).factors.empty());

    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(jacobian(c4).factors == std::vector<mpz_class>{4});

    CHECK(jacobian(complete_graph(4)).factors == std::vector<mpz_class>{4, 4});

    CHECK_THROWS_AS(jacobian(Graph(2, {})), math_error);
}

TEST_CASE("spanning tree counts") {
    CHECK(spanning_tree_count(complete_graph(3)) == 3);
    CHECK(spanning_tree_count(Graph(3, {{1, 2}, {2, 3}})) == 1);
    CHECK(spanning_tree_count(complete_graph(4)) == 16);
    CHECK(spanning_tree_count(Graph(2, {})) == 0);
    CHECK(spanning_tree_count(Graph(1, {})) == 1);
}

TEST_CASE("brute force tree count oracle") {
    CHECK(brute_force_tree_count(complete_graph(3)) == 3);
    CHECK(brute_force_tree_count(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == 4);
    CHECK(brute_force_tree_count(Graph(2, {})) == 0);
    CHECK(brute_force_tree_count(Graph(1, {})) == 1);
    // K_8 has 28 edges, over the enumeration guard
    CHECK_THROWS_AS(brute_force_tree_count(complete_graph(8)), guard_error);
}

TEST_CASE("matrix tree triple agreement on random graphs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = iwg_test::random_connected_graph(rng, 2, 7);
        mpz_class via_factors = jacobian(g).group_order();
        CHECK(via_factors == spanning_tree_count(g));
        CHECK(via_factors == brute_force_tree_count(g));
    }
}

TEST_CASE("jacobian is independent of the removed vertex") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = iwg_test::random_connected_graph(rng, 2, 7);
        InvariantFactors first = jacobian(g, 1);
        for (int v = 2; v <= g.vertex_count(); ++v) {
            InvariantFactors other = jacobian(g, v);
            CHECK(other.factors == first.factors);
            CHECK(other.rank_of_free_part == first.rank_of_free_part);
        }
    }
}

TEST_CASE("reference and modular strategies agree") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = iwg_test::random_connected_graph(rng, 3, 7);
        CHECK(jacobian(g, 1, SnfStrategy::reference).factors ==
              jacobian(g, 1, SnfStrategy::modular).factors);
    }
}

TEST_CASE("p_sylow extraction") {
    InvariantFactors f;
    f.factors = {2, 6, 12};
    PSylow s = p_sylow(f, 2);
    CHECK(s.order_exponent == 4);
    CHECK(s.p_rank == 3);
    CHECK(s.p_part_factors == std::vector<mpz_class>{2, 2, 4});

    f.factors = {3};
    s = p_sylow(f, 2);
    CHECK(s.order_exponent == 0);
    CHECK(s.p_rank == 0);
    CHECK(s.p_part_factors.empty());

    f.factors = {4, 4, 4};
    s = p_sylow(f, 2);
    CHECK(s.order_exponent == 6);
    CHECK(s.p_rank == 3);
    CHECK(s.p_part_factors == std::vector<mpz_class>{4, 4, 4});

    CHECK_THROWS_AS(p_sylow(f, 6), input_error);
    CHECK_THROWS_AS(p_sylow(f, 1), input_error);
}

TEST_CASE("sylow exponents over all primes recover the group order") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = iwg_test::random_connected_graph(rng, 2, 6);
        InvariantFactors f = jacobian(g);
        mpz_class order = f.group_order();
        mpz_class rebuilt = 1;
        for (const auto& [p, e] : iwg_test::factorize(order)) {
            PSylow s = p_sylow(f, p);
            CHECK(s.order_exponent == e);
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(s.order_exponent));
            rebuilt *= pe;
        }
        CHECK(rebuilt == order);
    }
}
