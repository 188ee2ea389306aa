#include <doctest.h>

#include <random>
#include <set>

#include "iwg/errors.hpp"
#include "iwg/graph.hpp"
#include "iwg/matrix.hpp"
#include "iwg/voltage.hpp"
#include "test_helpers.hpp"

using namespace iwg;

namespace {

VoltageAssignment triangle_single(long long p) {
    return make_voltage_assignment(complete_graph(3), {{{1, 2}, 1}}, p);
}

std::mt19937_64 rng(711);

VoltageAssignment random_va(long long p, int nmin = 3, int nmax = 5) {
    Graph g = iwg_test::random_connected_graph(rng, nmin, nmax);
    auto volts = iwg_test::random_voltages(rng, g, -9, 9);
    return make_voltage_assignment(std::move(g), std::move(volts), p);
}

}  // namespace

TEST_CASE("voltage assignment validation") {
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(make_voltage_assignment(k3, {}, 6), input_error);       // not prime
    CHECK_THROWS_AS(make_voltage_assignment(k3, {{{2, 1}, 1}}, 2), input_error);  // orientation
    CHECK_THROWS_AS(make_voltage_assignment(Graph(3, {{1, 2}}), {{{1, 3}, 1}}, 2),
                    input_error);  // not a base edge

    VoltageAssignment va = triangle_single(2);
    CHECK(va.voltage_on(1, 2) == 1);
    CHECK(va.voltage_on(2, 1) == -1);
    CHECK(va.voltage_on(1, 3) == 0);
}

TEST_CASE("voltage file parsing") {
    Graph k3 = complete_graph(3);
    VoltageAssignment va = parse_voltages_string(k3, "# only one edge carries voltage\n1 2 5\n", 3);
    CHECK(va.voltage_on(1, 2) == 5);
    CHECK(va.voltage_on(2, 3) == 0);

    auto fails_with = [&](const std::string& text, const std::string& fragment) {
        try {
            parse_voltages_string(complete_graph(3), text, 3);
            return false;
        } catch (const input_error& e) {
            return std::string(e.what()).find(fragment) != std::string::npos;
        }
    };
    CHECK(fails_with("1 2 1\n1 2 2\n", "line 2"));
    CHECK(fails_with("2 1 1\n", "i < j"));
    CHECK(fails_with("1 2\n", "expected"));
    CHECK(fails_with("1 2 1 9\n", "unexpected token"));
    CHECK(fails_with("x y z\n", "expected"));
    CHECK(fails_with("1 2 x\n", "expected"));

    // voltages over a restricted base: (1,3) is not an edge of the path
    CHECK_THROWS_AS(parse_voltages_string(Graph(3, {{1, 2}, {2, 3}}), "1 3 1\n", 2), input_error);
}

TEST_CASE("derive: triangle with one voltage over Z/2 is the 6-cycle") {
    DerivedGraph d = derive(triangle_single(2), 1);
    CHECK(d.graph.vertex_count() == 6);
    CHECK(d.sheets == 2);
    CHECK(d.graph.edges() ==
          std::vector<Edge>{{1, 3}, {1, 5}, {2, 3}, {2, 4}, {4, 6}, {5, 6}});
    for (int v = 1; v <= 6; ++v) CHECK(d.graph.degree(v) == 2);
    CHECK(is_connected(d.graph));
}

TEST_CASE("derive: zero voltages give disjoint copies of the base") {
    Graph k3 = complete_graph(3);
    VoltageAssignment va = make_voltage_assignment(k3, {}, 3);
    DerivedGraph d = derive(va, 1);
    CHECK(d.graph.vertex_count() == 9);
    CHECK(component_count(d.graph) == 3);
    for (int v = 1; v <= 9; ++v) CHECK(d.graph.degree(v) == 2);
}

TEST_CASE("derive: level 0 is the base graph") {
    VoltageAssignment va = random_va(5);
    DerivedGraph d = derive(va, 0);
    CHECK(d.graph == va.base);
    CHECK(d.sheets == 1);
}

TEST_CASE("derive guards") {
    VoltageAssignment va = triangle_single(2);
    CHECK_THROWS_AS(derive(va, 10, 100), guard_error);
    CHECK_THROWS_AS(derive(va, -1), input_error);
}

TEST_CASE("derived labeling round trip") {
    DerivedGraph d = derive(triangle_single(3), 2);
    for (int i = 1; i <= 3; ++i)
        for (long long g = 0; g < d.sheets; ++g) {
            int label = d.vertex_label(i, g);
            CHECK(d.project(label) == i);
            CHECK(d.sheet_of(label) == g);
        }
}

TEST_CASE("derived structure: fibers, degrees, no intra-fiber edges") {
    for (long long p : {2, 3, 5}) {
        VoltageAssignment va = random_va(p);
        for (long long m = 0; m <= 2; ++m) {
            DerivedGraph d = derive(va, m);
            const int n = va.base.vertex_count();
            CHECK(d.graph.vertex_count() == n * d.sheets);
            std::vector<long long> fiber(n + 1, 0);
            for (int v = 1; v <= d.graph.vertex_count(); ++v) {
                ++fiber[d.project(v)];
                CHECK(d.graph.degree(v) == va.base.degree(d.project(v)));
            }
            for (int i = 1; i <= n; ++i) CHECK(fiber[i] == d.sheets);
            for (const auto& [u, v] : d.graph.edges()) CHECK(d.project(u) != d.project(v));
        }
    }
}

TEST_CASE("intermediate covers match direct derivation") {
    VoltageAssignment tri = triangle_single(2);
    CHECK(intermediate_cover(tri, 2, 0).graph == tri.base);
    CHECK(intermediate_cover(tri, 2, 2).graph == derive(tri, 2).graph);
    CHECK(intermediate_cover(tri, 2, 1).graph == derive(tri, 1).graph);  // the 6-cycle again

    for (long long p : {2, 3}) {
        VoltageAssignment va = random_va(p);
        for (long long m = 0; m <= 3; ++m)
            for (long long k = 0; k <= m; ++k)
                CHECK(intermediate_cover(va, m, k).graph == derive(va, k).graph);
    }
    CHECK_THROWS_AS(intermediate_cover(tri, 1, 2), input_error);
}

TEST_CASE("galois action: automorphisms forming Z/p^m") {
    DerivedGraph d = derive(triangle_single(2), 1);

    auto id = galois_action(d, 0);
    for (int v = 1; v <= 6; ++v) CHECK(id[v - 1] == v);

    auto swap_sheets = galois_action(d, 1);
    std::set<Edge> edges(d.graph.edges().begin(), d.graph.edges().end());
    for (const auto& [u, v] : d.graph.edges()) {
        int nu = swap_sheets[u - 1], nv = swap_sheets[v - 1];
        CHECK(edges.count(nu < nv ? Edge{nu, nv} : Edge{nv, nu}) == 1);
        CHECK(d.project(nu) == d.project(u));
    }

    DerivedGraph d9 = derive(triangle_single(3), 2);
    std::set<std::vector<int>> distinct;
    for (long long g = 0; g < d9.sheets; ++g) distinct.insert(galois_action(d9, g));
    CHECK(distinct.size() == static_cast<size_t>(d9.sheets));

    // additive group law
    std::uniform_int_distribution<long long> pick(0, d9.sheets - 1);
    for (int trial = 0; trial < 10; ++trial) {
        long long g1 = pick(rng), g2 = pick(rng);
        auto a1 = galois_action(d9, g1);
        auto a2 = galois_action(d9, g2);
        auto a12 = galois_action(d9, g1 + g2);
        for (int v = 1; v <= d9.graph.vertex_count(); ++v)
            CHECK(a12[v - 1] == a1[a2[v - 1] - 1]);
    }
}

TEST_CASE("voltage laplacian entries and augmentation") {
    auto L = voltage_laplacian(triangle_single(2));
    CHECK(L[0][0] == GroupRingElement::constant(2));
    CHECK(L[0][1] == GroupRingElement::monomial(-1, 1));
    CHECK(L[1][0] == GroupRingElement::monomial(-1, -1));
    CHECK(L[0][2] == GroupRingElement::constant(-1));
    CHECK(L[2][1] == GroupRingElement::constant(-1));

    auto Lp2 = voltage_laplacian(make_voltage_assignment(Graph(2, {{1, 2}}), {{{1, 2}, 1}}, 2));
    CHECK(Lp2[0][0] == GroupRingElement::constant(1));
    CHECK(Lp2[0][1] == GroupRingElement::monomial(-1, 1));
    CHECK(Lp2[1][0] == GroupRingElement::monomial(-1, -1));
    CHECK(Lp2[1][1] == GroupRingElement::constant(1));

    for (long long p : {2, 3, 5}) {
        VoltageAssignment va = random_va(p);
        auto Lv = voltage_laplacian(va);
        IntMatrix ordinary = laplacian(va.base);
        for (int i = 0; i < va.base.vertex_count(); ++i)
            for (int j = 0; j < va.base.vertex_count(); ++j)
                CHECK(Lv[i][j].evaluate_at_one() == ordinary(i, j));
    }
}
