#include <doctest.h>

#include "iwg/errors.hpp"
#include "iwg/jacobian.hpp"
#include "iwg/tower.hpp"
#include "test_helpers.hpp"

using namespace iwg;

namespace {

TowerSpec k3_tower(long long p, long long M) {
    return TowerSpec{make_voltage_assignment(complete_graph(3), {{{1, 2}, 1}}, p), M};
}

}  // namespace

TEST_CASE("K_3 tower over Z/3^m") {
    TowerReport r = analyze_tower(k3_tower(3, 2));
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels[0].vertices == 3);
    CHECK(r.levels[1].vertices == 9);
    CHECK(r.levels[2].vertices == 27);
    for (const auto& rec : r.levels) CHECK(rec.connected);
    CHECK(r.levels[0].e_m == 1);  // J(K_3) = Z/3
    CHECK(r.levels[1].e_m == 2);
    CHECK(r.levels[2].e_m == 3);
    CHECK_FALSE(r.first_disconnected_level);
    CHECK_FALSE(r.truncated_at_level);
}

TEST_CASE("zero voltages disconnect at level 1") {
    TowerSpec spec{make_voltage_assignment(complete_graph(3), {}, 2), 1};
    TowerReport r = analyze_tower(spec);
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].connected);
    CHECK(r.levels[0].e_m);
    CHECK_FALSE(r.levels[1].connected);
    CHECK_FALSE(r.levels[1].e_m);
    CHECK_FALSE(r.levels[1].p_rank);
    CHECK_FALSE(r.levels[1].p_part_factors);
    CHECK(r.first_disconnected_level == 1);
}

TEST_CASE("depth-zero tower reduces to the base Jacobian") {
    TowerReport r = analyze_tower(k3_tower(5, 0));
    REQUIRE(r.levels.size() == 1);
    InvariantFactors f = jacobian(complete_graph(3));
    PSylow s = p_sylow(f, 5);
    CHECK(r.levels[0].e_m == s.order_exponent);
    CHECK(r.levels[0].p_rank == s.p_rank);
    CHECK(r.levels[0].vertices == 3);
}

TEST_CASE("level_graph") {
    TowerSpec spec = k3_tower(2, 3);
    CHECK(level_graph(spec, 0).graph == complete_graph(3));
    DerivedGraph d = level_graph(spec, 1);
    CHECK(d.graph.vertex_count() == 6);
    for (int v = 1; v <= 6; ++v) CHECK(d.graph.degree(v) == 2);
    CHECK_THROWS_AS(level_graph(spec, 4), input_error);
    CHECK_THROWS_AS(level_graph(spec, -1), input_error);
}

TEST_CASE("tower levels equal intermediate covers of deeper levels") {
    TowerSpec spec = k3_tower(2, 3);
    for (long long m = 0; m <= 3; ++m)
        for (long long k = 0; k <= m; ++k)
            CHECK(intermediate_cover(spec.va, m, k).graph == level_graph(spec, k).graph);
}

TEST_CASE("vertex guard truncates with a marker") {
    TowerSpec spec = k3_tower(3, 3);
    spec.max_vertices = 10;
    TowerReport r = analyze_tower(spec);
    CHECK(r.truncated_at_level == 2);  // 27 vertices exceed the guard
    CHECK(r.levels.size() == 2);
    std::string json = tower_report_json(r);
    CHECK(json.find("\"truncated_at_level\":2") != std::string::npos);
}

TEST_CASE("tower report JSON document") {
    TowerReport r = analyze_tower(k3_tower(3, 1));
    CHECK(tower_report_json(r) ==
          "{\"p\":3,\"levels\":["
          "{\"m\":0,\"vertices\":3,\"connected\":true,\"e_m\":1,\"p_rank\":1,\"p_part_factors\":[\"3\"]},"
          "{\"m\":1,\"vertices\":9,\"connected\":true,\"e_m\":2,\"p_rank\":1,\"p_part_factors\":[\"9\"]}"
          "],\"first_disconnected_level\":null}");

    TowerSpec disconnected{make_voltage_assignment(complete_graph(3), {}, 2), 1};
    std::string json = tower_report_json(analyze_tower(disconnected));
    CHECK(json.find("\"first_disconnected_level\":1") != std::string::npos);
    CHECK(json.find("\"e_m\":null") != std::string::npos);
    CHECK(json.find("\"p_part_factors\":null") != std::string::npos);
}

TEST_CASE("tower report CSV") {
    TowerReport r = analyze_tower(k3_tower(3, 1));
    CHECK(tower_report_csv(r) ==
          "m,vertices,connected,e_m,p_rank,p_part_factors\n"
          "0,3,true,1,1,3\n"
          "1,9,true,2,1,9\n");

    TowerSpec disconnected{make_voltage_assignment(complete_graph(3), {}, 2), 1};
    CHECK(tower_report_csv(analyze_tower(disconnected)) ==
          "m,vertices,connected,e_m,p_rank,p_part_factors\n"
          "0,3,true,0,0,\n"
          "1,6,false,,,\n");
}

TEST_CASE("total order is attached only when requested") {
    TowerSpec spec = k3_tower(3, 1);
    CHECK_FALSE(analyze_tower(spec).levels[0].total_order);
    spec.include_total_order = true;
    TowerReport r = analyze_tower(spec);
    CHECK(r.levels[0].total_order == mpz_class(3));
    std::string json = tower_report_json(r);
    CHECK(json.find("\"total_order\":\"3\"") != std::string::npos);
}

TEST_CASE("tower runs are reproducible") {
    TowerSpec spec{make_voltage_assignment(complete_graph(4), {{{1, 2}, 1}, {{2, 3}, 5}}, 2), 3};
    CHECK(tower_report_json(analyze_tower(spec)) == tower_report_json(analyze_tower(spec)));
}

TEST_CASE("disconnected base poisons every level") {
    Graph two_triangles(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    TowerSpec spec{make_voltage_assignment(two_triangles, {{{1, 2}, 1}}, 2), 1};
    TowerReport r = analyze_tower(spec);
    CHECK(r.first_disconnected_level == 0);
    for (const auto& rec : r.levels) CHECK_FALSE(rec.e_m);
}
