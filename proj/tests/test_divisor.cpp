#include <doctest.h>

#include <random>

#include "iwg/divisor.hpp"
#include "iwg/errors.hpp"
#include "test_helpers.hpp"

using namespace iwg;

TEST_CASE("divisor degree and arithmetic") {
    Divisor d({{1, 2}, {3, -5}, {4, 0}});
    CHECK(d.degree() == -3);
    CHECK(d.coefficient(4) == 0);
    CHECK(d.coefficients().size() == 2);  // zero coefficients are dropped

    Divisor e({{1, -2}, {2, 7}});
    CHECK((d + e).degree() == d.degree() + e.degree());
    CHECK((d - d) == Divisor());
    CHECK((d + e).coefficient(1) == 0);
}

TEST_CASE("principal divisors have degree zero") {
    Graph k3 = complete_graph(3);
    Divisor p1 = principal_divisor(k3, 1);
    CHECK(p1.coefficient(1) == 2);
    CHECK(p1.coefficient(2) == -1);
    CHECK(p1.coefficient(3) == -1);
    CHECK(p1.degree() == 0);
    CHECK_THROWS_AS(principal_divisor(k3, 4), input_error);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = iwg_test::random_graph(rng, 2, 7, 0.5);
        for (int v = 1; v <= g.vertex_count(); ++v)
            CHECK(principal_divisor(g, v).degree() == 0);
    }
}

TEST_CASE("laplacian images are principal combinations of degree zero") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = iwg_test::random_graph(rng, 2, 6, 0.5);
        Divisor d;
        for (int v = 1; v <= g.vertex_count(); ++v) d.set_coefficient(v, coeff(rng));
        Divisor image = laplacian_image(g, d);
        CHECK(image.degree() == 0);
        // the image decomposes over the principal divisors
        Divisor rebuilt;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            Divisor pv = principal_divisor(g, v);
            for (const auto& [w, c] : pv.coefficients())
                rebuilt.set_coefficient(w, rebuilt.coefficient(w) + d.coefficient(v) * c);
        }
        CHECK(image == rebuilt);
    }
}
