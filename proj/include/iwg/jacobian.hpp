#pragma once

#include <gmpxx.h>

#include <vector>

#include "iwg/graph.hpp"

namespace iwg {

// The Jacobian of a connected graph as an invariant factor decomposition.
struct InvariantFactors {
    std::vector<mpz_class> factors;  // each > 1, factors[i] | factors[i+1]
    int rank_of_free_part = 0;       // 0 for connected graphs

    // |J(X)|: product of the factors (only meaningful when the free part
    // is trivial).
    mpz_class group_order() const;
};

// Sylow p-subgroup data extracted from an invariant factor list.
struct PSylow {
    long long order_exponent = 0;        // e with |J_p| = p^e
    long long p_rank = 0;                // number of cyclic p-power factors
    std::vector<mpz_class> p_part_factors;  // p^{v_p(f)} for factors with v_p(f) > 0
};

// Which Smith normal form backend jacobian() runs on. `automatic` keeps
// small graphs on the pure reference elimination and switches large cover
// Laplacians to the balanced mod-determinant path; the two must always
// agree and the test suite cross-checks them on every run.
enum class SnfStrategy { automatic, reference, modular };

inline constexpr int kReferenceSnfMaxDim = 16;

// Invariant factors of coker(reduced_laplacian(g, removed)). The result is
// independent of the removed vertex. Throws math_error when g is
// disconnected (the Jacobian is finite only for connected graphs).
InvariantFactors jacobian(const Graph& g, int removed = 1,
                          SnfStrategy strategy = SnfStrategy::automatic);

// Determinant of a reduced Laplacian; 0 for disconnected graphs.
mpz_class spanning_tree_count(const Graph& g);

inline constexpr int kBruteForceEdgeLimit = 25;

// Independent oracle: enumerates all (n-1)-edge subsets and counts the
// spanning trees directly. Refuses graphs with more than
// kBruteForceEdgeLimit edges.
mpz_class brute_force_tree_count(const Graph& g);

PSylow p_sylow(const InvariantFactors& f, long long p);

}  // namespace iwg
