#include "iwg/jacobian.hpp"

#include <numeric>

#include "iwg/errors.hpp"
#include "iwg/matrix.hpp"
#include "iwg/numutil.hpp"
#include "iwg/snf.hpp"

namespace iwg {

mpz_class InvariantFactors::group_order() const {
    mpz_class order = 1;
    for (const auto& f : factors) order *= f;
    return order;
}

InvariantFactors jacobian(const Graph& g, int removed, SnfStrategy strategy) {
    if (!is_connected(g))
        throw math_error("jacobian: graph is disconnected; the Jacobian is finite only for connected graphs");
    IntMatrix reduced = reduced_laplacian(g, removed);
    const bool use_reference = strategy == SnfStrategy::reference ||
                               (strategy == SnfStrategy::automatic &&
                                reduced.rows() <= kReferenceSnfMaxDim);
    std::vector<mpz_class> diag = use_reference ? smith_normal_form(std::move(reduced)).diag
                                                : snf_diagonal_modular(std::move(reduced));
    InvariantFactors result;
    for (const auto& d : diag) {
        if (d == 0)
            ++result.rank_of_free_part;
        else if (d > 1)
            result.factors.push_back(d);
    }
    return result;
}

mpz_class spanning_tree_count(const Graph& g) {
    if (!is_connected(g)) return 0;
    return determinant(reduced_laplacian(g, 1));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

}  // namespace

mpz_class brute_force_tree_count(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > kBruteForceEdgeLimit)
        throw guard_error("brute_force_tree_count: " + std::to_string(m) + " edges exceed the limit of " +
                          std::to_string(kBruteForceEdgeLimit));
    const int k = n - 1;
    if (k == 0) return 1;  // single vertex
    if (k > m) return 0;

    // march over all k-subsets of the edge list
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    mpz_class count = 0;
    for (;;) {
        UnionFind uf(n);
        int merges = 0;
        for (int idx : pick) {
            const auto& [u, v] = g.edges()[idx];
            if (uf.unite(u, v)) ++merges;
        }
        if (merges == k) ++count;  // acyclic and spanning
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    return count;
}

PSylow p_sylow(const InvariantFactors& f, long long p) {
    if (!is_prime(p)) throw input_error("p_sylow: " + std::to_string(p) + " is not prime");
    PSylow result;
    for (const auto& factor : f.factors) {
        long v = p_valuation(factor, p);
        if (v == 0) continue;
        result.order_exponent += v;
        result.p_rank += 1;
        result.p_part_factors.push_back(pow_ll(p, static_cast<unsigned long>(v)));
    }
    return result;
}

}  // namespace iwg
