#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "iwg/graph.hpp"
#include "iwg/group_ring.hpp"

namespace iwg {

inline constexpr std::size_t kDefaultMaxVertices = 100000;

// Integer voltages on the standard orientation (i < j) of a base graph.
// The reverse edge implicitly carries the negated voltage. Reducing the
// voltages mod p^m yields the level-m cover, so one integer assignment
// defines the whole tower.
struct VoltageAssignment {
    Graph base;
    std::map<Edge, long long> volts;  // keys are base edges (i < j); absent = 0
    long long prime = 2;

    // Signed voltage on the oriented edge i -> j (either orientation).
    long long voltage_on(int i, int j) const;
};

// Validates: p prime, every voltage key an existing base edge.
VoltageAssignment make_voltage_assignment(Graph base, std::map<Edge, long long> volts,
                                          long long prime);

// Voltage text format: non-comment lines "i j a" with i < j an existing
// base edge and a an integer; each edge at most once; absent edges carry
// voltage 0.
VoltageAssignment parse_voltages(Graph base, std::istream& in, long long prime);
VoltageAssignment parse_voltages_string(Graph base, const std::string& text, long long prime);
VoltageAssignment load_voltage_file(Graph base, const std::string& path, long long prime);

std::string format_voltages(const VoltageAssignment& va);

// Derived cover of the base graph with sheets indexed by Z/p^m Z. Vertex
// (i, g) has label g*n + i; the projection to the base forgets the sheet.
struct DerivedGraph {
    Graph graph;
    int base_n = 0;
    long long level = 0;   // m
    long long sheets = 1;  // p^m

    int vertex_label(int i, long long g) const { return static_cast<int>(g * base_n + i); }
    int project(int label) const { return (label - 1) % base_n + 1; }
    long long sheet_of(int label) const { return (label - 1) / base_n; }
};

// Level-m derived graph: for each base edge (i, j), i < j, with voltage a,
// edges {(i, g), (j, g + a mod p^m)} for every sheet g. Level 0 is the
// base itself.
DerivedGraph derive(const VoltageAssignment& va, long long m,
                    std::size_t max_vertices = kDefaultMaxVertices);

// Quotient of the level-m cover by the subgroup p^k Z / p^m Z: the level-m
// voltages reduced mod p^k, re-derived. Equals derive(va, k).
DerivedGraph intermediate_cover(const VoltageAssignment& va, long long m, long long k,
                                std::size_t max_vertices = kDefaultMaxVertices);

// Deck transformation (i, h) -> (i, h + g): returns the permutation as a
// vector perm with perm[label - 1] = image label.
std::vector<int> galois_action(const DerivedGraph& d, long long g);

// n x n matrix over the group ring: deg(v_i) on the diagonal, -x^{a_ij}
// for adjacent i < j (reverse orientation carries the negated exponent).
// Specializing x -> 1 recovers the ordinary Laplacian.
std::vector<std::vector<GroupRingElement>> voltage_laplacian(const VoltageAssignment& va);

}  // namespace iwg
