#include "iwg/voltage.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "iwg/errors.hpp"
#include "iwg/numutil.hpp"

namespace iwg {

long long VoltageAssignment::voltage_on(int i, int j) const {
    const bool forward = i < j;
    auto it = volts.find(forward ? Edge{i, j} : Edge{j, i});
    if (it == volts.end()) return 0;
    return forward ? it->second : -it->second;
}

VoltageAssignment make_voltage_assignment(Graph base, std::map<Edge, long long> volts,
                                          long long prime) {
    if (!is_prime(prime)) throw input_error("voltage assignment: " + std::to_string(prime) + " is not prime");
    for (const auto& [edge, a] : volts) {
        if (edge.first >= edge.second)
            throw input_error("voltage assignment: edge (" + std::to_string(edge.first) + ", " +
                              std::to_string(edge.second) + ") is not in standard orientation");
        if (!base.has_edge(edge.first, edge.second))
            throw input_error("voltage assignment: (" + std::to_string(edge.first) + ", " +
                              std::to_string(edge.second) + ") is not a base edge");
    }
    return VoltageAssignment{std::move(base), std::move(volts), prime};
}

VoltageAssignment parse_voltages(Graph base, std::istream& in, long long prime) {
    std::map<Edge, long long> volts;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        int i = 0, j = 0;
        long long a = 0;
        auto fail = [lineno](const std::string& msg) -> void {
            throw input_error("voltage file line " + std::to_string(lineno) + ": " + msg);
        };
        if (!(ls >> i >> j >> a)) fail("expected 'i j a'");
        std::string extra;
        if (ls >> extra) fail("unexpected token '" + extra + "'");
        if (i >= j) fail("edges must satisfy i < j");
        if (!base.has_edge(i, j))
            fail("(" + std::to_string(i) + ", " + std::to_string(j) + ") is not a base edge");
        if (volts.count({i, j}))
            fail("duplicate voltage for edge " + std::to_string(i) + " " + std::to_string(j));
        volts[{i, j}] = a;
    }
    return make_voltage_assignment(std::move(base), std::move(volts), prime);
}

VoltageAssignment parse_voltages_string(Graph base, const std::string& text, long long prime) {
    std::istringstream in(text);
    return parse_voltages(std::move(base), in, prime);
}

VoltageAssignment load_voltage_file(Graph base, const std::string& path, long long prime) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open voltage file: " + path);
    return parse_voltages(std::move(base), in, prime);
}

std::string format_voltages(const VoltageAssignment& va) {
    std::ostringstream out;
    for (const auto& [edge, a] : va.volts)
        if (a != 0) out << edge.first << ' ' << edge.second << ' ' << a << '\n';
    return out.str();
}

namespace {

// p^m as sheet count, guarded so n * p^m never exceeds max_vertices.
long long sheet_count(const VoltageAssignment& va, long long m, std::size_t max_vertices) {
    if (m < 0) throw input_error("derive: negative level");
    const long long n = va.base.vertex_count();
    long long q = 1;
    for (long long step = 0; step < m; ++step) {
        q *= va.prime;
        if (static_cast<unsigned long long>(q) * n > max_vertices)
            throw guard_error("derive: level " + std::to_string(m) + " needs " + std::to_string(n) +
                              "*" + std::to_string(va.prime) + "^" + std::to_string(m) +
                              " vertices, over the limit of " + std::to_string(max_vertices));
    }
    return q;
}

}  // namespace

DerivedGraph derive(const VoltageAssignment& va, long long m, std::size_t max_vertices) {
    const int n = va.base.vertex_count();
    const long long q = sheet_count(va, m, max_vertices);
    std::vector<Edge> edges;
    edges.reserve(va.base.edges().size() * static_cast<size_t>(q));
    for (const auto& [i, j] : va.base.edges()) {
        const long long a = mod_floor(va.voltage_on(i, j), q);
        for (long long g = 0; g < q; ++g) {
            int u = static_cast<int>(g * n + i);
            int v = static_cast<int>(((g + a) % q) * n + j);
            edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
        }
    }
    return DerivedGraph{Graph(static_cast<int>(n * q), std::move(edges)), n, m, q};
}

DerivedGraph intermediate_cover(const VoltageAssignment& va, long long m, long long k,
                                std::size_t max_vertices) {
    if (k > m) throw input_error("intermediate_cover: sublevel k exceeds level m");
    if (k < 0) throw input_error("intermediate_cover: negative sublevel");
    const long long qm = sheet_count(va, m, max_vertices);
    long long qk = 1;
    for (long long step = 0; step < k; ++step) qk *= va.prime;
    // Level-m voltages reduced modulo the subgroup p^k Z / p^m Z, then
    // re-derived; p^k | p^m makes this the mod-p^k reduction of the
    // original integers.
    std::map<Edge, long long> reduced;
    for (const auto& edge : va.base.edges()) {
        long long am = mod_floor(va.voltage_on(edge.first, edge.second), qm);
        reduced[edge] = am % qk;
    }
    VoltageAssignment sub{va.base, std::move(reduced), va.prime};
    return derive(sub, k, max_vertices);
}

std::vector<int> galois_action(const DerivedGraph& d, long long g) {
    const int n = d.base_n;
    const long long q = d.sheets;
    std::vector<int> perm(static_cast<size_t>(n) * q);
    const long long shift = mod_floor(g, q);
    for (long long h = 0; h < q; ++h) {
        const long long image_sheet = (h + shift) % q;
        for (int i = 1; i <= n; ++i)
            perm[h * n + i - 1] = static_cast<int>(image_sheet * n + i);
    }
    return perm;
}

std::vector<std::vector<GroupRingElement>> voltage_laplacian(const VoltageAssignment& va) {
    const int n = va.base.vertex_count();
    std::vector<std::vector<GroupRingElement>> L(n, std::vector<GroupRingElement>(n));
    for (int i = 1; i <= n; ++i) L[i - 1][i - 1] = GroupRingElement::constant(va.base.degree(i));
    for (const auto& [i, j] : va.base.edges()) {
        const long long a = va.voltage_on(i, j);
        L[i - 1][j - 1] = GroupRingElement::monomial(-1, a);
        L[j - 1][i - 1] = GroupRingElement::monomial(-1, -a);
    }
    return L;
}

}  // namespace iwg
