#include "iwg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "iwg/errors.hpp"

namespace iwg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw input_error("graph: vertex count must be positive");
    for (auto& [i, j] : edges_) {
        if (i == j) throw input_error("graph: loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_)
            throw input_error("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range 1.." + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw input_error("graph: duplicate edge (" + std::to_string(dup->first) + ", " +
                          std::to_string(dup->second) + ")");
    degree_.assign(n_ + 1, 0);
    for (const auto& [i, j] : edges_) {
        ++degree_[i];
        ++degree_[j];
    }
}

int Graph::degree(int v) const {
    if (v < 1 || v > n_) throw input_error("graph: vertex " + std::to_string(v) + " out of range");
    return degree_[v];
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count() + 1);
    for (const auto& [i, j] : g.edges()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

}  // namespace

bool is_connected(const Graph& g) {
    return component_count(g) == 1;
}

int component_count(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency(g);
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack;
    int components = 0;
    for (int root = 1; root <= n; ++root) {
        if (seen[root]) continue;
        ++components;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

namespace {

// Strips comments and whitespace; empty result means skip the line.
std::string strip_line(const std::string& raw) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    return line.substr(start);
}

[[noreturn]] void parse_fail(const char* what, int lineno, const std::string& msg) {
    throw input_error(std::string(what) + " line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<int> edge_lineno;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1) parse_fail("graph file", lineno, "expected a positive vertex count");
            std::string extra;
            if (ls >> extra) parse_fail("graph file", lineno, "unexpected token '" + extra + "' after vertex count");
            continue;
        }
        int i = 0, j = 0;
        if (!(ls >> i >> j)) parse_fail("graph file", lineno, "expected an edge 'i j'");
        std::string extra;
        if (ls >> extra) parse_fail("graph file", lineno, "unexpected token '" + extra + "'");
        if (i >= j) parse_fail("graph file", lineno, "edges must satisfy i < j");
        if (i < 1 || j > n) parse_fail("graph file", lineno, "edge out of range 1.." + std::to_string(n));
        if (std::find(edges.begin(), edges.end(), Edge{i, j}) != edges.end())
            parse_fail("graph file", lineno,
                       "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
        edges.push_back({i, j});
        edge_lineno.push_back(lineno);
    }
    if (n < 0) throw input_error("graph file: missing vertex count");
    return Graph(n, std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace iwg
