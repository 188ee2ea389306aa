#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace iwg {

using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph on vertices labeled 1..n. No loops, no
// multi-edges; edges are kept sorted.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;
    bool has_edge(int i, int j) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
};

bool is_connected(const Graph& g);

// Number of connected components (isolated vertices count).
int component_count(const Graph& g);

Graph complete_graph(int n);

// Text format: first non-comment line is the vertex count, every further
// line is "i j" with 1 <= i < j <= n. '#' starts a comment. Duplicate
// edges are rejected. Errors carry the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph_file(const std::string& path);

std::string format_graph(const Graph& g);

}  // namespace iwg
