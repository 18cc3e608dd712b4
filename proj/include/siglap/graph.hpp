#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace siglap {

// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with a fixed edge ordering.
//
// Edges are stored sorted lexicographically by (u, v) with u < v; the index
// of an edge in this ordering defines the coordinates of every edge-space
// vector and matrix built downstream, so two builds from the same pair
// multiset always agree. Immutable after construction.
class Graph {
public:
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
    int max_degree() const;

    // Edge index for the pair {u, v}, or nullopt if not adjacent.
    std::optional<int> edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

    // Per-vertex list of incident edge indices, ascending.
    const std::vector<std::vector<int>>& incident_edges() const { return incident_; }

    friend Graph build_graph(int n, std::vector<std::pair<int, int>> pairs);

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> incident_;
};

struct GraphClassification {
    bool connected = false;
    std::optional<int> regular_degree;  // present iff all degrees equal
    int max_degree = 0;
};

// Builds a canonical Graph. Throws std::invalid_argument on self-loops,
// duplicate pairs, or out-of-range vertex ids, naming the offending pair.
Graph build_graph(int n, std::vector<std::pair<int, int>> pairs);

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3

GraphClassification classify(const Graph& g);

}  // namespace siglap
