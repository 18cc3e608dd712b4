#include "siglap/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace siglap {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

int Graph::max_degree() const {
    int d = 0;
    for (int deg : degrees_) d = std::max(d, deg);
    return d;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key)
        return static_cast<int>(it - edges_.begin());
    return std::nullopt;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> pairs) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex id out of range in edge " + pair_str(u, v));
        if (u == v)
            throw std::invalid_argument("self-loop " + pair_str(u, v) + " not allowed");
        if (u > v) std::swap(u, v);
        g.edges_.push_back(Edge{u, v});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i] == g.edges_[i - 1])
            throw std::invalid_argument("duplicate edge " + pair_str(g.edges_[i].u, g.edges_[i].v));
    }

    g.degrees_.assign(static_cast<size_t>(n), 0);
    g.incident_.assign(static_cast<size_t>(n), {});
    for (size_t e = 0; e < g.edges_.size(); ++e) {
        const Edge& ed = g.edges_[e];
        g.degrees_[static_cast<size_t>(ed.u)]++;
        g.degrees_[static_cast<size_t>(ed.v)]++;
        g.incident_[static_cast<size_t>(ed.u)].push_back(static_cast<int>(e));
        g.incident_[static_cast<size_t>(ed.v)].push_back(static_cast<int>(e));
    }
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return build_graph(n, std::move(pairs));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) pairs.emplace_back(u, (u + 1) % n);
    return build_graph(n, std::move(pairs));
}

GraphClassification classify(const Graph& g) {
    GraphClassification c;
    c.max_degree = g.max_degree();

    const auto& degs = g.degrees();
    bool regular = true;
    for (int d : degs)
        if (d != degs[0]) { regular = false; break; }
    if (regular && !degs.empty()) c.regular_degree = degs[0];

    // connectivity by depth-first traversal from vertex 0
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges()[static_cast<size_t>(u)]) {
            const Edge& ed = g.edge(e);
            int w = (ed.u == u) ? ed.v : ed.u;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    c.connected = (reached == n);
    return c;
}

}  // namespace siglap
