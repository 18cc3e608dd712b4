#include "siglap/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace siglap {

namespace {

void check_aligned(const Graph& g, const WeightVector& w) {
    if (w.size() != g.edge_count())
        throw std::invalid_argument("weight vector length " + std::to_string(w.size()) +
                                    " does not match edge count " + std::to_string(g.edge_count()));
    for (int e = 0; e < w.size(); ++e)
        if (!std::isfinite(w[e]))
            throw std::invalid_argument("weight " + std::to_string(e) + " is not finite");
}

}  // namespace

SymmetricMatrix laplacian(const Graph& g, const WeightVector& w) {
    check_aligned(g, w);
    const int n = g.vertex_count();
    SymmetricMatrix l(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        l.set(ed.u, ed.v, -w[e]);
    }
    // diagonal as the negated off-diagonal row sum keeps L * 1 = 0 exact
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) s += l(i, j);
        l.set(i, i, -s);
    }
    return l;
}

SymmetricMatrix equal_weight_laplacian(const Graph& g) {
    return laplacian(g, WeightVector::ones(g.edge_count()));
}

Matrix incidence_matrix(const Graph& g) {
    Matrix c(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        c(ed.u, e) = 1.0;
        c(ed.v, e) = 1.0;
    }
    return c;
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges()[static_cast<size_t>(v)];
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) pairs.emplace_back(inc[i], inc[j]);
    }
    // distinct edges of a simple graph share at most one vertex, so no pair
    // is generated twice
    return build_graph(g.edge_count(), std::move(pairs));
}

SymmetricMatrix line_graph_adjacency(const Graph& g) {
    const int e = g.edge_count();
    SymmetricMatrix a(e);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges()[static_cast<size_t>(v)];
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) a.set(inc[i], inc[j], 1.0);
    }
    return a;
}

void apply_line_graph_form(const Graph& g, const double* x, double* y) {
    const int n = g.vertex_count();
    const int e = g.edge_count();
    std::vector<double> vertex_sum(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < e; ++k) {
        const Edge& ed = g.edge(k);
        vertex_sum[static_cast<size_t>(ed.u)] += x[k];
        vertex_sum[static_cast<size_t>(ed.v)] += x[k];
    }
    for (int k = 0; k < e; ++k) {
        const Edge& ed = g.edge(k);
        y[k] = 2.0 * x[k] + vertex_sum[static_cast<size_t>(ed.u)] + vertex_sum[static_cast<size_t>(ed.v)];
    }
}

double hs_quadratic_form(const Graph& g, const WeightVector& w) {
    check_aligned(g, w);
    double sq = 0.0;
    for (int e = 0; e < w.size(); ++e) sq += w[e] * w[e];

    std::vector<double> vertex_sum(static_cast<size_t>(g.vertex_count()), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        vertex_sum[static_cast<size_t>(ed.u)] += w[e];
        vertex_sum[static_cast<size_t>(ed.v)] += w[e];
    }
    double deg_sq = 0.0;
    for (double s : vertex_sum) deg_sq += s * s;
    return 2.0 * sq + deg_sq;
}

FluctuationDecomposition decompose(const WeightVector& w) {
    if (w.size() < 1) throw std::invalid_argument("cannot decompose an empty weight vector");
    double sum = 0.0;
    for (int e = 0; e < w.size(); ++e) sum += w[e];
    const double q = sum / w.size();
    FluctuationDecomposition out;
    out.mean_q = q;
    out.fluctuation = w;
    for (int e = 0; e < w.size(); ++e) out.fluctuation[e] -= q;
    return out;
}

double equal_weight_lambda2(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("lambda2 needs at least 2 vertices");
    SymmetricMatrix l = equal_weight_laplacian(g);
    return min_eig_on_complement(l, std::vector<double>(static_cast<size_t>(n), 1.0));
}

}  // namespace siglap
