#pragma once

#include "siglap/dense.hpp"
#include "siglap/graph.hpp"
#include "siglap/weights.hpp"

namespace siglap {

// Mean/fluctuation split of a weight vector: w = mean_q * 1 + fluctuation,
// with <fluctuation, 1> = 0.
struct FluctuationDecomposition {
    double mean_q = 0.0;
    WeightVector fluctuation;
};

// Signed combinatorial Laplacian. Off-diagonal (i, j) is -w_ij for adjacent
// pairs; the diagonal is the negated off-diagonal row sum, so every row sums
// to zero exactly and the all-ones vector is in the kernel bit-for-bit.
SymmetricMatrix laplacian(const Graph& g, const WeightVector& w);

// Laplacian with every edge weight 1; diagonal equals the degree sequence.
SymmetricMatrix equal_weight_laplacian(const Graph& g);

// Unoriented incidence matrix: N x E, column e has 1 at both endpoints of
// edge e.
Matrix incidence_matrix(const Graph& g);

// Line graph: one vertex per edge of g, adjacent iff the edges share an
// endpoint. Vertex ids equal g's edge indices.
Graph line_graph(const Graph& g);
SymmetricMatrix line_graph_adjacency(const Graph& g);

// Applies 4I + A^LG to an edge vector in O(E) without materializing the
// line graph: (y)_e = 2 x_e + S_u + S_v where S_v sums x over edges at v.
void apply_line_graph_form(const Graph& g, const double* x, double* y);

// 2 * sum_e w_e^2 + sum_i (sum_{j~i} w_ij)^2; equals the squared Frobenius
// norm of laplacian(g, w).
double hs_quadratic_form(const Graph& g, const WeightVector& w);

FluctuationDecomposition decompose(const WeightVector& w);

// Second-smallest eigenvalue of the equal-weight Laplacian, computed from
// the deflated restriction to the complement of the all-ones vector.
double equal_weight_lambda2(const Graph& g);

}  // namespace siglap
